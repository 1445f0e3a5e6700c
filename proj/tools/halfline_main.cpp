// Command-line front end: each subcommand assembles one scenario object
// and hands it to the library, so the CLI and the JSON scenario runner
// accept exactly the same inputs.

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "halfline/halfline.h"

namespace {

using nlohmann::json;

int exit_code_for(hs_status s) {
  switch (s) {
    case HS_OK:
      return 0;
    case HS_ERR_DOMAIN:
    case HS_ERR_IO:
      return 1;
    default:
      return 2;
  }
}

int run_json(const json& sc) {
  const std::string text = sc.dump();
  const hs_status s = hs_scenario_run_json(text.c_str());
  if (s != HS_OK) std::fprintf(stderr, "halfline: %s\n", hs_last_error());
  return exit_code_for(s);
}

struct Builder {
  CLI::App* cmd;
  std::shared_ptr<json> sc;

  // Options write into the scenario only when given, so defaults live in
  // one place (the scenario runner).
  void num(const std::string& flag, const char* key, const std::string& desc) {
    auto sc_ = sc;
    std::string k = key;
    cmd->add_option_function<double>(
        flag, [sc_, k](double v) { (*sc_)[k] = v; }, desc);
  }
  void integer(const std::string& flag, const char* key, const std::string& desc) {
    auto sc_ = sc;
    std::string k = key;
    cmd->add_option_function<long long>(
        flag, [sc_, k](long long v) { (*sc_)[k] = v; }, desc);
  }
  void str(const std::string& flag, const char* key, const std::string& desc) {
    auto sc_ = sc;
    std::string k = key;
    cmd->add_option_function<std::string>(
        flag, [sc_, k](const std::string& v) { (*sc_)[k] = v; }, desc);
  }

  void pot_num(const std::string& flag, const char* key, const std::string& desc) {
    auto sc_ = sc;
    std::string k = key;
    cmd->add_option_function<double>(
        flag, [sc_, k](double v) { (*sc_)["potential"][k] = v; }, desc);
  }
  void pot_int(const std::string& flag, const char* key, const std::string& desc) {
    auto sc_ = sc;
    std::string k = key;
    cmd->add_option_function<long long>(
        flag, [sc_, k](long long v) { (*sc_)["potential"][k] = v; }, desc);
  }
  void pot_str(const std::string& flag, const char* key, const std::string& desc) {
    auto sc_ = sc;
    std::string k = key;
    cmd->add_option_function<std::string>(
        flag, [sc_, k](const std::string& v) { (*sc_)["potential"][k] = v; },
        desc);
  }
};

Builder make_command(CLI::App& app, const char* name, const char* help,
                     const char* command, int* rc) {
  CLI::App* cmd = app.add_subcommand(name, help);
  auto sc = std::make_shared<json>();
  (*sc)["command"] = command;
  cmd->callback([sc, rc] { *rc = run_json(*sc); });
  Builder b{cmd, sc};
  b.str("--out", "out", "write the result to this file instead of stdout");
  b.str("--format", "format", "output format: csv or json");
  return b;
}

void add_bc(Builder& b) {
  b.str("--bc", "bc", "boundary condition: dirichlet, neumann, robin, whole-line");
  b.num("--sigma", "sigma", "Robin parameter (bc robin only), >= 0");
}

void add_potential(Builder& b) {
  b.pot_str("--potential", "family",
            "potential family: gaussian-bumps, sech2, mollified-delta, csv");
  b.pot_str("--domain", "domain", "potential domain: halfline or whole-line");
  b.pot_int("--seed", "seed", "gaussian-bumps: RNG seed");
  b.pot_int("--n-bumps", "n_bumps", "gaussian-bumps: number of bumps");
  b.pot_num("--amplitude", "amplitude", "gaussian-bumps: amplitude scale");
  b.pot_num("--support", "support", "gaussian-bumps: support radius");
  b.pot_num("--alpha-re", "alpha_re", "sech2: Re alpha");
  b.pot_num("--alpha-im", "alpha_im", "sech2: Im alpha");
  b.pot_num("--c-re", "c_re", "mollified-delta: Re c");
  b.pot_num("--c-im", "c_im", "mollified-delta: Im c");
  b.pot_num("--b", "b", "mollified-delta: center");
  b.pot_num("--width", "width", "mollified-delta: mollifier width");
  b.pot_str("--path", "path", "csv: sample file with columns x,re_v,im_v");
}

void add_shooting(Builder& b) {
  b.num("--rel-tol", "rel_tol", "integrator relative tolerance");
  b.num("--abs-tol", "abs_tol", "integrator absolute tolerance");
  b.num("--newton-tol", "newton_tol", "Newton tolerance on the miss value");
  b.integer("--max-newton", "max_newton", "Newton iteration cap");
}

void add_seeds(Builder& b) {
  auto sc = b.sc;
  b.cmd->add_option_function<std::vector<double>>(
      "--seeds",
      [sc](const std::vector<double>& v) {
        if (v.size() % 2 != 0)
          throw CLI::ValidationError("--seeds", "expects RE IM pairs");
        json arr = json::array();
        for (std::size_t i = 0; i + 1 < v.size(); i += 2)
          arr.push_back({{"re", v[i]}, {"im", v[i + 1]}});
        (*sc)["seeds"] = std::move(arr);
      },
      "search seeds as RE IM pairs (replaces the default grid)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral enclosures for halfline Schrodinger operators"};
  app.require_subcommand(1);
  int rc = 0;

  {
    Builder b = make_command(app, "curve", "sample the Dirichlet boundary curve",
                             "curve", &rc);
    b.integer("--n", "n", "number of interior angles (default 720)");
  }
  {
    Builder b = make_command(app, "gfun", "evaluate the extremal g function",
                             "gfun", &rc);
    b.num("--a", "a", "single evaluation point");
    b.num("--a-min", "a_min", "grid start");
    b.num("--a-max", "a_max", "grid end");
    b.integer("--count", "count", "grid size (default 100)");
    b.str("--spacing", "spacing", "grid spacing: linear or log");
  }
  {
    Builder b = make_command(app, "extremal",
                             "construct the extremal delta potential", "extremal",
                             &rc);
    b.num("--m", "m", "integral norm of the potential");
    b.num("--theta", "theta", "target angle in (0, 2*pi), theta != pi");
  }
  {
    Builder b = make_command(app, "delta-eigs",
                             "eigenvalues of a Dirichlet delta potential",
                             "delta-eigs", &rc);
    b.num("--c-re", "c_re", "Re of the coupling");
    b.num("--c-im", "c_im", "Im of the coupling");
    b.num("--b", "b", "delta location, > 0");
    auto sc = b.sc;
    b.cmd->add_option_function<std::vector<double>>(
        "--box",
        [sc](const std::vector<double>& v) {
          (*sc)["box"] = {{"re_min", v[0]},
                          {"re_max", v[1]},
                          {"im_min", v[2]},
                          {"im_max", v[3]}};
        },
        "search box in s = sqrt(-lambda): RE_MIN RE_MAX IM_MIN IM_MAX")
        ->expected(4);
  }
  {
    Builder b = make_command(app, "verify-bs",
                             "check the discrete Birman-Schwinger norm bound",
                             "verify-bs", &rc);
    add_potential(b);
    add_bc(b);
    b.num("--mu-re", "mu_re", "Re mu, where lambda = -mu");
    b.num("--mu-im", "mu_im", "Im mu");
    b.integer("--nodes", "nodes", "quadrature nodes (default 400)");
  }
  {
    Builder b = make_command(app, "shoot",
                             "locate eigenvalues by complex shooting", "shoot",
                             &rc);
    add_potential(b);
    add_bc(b);
    add_shooting(b);
    add_seeds(b);
  }
  {
    Builder b = make_command(app, "audit",
                             "find eigenvalues and certify the enclosure",
                             "audit", &rc);
    add_potential(b);
    add_bc(b);
    add_shooting(b);
    add_seeds(b);
    b.integer("--certificate-nodes", "certificate_nodes",
              "nodes for the certificate matrix (default 400)");
  }
  {
    Builder b = make_command(app, "keller",
                             "Keller-type constants for power potentials",
                             "keller", &rc);
    b.num("--gamma", "gamma", "single exponent, > 1/2");
    auto sc = b.sc;
    b.cmd->add_option_function<std::vector<double>>(
        "--gammas",
        [sc](const std::vector<double>& v) { (*sc)["gammas"] = v; },
        "list of exponents")
        ->expected(-1);
  }
  {
    CLI::App* cmd =
        app.add_subcommand("run", "execute a scenario file (\"-\" for stdin)");
    auto path = std::make_shared<std::string>();
    cmd->add_option("scenario", *path, "scenario JSON path")->required();
    cmd->callback([path, &rc] {
      const hs_status s = hs_scenario_run_file(path->c_str());
      if (s != HS_OK) std::fprintf(stderr, "halfline: %s\n", hs_last_error());
      rc = exit_code_for(s);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  return rc;
}
