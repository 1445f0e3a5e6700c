#include "scenario.hpp"

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "birman_schwinger.hpp"
#include "complex_util.hpp"
#include "delta.hpp"
#include "error.hpp"
#include "gfun.hpp"
#include "potential.hpp"
#include "region.hpp"
#include "shooting.hpp"
#include "textio.hpp"

namespace halfline {

namespace {

using nlohmann::json;

[[noreturn]] void config_error(const std::string& msg) {
  throw std::domain_error("scenario: " + msg);
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const char* where) {
  for (const auto& item : obj.items()) {
    bool ok = false;
    for (const char* k : allowed)
      if (item.key() == k) ok = true;
    if (!ok) config_error(std::string("unknown key \"") + item.key() + "\" in " + where);
  }
}

double num_field(const json& obj, const char* key,
                 std::optional<double> fallback = std::nullopt) {
  if (!obj.contains(key)) {
    if (fallback) return *fallback;
    config_error(std::string("missing numeric field \"") + key + "\"");
  }
  const json& v = obj.at(key);
  if (!v.is_number()) config_error(std::string("field \"") + key + "\" must be a number");
  return v.get<double>();
}

long int_field(const json& obj, const char* key,
               std::optional<long> fallback = std::nullopt) {
  if (!obj.contains(key)) {
    if (fallback) return *fallback;
    config_error(std::string("missing integer field \"") + key + "\"");
  }
  const json& v = obj.at(key);
  if (!v.is_number_integer()) config_error(std::string("field \"") + key + "\" must be an integer");
  return v.get<long>();
}

std::string str_field(const json& obj, const char* key,
                      std::optional<std::string> fallback = std::nullopt) {
  if (!obj.contains(key)) {
    if (fallback) return *fallback;
    config_error(std::string("missing string field \"") + key + "\"");
  }
  const json& v = obj.at(key);
  if (!v.is_string()) config_error(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

struct Sink {
  std::string path;  // empty writes to stdout

  void deliver(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      std::cout.flush();
    } else {
      write_file_atomic(path, text);
    }
  }
};

std::string csv_bool(bool b) { return b ? "1" : "0"; }

BoundaryCondition parse_bc(const json& obj) {
  const std::string name = str_field(obj, "bc");
  if (name == "dirichlet") return BoundaryCondition::dirichlet();
  if (name == "neumann") return BoundaryCondition::neumann();
  if (name == "whole-line") return BoundaryCondition::whole_line();
  if (name == "robin") {
    const double sigma = num_field(obj, "sigma");
    return BoundaryCondition::robin(sigma);
  }
  config_error("bc must be one of dirichlet, neumann, robin, whole-line");
}

void reject_stray_sigma(const json& obj, const BoundaryCondition& bc) {
  if (obj.contains("sigma") && bc.kind != BoundaryKind::kRobin)
    config_error("sigma is only meaningful with bc = robin");
}

ShootingConfig parse_shooting_config(const json& obj) {
  ShootingConfig cfg;
  cfg.rel_tol = num_field(obj, "rel_tol", cfg.rel_tol);
  cfg.abs_tol = num_field(obj, "abs_tol", cfg.abs_tol);
  cfg.newton_tol = num_field(obj, "newton_tol", cfg.newton_tol);
  cfg.max_newton = static_cast<int>(int_field(obj, "max_newton", cfg.max_newton));
  if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0) || !(cfg.newton_tol > 0.0) ||
      cfg.max_newton < 1)
    config_error("shooting tolerances must be positive and max_newton >= 1");
  return cfg;
}

PotentialFn parse_potential(const json& obj, Domain default_domain) {
  if (!obj.is_object()) config_error("potential must be an object");
  const std::string family = str_field(obj, "family");
  Domain domain = default_domain;
  if (obj.contains("domain")) {
    const std::string d = str_field(obj, "domain");
    if (d == "halfline") domain = Domain::kHalfline;
    else if (d == "whole-line") domain = Domain::kWholeLine;
    else config_error("potential domain must be halfline or whole-line");
  }
  if (family == "gaussian-bumps") {
    check_keys(obj, {"family", "seed", "n_bumps", "amplitude", "support", "domain"},
               "gaussian-bumps potential");
    RandomPotentialSpec spec;
    spec.seed = static_cast<std::uint64_t>(int_field(obj, "seed", 0));
    spec.n_bumps = static_cast<int>(int_field(obj, "n_bumps", 3));
    spec.amplitude_scale = num_field(obj, "amplitude", 1.0);
    spec.support = num_field(obj, "support", 8.0);
    spec.domain = domain;
    return random_potential(spec);
  }
  if (family == "sech2") {
    check_keys(obj, {"family", "alpha_re", "alpha_im", "domain"}, "sech2 potential");
    if (domain != Domain::kWholeLine)
      config_error("sech2 is a whole-line potential");
    return sech2_potential({num_field(obj, "alpha_re", 1.0),
                            num_field(obj, "alpha_im", 0.0)});
  }
  if (family == "mollified-delta") {
    check_keys(obj, {"family", "c_re", "c_im", "b", "width", "domain"},
               "mollified-delta potential");
    if (domain != Domain::kHalfline)
      config_error("mollified-delta is a halfline potential");
    return mollified_delta({num_field(obj, "c_re"), num_field(obj, "c_im")},
                           num_field(obj, "b"), num_field(obj, "width", 1e-3));
  }
  if (family == "csv") {
    check_keys(obj, {"family", "path", "domain"}, "csv potential");
    const SampledPotential s = SampledPotential::read_csv(str_field(obj, "path"));
    return potential_from_samples(s, domain);
  }
  config_error("potential family must be gaussian-bumps, sech2, mollified-delta, or csv");
}

std::vector<complexd> parse_seeds(const json& obj, const PotentialFn& p) {
  if (!obj.contains("seeds")) return default_seed_grid(p.l1_norm());
  const json& arr = obj.at("seeds");
  if (!arr.is_array()) config_error("seeds must be an array of {re, im} objects");
  std::vector<complexd> seeds;
  for (const json& e : arr) {
    if (!e.is_object()) config_error("seeds must be an array of {re, im} objects");
    check_keys(e, {"re", "im"}, "seed");
    seeds.emplace_back(num_field(e, "re"), num_field(e, "im"));
  }
  return seeds;
}

json complex_json(const char* re_key, const char* im_key, complexd z) {
  return {{re_key, z.real()}, {im_key, z.imag()}};
}

// ---- commands ----

void cmd_curve(const json& sc, const Sink& sink, const std::string& format) {
  check_keys(sc, {"command", "out", "format", "n"}, "curve scenario");
  const long n = int_field(sc, "n", 720);
  if (n < 2 || n > 2000000) config_error("curve: n must be in [2, 2e6]");
  const CurveSample sample = curve_sample(static_cast<int>(n));
  if (format == "csv") {
    std::string text = "theta,radius4,re,im\n";
    for (const CurvePoint& pt : sample.points) {
      text += format_double(pt.theta);
      text += ',';
      text += format_double(pt.radius4);
      text += ',';
      text += format_double(pt.z.real());
      text += ',';
      text += format_double(pt.z.imag());
      text += '\n';
    }
    sink.deliver(text);
    if (!sink.path.empty()) {
      std::string ref = "theta,radius4,re,im\n";
      for (const CurvePoint& pt : sample.points) {
        ref += format_double(pt.theta);
        ref += ",1,";
        ref += format_double(std::cos(pt.theta));
        ref += ',';
        ref += format_double(std::sin(pt.theta));
        ref += '\n';
      }
      std::string stem = sink.path;
      const std::size_t dot = stem.rfind('.');
      const std::size_t slash = stem.find_last_of("/\\");
      if (dot != std::string::npos && (slash == std::string::npos || dot > slash))
        stem = stem.substr(0, dot);
      write_file_atomic(stem + "_line.csv", ref);
    }
    return;
  }
  json out;
  out["wholeline_radius4"] = sample.wholeline_radius4;
  json pts = json::array();
  for (const CurvePoint& pt : sample.points)
    pts.push_back({{"theta", pt.theta},
                   {"radius4", pt.radius4},
                   {"re", pt.z.real()},
                   {"im", pt.z.imag()}});
  out["points"] = std::move(pts);
  sink.deliver(out.dump(2) + "\n");
}

void cmd_gfun(const json& sc, const Sink& sink, const std::string& format) {
  check_keys(sc, {"command", "out", "format", "a", "a_min", "a_max", "count", "spacing"},
             "gfun scenario");
  std::vector<double> grid;
  if (sc.contains("a")) {
    grid.push_back(num_field(sc, "a"));
  } else {
    const double a0 = num_field(sc, "a_min");
    const double a1 = num_field(sc, "a_max");
    const long count = int_field(sc, "count", 100);
    const std::string spacing = str_field(sc, "spacing", "linear");
    if (count < 2 || count > 2000000) config_error("gfun: count must be in [2, 2e6]");
    if (!(a1 > a0)) config_error("gfun: a_max must exceed a_min");
    if (spacing == "log") {
      if (!(a0 > 0.0)) config_error("gfun: log spacing needs a_min > 0");
      for (long i = 0; i < count; ++i)
        grid.push_back(a0 * std::pow(a1 / a0, static_cast<double>(i) / (count - 1)));
    } else if (spacing == "linear") {
      for (long i = 0; i < count; ++i)
        grid.push_back(a0 + (a1 - a0) * static_cast<double>(i) / (count - 1));
    } else {
      config_error("gfun: spacing must be linear or log");
    }
  }
  std::vector<GFunResult> results(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) results[i] = g(grid[i]);
  if (format == "csv") {
    std::string text = "a,value,argmax,attained\n";
    for (const GFunResult& r : results) {
      text += format_double(r.a);
      text += ',';
      text += format_double(r.value);
      text += ',';
      if (r.argmax) text += format_double(*r.argmax);
      text += ',';
      text += csv_bool(r.attained);
      text += '\n';
    }
    sink.deliver(text);
    return;
  }
  json arr = json::array();
  for (const GFunResult& r : results) {
    json e = {{"a", r.a}, {"value", r.value}, {"attained", r.attained}};
    if (r.argmax) e["argmax"] = *r.argmax;
    arr.push_back(std::move(e));
  }
  sink.deliver(arr.dump(2) + "\n");
}

void cmd_extremal(const json& sc, const Sink& sink, const std::string& format) {
  check_keys(sc, {"command", "out", "format", "m", "theta"}, "extremal scenario");
  const ExtremalResult r = extremal_delta(num_field(sc, "m"), num_field(sc, "theta"));
  if (format == "csv") {
    std::string text = "m,theta,c_re,c_im,b,lambda_re,lambda_im,g_value,y0,bs_residual\n";
    text += format_double(num_field(sc, "m"));
    text += ',';
    text += format_double(num_field(sc, "theta"));
    text += ',';
    text += format_double(r.delta.c.real());
    text += ',';
    text += format_double(r.delta.c.imag());
    text += ',';
    text += format_double(r.delta.b);
    text += ',';
    text += format_double(r.lambda.real());
    text += ',';
    text += format_double(r.lambda.imag());
    text += ',';
    text += format_double(r.g_value);
    text += ',';
    text += format_double(r.y0);
    text += ',';
    text += format_double(r.bs_residual);
    text += '\n';
    sink.deliver(text);
    return;
  }
  json out = complex_json("c_re", "c_im", r.delta.c);
  out.update(complex_json("lambda_re", "lambda_im", r.lambda));
  out["b"] = r.delta.b;
  out["g_value"] = r.g_value;
  out["y0"] = r.y0;
  out["bs_residual"] = r.bs_residual;
  sink.deliver(out.dump(2) + "\n");
}

void cmd_delta_eigs(const json& sc, const Sink& sink, const std::string& format) {
  check_keys(sc, {"command", "out", "format", "c_re", "c_im", "b", "box"},
             "delta-eigs scenario");
  DeltaPotential d;
  d.c = {num_field(sc, "c_re"), num_field(sc, "c_im")};
  d.b = num_field(sc, "b");
  std::vector<complexd> eigs;
  if (sc.contains("box")) {
    const json& bj = sc.at("box");
    if (!bj.is_object()) config_error("delta-eigs: box must be an object");
    check_keys(bj, {"re_min", "re_max", "im_min", "im_max"}, "delta-eigs box");
    SBox box{num_field(bj, "re_min"), num_field(bj, "re_max"),
             num_field(bj, "im_min"), num_field(bj, "im_max")};
    eigs = dirichlet_delta_eigenvalues(d, box);
  } else {
    eigs = dirichlet_delta_eigenvalues(d);
  }
  if (format == "csv") {
    std::string text = "re,im\n";
    for (const complexd& z : eigs) {
      text += format_double(z.real());
      text += ',';
      text += format_double(z.imag());
      text += '\n';
    }
    sink.deliver(text);
    return;
  }
  json arr = json::array();
  for (const complexd& z : eigs) arr.push_back(complex_json("re", "im", z));
  json out;
  out["eigenvalues"] = std::move(arr);
  sink.deliver(out.dump(2) + "\n");
}

void cmd_verify_bs(const json& sc, const Sink& sink, const std::string& format) {
  check_keys(sc, {"command", "out", "format", "potential", "mu_re", "mu_im", "bc",
                  "sigma", "nodes"},
             "verify-bs scenario");
  const BoundaryCondition bc = parse_bc(sc);
  reject_stray_sigma(sc, bc);
  if (!sc.contains("potential")) config_error("verify-bs: missing potential");
  const Domain dom = bc.kind == BoundaryKind::kWholeLine ? Domain::kWholeLine
                                                         : Domain::kHalfline;
  const PotentialFn p = parse_potential(sc.at("potential"), dom);
  const long nodes = int_field(sc, "nodes", 400);
  if (nodes < 2 || nodes > 20000) config_error("verify-bs: nodes must be in [2, 20000]");
  const complexd mu(num_field(sc, "mu_re"), num_field(sc, "mu_im"));
  const SampledPotential sampled = sample_potential(p, static_cast<int>(nodes));
  const NormBoundReport rep = verify_norm_bound(sampled, mu, bc);
  if (format == "csv") {
    std::string text = "norm,rhs,ok\n";
    text += format_double(rep.norm);
    text += ',';
    text += format_double(rep.rhs);
    text += ',';
    text += csv_bool(rep.ok);
    text += '\n';
    sink.deliver(text);
  } else {
    json out = {{"norm", rep.norm}, {"rhs", rep.rhs}, {"ok", rep.ok}};
    sink.deliver(out.dump(2) + "\n");
  }
  if (!rep.ok)
    throw NumericError("verify-bs: discrete norm exceeds the analytic bound");
}

void cmd_shoot(const json& sc, const Sink& sink, const std::string& format) {
  check_keys(sc, {"command", "out", "format", "potential", "bc", "sigma", "seeds",
                  "rel_tol", "abs_tol", "newton_tol", "max_newton"},
             "shoot scenario");
  const BoundaryCondition bc = parse_bc(sc);
  reject_stray_sigma(sc, bc);
  if (!sc.contains("potential")) config_error("shoot: missing potential");
  const Domain dom = bc.kind == BoundaryKind::kWholeLine ? Domain::kWholeLine
                                                         : Domain::kHalfline;
  const PotentialFn p = parse_potential(sc.at("potential"), dom);
  const ShootingConfig cfg = parse_shooting_config(sc);
  const std::vector<complexd> seeds = parse_seeds(sc, p);
  const EigenSearch search = find_eigenvalues(p, bc, seeds, cfg);
  if (format == "csv") {
    std::string text = "re,im\n";
    for (const complexd& z : search.roots) {
      text += format_double(z.real());
      text += ',';
      text += format_double(z.imag());
      text += '\n';
    }
    sink.deliver(text);
    return;
  }
  json arr = json::array();
  for (const complexd& z : search.roots) arr.push_back(complex_json("re", "im", z));
  json out;
  out["eigenvalues"] = std::move(arr);
  out["converged_seeds"] = search.converged_seeds;
  out["failed_seeds"] = search.failed_seeds;
  sink.deliver(out.dump(2) + "\n");
}

void cmd_audit(const json& sc, const Sink& sink, const std::string& format) {
  check_keys(sc, {"command", "out", "format", "potential", "bc", "sigma", "seeds",
                  "rel_tol", "abs_tol", "newton_tol", "max_newton",
                  "certificate_nodes"},
             "audit scenario");
  const BoundaryCondition bc = parse_bc(sc);
  reject_stray_sigma(sc, bc);
  if (!sc.contains("potential")) config_error("audit: missing potential");
  const Domain dom = bc.kind == BoundaryKind::kWholeLine ? Domain::kWholeLine
                                                         : Domain::kHalfline;
  const PotentialFn p = parse_potential(sc.at("potential"), dom);
  const ShootingConfig cfg = parse_shooting_config(sc);
  const std::vector<complexd> seeds = parse_seeds(sc, p);
  const long nodes = int_field(sc, "certificate_nodes", 400);
  if (nodes < 2 || nodes > 20000)
    config_error("audit: certificate_nodes must be in [2, 20000]");
  const AuditReport rep = enclosure_audit(p, bc, seeds, cfg, static_cast<int>(nodes));
  if (format == "csv") {
    std::string text = "lambda_re,lambda_im,margin,certificate,inside\n";
    for (const AuditEntry& e : rep.entries) {
      text += format_double(e.lambda.real());
      text += ',';
      text += format_double(e.lambda.imag());
      text += ',';
      text += format_double(e.margin);
      text += ',';
      text += format_double(e.certificate);
      text += ',';
      text += csv_bool(e.inside);
      text += '\n';
    }
    sink.deliver(text);
  } else {
    json arr = json::array();
    for (const AuditEntry& e : rep.entries) {
      json item = complex_json("lambda_re", "lambda_im", e.lambda);
      item["margin"] = e.margin;
      item["certificate"] = e.certificate;
      item["inside"] = e.inside;
      arr.push_back(std::move(item));
    }
    json out;
    out["v_norm"] = rep.v_norm;
    out["pass"] = rep.pass;
    out["converged_seeds"] = rep.converged_seeds;
    out["failed_seeds"] = rep.failed_seeds;
    out["eigenvalues"] = std::move(arr);
    sink.deliver(out.dump(2) + "\n");
  }
  if (!rep.pass)
    throw NumericError("audit: an eigenvalue violates the enclosure or its certificate");
}

void cmd_keller(const json& sc, const Sink& sink, const std::string& format) {
  check_keys(sc, {"command", "out", "format", "gamma", "gammas"}, "keller scenario");
  std::vector<double> gammas;
  if (sc.contains("gamma")) {
    gammas.push_back(num_field(sc, "gamma"));
  } else if (sc.contains("gammas")) {
    const json& arr = sc.at("gammas");
    if (!arr.is_array()) config_error("keller: gammas must be an array");
    for (const json& e : arr) {
      if (!e.is_number()) config_error("keller: gammas must contain numbers");
      gammas.push_back(e.get<double>());
    }
  } else {
    config_error("keller: provide gamma or gammas");
  }
  if (format == "csv") {
    std::string text = "gamma,keller_constant,cosh_ratio_sup,t_star\n";
    for (double gamma : gammas) {
      const double kc = keller_constant(gamma);
      const CoshRatioSup cs = cosh_ratio_sup(gamma);
      text += format_double(gamma);
      text += ',';
      text += format_double(kc);
      text += ',';
      text += format_double(cs.sup);
      text += ',';
      text += format_double(cs.t_star);
      text += '\n';
    }
    sink.deliver(text);
    return;
  }
  json arr = json::array();
  for (double gamma : gammas) {
    const double kc = keller_constant(gamma);
    const CoshRatioSup cs = cosh_ratio_sup(gamma);
    arr.push_back({{"gamma", gamma},
                   {"keller_constant", kc},
                   {"cosh_ratio_sup", cs.sup},
                   {"t_star", cs.t_star}});
  }
  sink.deliver(arr.dump(2) + "\n");
}

}  // namespace

void run_scenario_json(const std::string& json_text) {
  json sc;
  try {
    sc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    config_error(std::string("invalid json: ") + e.what());
  }
  if (!sc.is_object()) config_error("top level must be an object");
  const std::string command = str_field(sc, "command");
  Sink sink{str_field(sc, "out", "")};
  std::string format = str_field(sc, "format", "");
  if (format.empty()) {
    const bool json_default = command == "extremal" || command == "verify-bs" ||
                              command == "shoot" || command == "audit";
    format = json_default ? "json" : "csv";
  }
  if (format != "csv" && format != "json")
    config_error("format must be csv or json");

  if (command == "curve") return cmd_curve(sc, sink, format);
  if (command == "gfun") return cmd_gfun(sc, sink, format);
  if (command == "extremal") return cmd_extremal(sc, sink, format);
  if (command == "delta-eigs") return cmd_delta_eigs(sc, sink, format);
  if (command == "verify-bs") return cmd_verify_bs(sc, sink, format);
  if (command == "shoot") return cmd_shoot(sc, sink, format);
  if (command == "audit") return cmd_audit(sc, sink, format);
  if (command == "keller") return cmd_keller(sc, sink, format);
  config_error("unknown command \"" + command + "\"");
}

void run_scenario_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    run_scenario_json(buf.str());
    return;
  }
  run_scenario_json(read_file(path));
}

}  // namespace halfline
