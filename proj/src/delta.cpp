#include "delta.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "error.hpp"
#include "gfun.hpp"

namespace halfline {

namespace {

// 1 - e^{-z}, stable for small |z|.
complexd one_minus_exp_neg(complexd z) {
  if (std::abs(z) > 1e-3) return 1.0 - std::exp(-z);
  complexd p = -z / 720.0 + 1.0 / 120.0;
  p = p * z - 1.0 / 24.0;
  p = p * z + 1.0 / 6.0;
  p = p * z - 0.5;
  p = p * z + 1.0;
  return z * p;
}

struct HFun {
  complexd c;
  double b;

  complexd val(complexd s) const {
    return c * one_minus_exp_neg(2.0 * b * s) - 2.0 * s;
  }
  complexd deriv(complexd s) const {
    return 2.0 * b * c * std::exp(-2.0 * b * s) - 2.0;
  }
  // sup of |h'| over any region with Re s >= re_min.
  double deriv_bound(double re_min) const {
    return 2.0 + 2.0 * b * std::abs(c) * std::exp(-2.0 * b * re_min);
  }
};

struct BoundaryTooClose {};

struct WindingCtx {
  HFun h;
  double near_tol;  // |h| below this on the contour means a root scrapes it
};

// Phase increment of h along [z0, z1]. A segment is accepted once h is
// certified to stay inside a zero-free disc, so the chord argument is the
// true branch increment; otherwise bisect.
double edge_winding(const WindingCtx& ctx, complexd z0, complexd z1,
                    complexd w0, complexd w1, int depth) {
  const double m0 = std::abs(w0), m1 = std::abs(w1);
  if (m0 < ctx.near_tol || m1 < ctx.near_tol) throw BoundaryTooClose{};
  const double bound = ctx.h.deriv_bound(std::min(z0.real(), z1.real()));
  if (bound * std::abs(z1 - z0) <= 0.5 * std::min(m0, m1))
    return std::arg(w1 / w0);
  if (depth <= 0) throw BoundaryTooClose{};
  const complexd zm = 0.5 * (z0 + z1);
  const complexd wm = ctx.h.val(zm);
  return edge_winding(ctx, z0, zm, w0, wm, depth - 1) +
         edge_winding(ctx, zm, z1, wm, w1, depth - 1);
}

int box_winding(const WindingCtx& ctx, const SBox& box) {
  const complexd z0(box.re_min, box.im_min), z1(box.re_max, box.im_min);
  const complexd z2(box.re_max, box.im_max), z3(box.re_min, box.im_max);
  const complexd w0 = ctx.h.val(z0), w1 = ctx.h.val(z1);
  const complexd w2 = ctx.h.val(z2), w3 = ctx.h.val(z3);
  const double total = edge_winding(ctx, z0, z1, w0, w1, 52) +
                       edge_winding(ctx, z1, z2, w1, w2, 52) +
                       edge_winding(ctx, z2, z3, w2, w3, 52) +
                       edge_winding(ctx, z3, z0, w3, w0, 52);
  const double turns = total / (2.0 * kPi);
  const int n = static_cast<int>(std::lround(turns));
  if (std::abs(turns - n) > 0.25)
    throw NumericError("delta eigenvalues: winding number did not round cleanly");
  if (n < 0)
    throw NumericError("delta eigenvalues: negative winding number");
  return n;
}

bool inside(const SBox& box, complexd s, double pad) {
  return s.real() >= box.re_min - pad && s.real() <= box.re_max + pad &&
         s.imag() >= box.im_min - pad && s.imag() <= box.im_max + pad;
}

// Newton from a few starting points in the cell; accepts only a converged
// root lying in the (slightly padded) cell.
bool newton_in_box(const WindingCtx& ctx, const SBox& box,
                   std::vector<complexd>& out) {
  const double tol = 1e-12 * (1.0 + std::abs(ctx.h.c));
  const double diag = std::hypot(box.re_max - box.re_min, box.im_max - box.im_min);
  const double pad = 1e-9 + 1e-9 * diag;
  const complexd center(0.5 * (box.re_min + box.re_max),
                        0.5 * (box.im_min + box.im_max));
  const complexd starts[5] = {
      center,
      complexd(0.75 * box.re_min + 0.25 * box.re_max, 0.75 * box.im_min + 0.25 * box.im_max),
      complexd(0.25 * box.re_min + 0.75 * box.re_max, 0.75 * box.im_min + 0.25 * box.im_max),
      complexd(0.75 * box.re_min + 0.25 * box.re_max, 0.25 * box.im_min + 0.75 * box.im_max),
      complexd(0.25 * box.re_min + 0.75 * box.re_max, 0.25 * box.im_min + 0.75 * box.im_max)};
  for (const complexd& start : starts) {
    complexd s = start;
    bool ok = false;
    for (int it = 0; it < 80; ++it) {
      const complexd w = ctx.h.val(s);
      if (std::abs(w) <= tol) {
        ok = true;
        break;
      }
      const complexd d = ctx.h.deriv(s);
      if (std::abs(d) < 1e-14) break;
      complexd step = w / d;
      const double cap = 2.0 * diag;
      if (std::abs(step) > cap) step *= cap / std::abs(step);
      s -= step;
      if (!inside(box, s, 8.0 * diag)) break;
    }
    if (ok && inside(box, s, pad)) {
      for (int extra = 0; extra < 2; ++extra) {
        const complexd d = ctx.h.deriv(s);
        if (std::abs(d) < 1e-14) break;
        s -= ctx.h.val(s) / d;
      }
      out.push_back(s);
      return true;
    }
  }
  return false;
}

constexpr double kSplitFractions[] = {0.5, 0.53125, 0.46875, 0.5625,
                                      0.4375, 0.59375, 0.40625};

void collect_roots(const WindingCtx& ctx, const SBox& box, int winding,
                   int depth, std::vector<complexd>& out) {
  if (winding == 0) return;
  if (winding == 1 && newton_in_box(ctx, box, out)) return;
  if (depth <= 0)
    throw NumericError("delta eigenvalues: subdivision depth exhausted");
  const bool vertical = (box.re_max - box.re_min) >= (box.im_max - box.im_min);
  for (double frac : kSplitFractions) {
    SBox left = box, right = box;
    if (vertical) {
      const double cut = box.re_min + frac * (box.re_max - box.re_min);
      left.re_max = cut;
      right.re_min = cut;
    } else {
      const double cut = box.im_min + frac * (box.im_max - box.im_min);
      left.im_max = cut;
      right.im_min = cut;
    }
    try {
      const int wl = box_winding(ctx, left);
      const int wr = box_winding(ctx, right);
      if (wl + wr != winding)
        throw NumericError("delta eigenvalues: winding count mismatch on split");
      collect_roots(ctx, left, wl, depth - 1, out);
      collect_roots(ctx, right, wr, depth - 1, out);
      return;
    } catch (const BoundaryTooClose&) {
      continue;  // a root scrapes this cut; try the next fraction
    }
  }
  throw NumericError("delta eigenvalues: root too close to every split line");
}

SBox jittered(const SBox& box, int attempt) {
  if (attempt == 0) return box;
  const double fx = 1e-7 * attempt * (box.re_max - box.re_min);
  const double fy = 1e-7 * attempt * (box.im_max - box.im_min);
  SBox b = box;
  const int sign = (attempt % 2 == 0) ? 1 : -1;
  b.re_min += sign * 0.7 * fx;
  b.re_max += sign * fx;
  b.im_min -= sign * fy;
  b.im_max += sign * 0.9 * fy;
  return b;
}

}  // namespace

complexd dirichlet_bs_number(const DeltaPotential& d, complexd mu) {
  require_finite(d.c, "c");
  require_finite(d.b, "b");
  if (!(d.b >= 0.0)) throw std::domain_error("delta potential: b must be >= 0");
  const complexd s = sqrt_mu(mu);
  return d.c * one_minus_exp_neg(2.0 * d.b * s) / (2.0 * s);
}

std::vector<complexd> dirichlet_delta_eigenvalues(const DeltaPotential& d) {
  const double r = std::abs(d.c);
  if (r == 0.0) return {};
  SBox box{1e-6, 2.0 * r, -2.0 * r, 2.0 * r};
  return dirichlet_delta_eigenvalues(d, box);
}

std::vector<complexd> dirichlet_delta_eigenvalues(const DeltaPotential& d,
                                                  const SBox& box) {
  require_finite(d.c, "c");
  require_finite(d.b, "b");
  if (!(d.b >= 0.0)) throw std::domain_error("delta potential: b must be >= 0");
  if (!(box.re_min > 0.0) || !(box.re_max > box.re_min) ||
      !(box.im_max > box.im_min))
    throw std::domain_error("delta eigenvalues: box must satisfy 0 < re_min < re_max, im_min < im_max");
  if (d.c == complexd(0.0)) return {};

  WindingCtx ctx{HFun{d.c, d.b}, 0.0};
  const double scale = 1.0 + std::abs(d.c) +
                       std::max(std::abs(box.re_max), std::max(std::abs(box.im_min), std::abs(box.im_max)));
  ctx.near_tol = 1e-13 * scale;

  for (int attempt = 0; attempt < 7; ++attempt) {
    const SBox outer = jittered(box, attempt);
    if (!(outer.re_min > 0.0)) continue;
    try {
      const int w = box_winding(ctx, outer);
      std::vector<complexd> roots;
      collect_roots(ctx, outer, w, 44, roots);
      if (static_cast<int>(roots.size()) != w)
        throw NumericError("delta eigenvalues: found fewer roots than the winding count");
      std::sort(roots.begin(), roots.end(), [](complexd a, complexd b2) {
        return a.real() != b2.real() ? a.real() < b2.real() : a.imag() < b2.imag();
      });
      std::vector<complexd> lambdas;
      for (const complexd& s : roots) {
        const complexd lam = -s * s;
        bool dup = false;
        for (const complexd& prev : lambdas)
          if (std::abs(prev - lam) <= 1e-9) dup = true;
        if (!dup) lambdas.push_back(lam);
      }
      std::sort(lambdas.begin(), lambdas.end(), [](complexd a, complexd b2) {
        return a.real() != b2.real() ? a.real() < b2.real() : a.imag() < b2.imag();
      });
      return lambdas;
    } catch (const BoundaryTooClose&) {
      continue;
    }
  }
  throw NumericError("delta eigenvalues: a root stays too close to the search boundary");
}

ExtremalResult extremal_delta(double m, double theta) {
  require_finite(m, "m");
  require_finite(theta, "theta");
  if (!(m > 0.0)) throw std::domain_error("extremal_delta: m must be > 0");
  if (!(theta > 0.0 && theta < 2.0 * kPi))
    throw std::domain_error("extremal_delta: theta must lie in (0, 2*pi)");
  if (theta == kPi)
    throw std::domain_error("extremal_delta: theta = pi has no attaining delta potential");

  const double a = std::cos(0.5 * theta) / std::sin(0.5 * theta);
  const GFunResult gr = g(a);
  const double gv = gr.value;
  const double y0 = gr.argmax.value_or(0.0);
  const double mod = 0.25 * m * m * gv * gv;          // |lambda|
  const double root_mod = 0.5 * m * gv;               // |lambda|^{1/2}
  const complexd s = std::polar(root_mod, 0.5 * (theta - kPi));
  const double b = y0 / (2.0 * root_mod * std::sin(0.5 * theta));

  ExtremalResult res;
  res.delta.b = b;
  res.delta.c = 2.0 * s / one_minus_exp_neg(2.0 * s * b);
  res.lambda = std::polar(mod, theta);
  res.g_value = gv;
  res.y0 = y0;
  res.bs_residual =
      std::abs(res.delta.c * one_minus_exp_neg(2.0 * s * b) / (2.0 * s) - 1.0);
  return res;
}

complexd neumann_delta_eigenvalue(complexd c) {
  require_finite(c, "c");
  if (!(c.real() > 0.0))
    throw std::domain_error("neumann_delta_eigenvalue: Re c must be > 0");
  return -c * c;
}

complexd robin_delta_eigenvalue(complexd c, double sigma) {
  require_finite(c, "c");
  require_finite(sigma, "sigma");
  if (!(sigma >= 0.0)) throw std::domain_error("robin: sigma must be >= 0");
  const complexd shifted = c - sigma;
  if (!(shifted.real() > 0.0))
    throw std::domain_error("robin_delta_eigenvalue: Re(c - sigma) must be > 0");
  return -shifted * shifted;
}

std::vector<RobinSharpnessPoint> robin_sharpness_sequence(
    double theta, double sigma, const std::vector<double>& k_values) {
  require_finite(theta, "theta");
  require_finite(sigma, "sigma");
  if (!(theta > 0.0 && theta < 2.0 * kPi))
    throw std::domain_error("robin_sharpness_sequence: theta must lie in (0, 2*pi)");
  if (!(sigma >= 0.0)) throw std::domain_error("robin: sigma must be >= 0");
  std::vector<RobinSharpnessPoint> seq;
  seq.reserve(k_values.size());
  for (double k : k_values) {
    require_finite(k, "k");
    if (!(k > 0.0)) throw std::domain_error("robin_sharpness_sequence: k must be > 0");
    RobinSharpnessPoint pt;
    pt.k = k;
    pt.c = complexd(0.0, -k) * std::polar(1.0, 0.5 * theta);
    const complexd shifted = pt.c - sigma;
    if (!(shifted.real() > 0.0)) {
      pt.skipped = true;
      seq.push_back(pt);
      continue;
    }
    pt.lambda = -shifted * shifted;
    pt.ratio = std::abs(shifted) / k;
    seq.push_back(pt);
  }
  return seq;
}

}  // namespace halfline
