#include "linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace halfline {

std::vector<complexd> matvec(const ComplexMatrix& m, const std::vector<complexd>& x) {
  const int n = m.n;
  std::vector<complexd> y(n);
  for (int i = 0; i < n; ++i) {
    complexd acc = 0.0;
    const complexd* row = m.a.data() + static_cast<std::size_t>(i) * n;
    for (int j = 0; j < n; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
  return y;
}

std::vector<complexd> adjoint_matvec(const ComplexMatrix& m, const std::vector<complexd>& x) {
  const int n = m.n;
  std::vector<complexd> y(n, complexd(0.0));
  for (int i = 0; i < n; ++i) {
    const complexd* row = m.a.data() + static_cast<std::size_t>(i) * n;
    const complexd xi = x[i];
    for (int j = 0; j < n; ++j) y[j] += std::conj(row[j]) * xi;
  }
  return y;
}

double frobenius_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (const complexd& z : m.a) s += std::norm(z);
  return std::sqrt(s);
}

double vec_norm(const std::vector<complexd>& x) {
  double s = 0.0;
  for (const complexd& z : x) s += std::norm(z);
  return std::sqrt(s);
}

void vec_scale(std::vector<complexd>& x, double s) {
  for (complexd& z : x) z *= s;
}

complexd vec_dot(const std::vector<complexd>& x, const std::vector<complexd>& y) {
  complexd acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

LuFactor lu_factor(const ComplexMatrix& m) {
  LuFactor f;
  f.n = m.n;
  f.a = m.a;
  f.piv.resize(m.n);
  const int n = m.n;
  double max_entry = 0.0;
  for (const complexd& z : f.a) max_entry = std::max(max_entry, std::abs(z));
  const double tiny = 1e-300 + 1e-15 * max_entry;
  f.min_pivot = max_entry;
  auto elem = [&](int i, int j) -> complexd& {
    return f.a[static_cast<std::size_t>(i) * n + j];
  };
  for (int k = 0; k < n; ++k) {
    int p = k;
    double best = std::abs(elem(k, k));
    for (int i = k + 1; i < n; ++i) {
      double v = std::abs(elem(i, k));
      if (v > best) { best = v; p = i; }
    }
    f.piv[k] = p;
    if (p != k)
      for (int j = 0; j < n; ++j) std::swap(elem(k, j), elem(p, j));
    if (best <= tiny) {
      f.singular = true;
      f.min_pivot = best;
      return f;
    }
    f.min_pivot = std::min(f.min_pivot, best);
    const complexd inv = 1.0 / elem(k, k);
    for (int i = k + 1; i < n; ++i) {
      const complexd l = elem(i, k) * inv;
      elem(i, k) = l;
      if (l == complexd(0.0)) continue;
      for (int j = k + 1; j < n; ++j) elem(i, j) -= l * elem(k, j);
    }
  }
  return f;
}

std::vector<complexd> lu_solve(const LuFactor& factor, const std::vector<complexd>& b) {
  if (factor.singular) throw std::domain_error("lu_solve: singular factorization");
  const int n = factor.n;
  std::vector<complexd> x = b;
  for (int k = 0; k < n; ++k) {
    if (factor.piv[k] != k) std::swap(x[k], x[factor.piv[k]]);
    for (int i = k + 1; i < n; ++i)
      x[i] -= factor.a[static_cast<std::size_t>(i) * n + k] * x[k];
  }
  for (int i = n - 1; i >= 0; --i) {
    complexd acc = x[i];
    const complexd* row = factor.a.data() + static_cast<std::size_t>(i) * n;
    for (int j = i + 1; j < n; ++j) acc -= row[j] * x[j];
    x[i] = acc / row[i];
  }
  return x;
}

}  // namespace halfline
