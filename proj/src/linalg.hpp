#pragma once

#include <vector>

#include "complex_util.hpp"

namespace halfline {

// Row-major dense complex matrix, just enough for the discretized
// Birman-Schwinger operators.
struct ComplexMatrix {
  int n = 0;
  std::vector<complexd> a;

  ComplexMatrix() = default;
  explicit ComplexMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * size) {}

  complexd& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  complexd at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

std::vector<complexd> matvec(const ComplexMatrix& m, const std::vector<complexd>& x);
std::vector<complexd> adjoint_matvec(const ComplexMatrix& m, const std::vector<complexd>& x);

double frobenius_norm(const ComplexMatrix& m);

double vec_norm(const std::vector<complexd>& x);
void vec_scale(std::vector<complexd>& x, double s);
complexd vec_dot(const std::vector<complexd>& x, const std::vector<complexd>& y);

struct LuFactor {
  int n = 0;
  std::vector<complexd> a;  // packed L (unit diagonal) and U
  std::vector<int> piv;
  bool singular = false;
  double min_pivot = 0.0;
};

// Partial-pivoting LU of m. A pivot below tiny * max|entry| marks the
// factorization singular; solves are then unreliable and callers branch.
LuFactor lu_factor(const ComplexMatrix& m);

// Solves factor * x = b. Requires !factor.singular.
std::vector<complexd> lu_solve(const LuFactor& factor, const std::vector<complexd>& b);

}  // namespace halfline
