#pragma once

// Seeded generators for property tests. Every suite draws from its own
// mt19937 so failures reproduce run to run.

#include <random>
#include <vector>

#include "projindex/multipoly.hpp"
#include "projindex/poly_matrix.hpp"

namespace gen {

using projindex::Exponent;
using projindex::MultiPoly;
using projindex::PolyMatrix;
using projindex::Scalar;

inline std::mt19937& rng() {
  static std::mt19937 engine(20240611u);
  return engine;
}

inline long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

/// Small rationals p/q with |p| <= 9, 1 <= q <= 4.
inline Scalar rational(bool allow_zero = true) {
  while (true) {
    Scalar s = projindex::make_scalar(integer(-9, 9), integer(1, 4));
    if (allow_zero || s != 0) return s;
  }
}

inline Scalar nonzero_rational() { return rational(false); }

inline Exponent exponent(std::size_t nvars, unsigned max_total) {
  Exponent e(nvars, 0);
  unsigned left = static_cast<unsigned>(integer(0, max_total));
  for (unsigned i = 0; i < left; ++i) ++e[static_cast<std::size_t>(integer(0, static_cast<long>(nvars) - 1))];
  return e;
}

inline MultiPoly poly(std::size_t nvars, unsigned max_degree, int terms = 4) {
  MultiPoly p(nvars);
  for (int t = 0; t < terms; ++t) p.add_term(exponent(nvars, max_degree), rational());
  return p;
}

inline MultiPoly homogeneous(std::size_t nvars, unsigned degree, int terms = 4) {
  MultiPoly p(nvars);
  while (p.is_zero()) {
    for (int t = 0; t < terms; ++t) {
      Exponent e(nvars, 0);
      for (unsigned i = 0; i < degree; ++i) ++e[static_cast<std::size_t>(integer(0, static_cast<long>(nvars) - 1))];
      p.add_term(e, rational());
    }
  }
  return p;
}

inline PolyMatrix matrix(std::size_t n) {
  PolyMatrix m(n, n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = MultiPoly(0, rational());
  return m;
}

inline PolyMatrix invertible_matrix(std::size_t n) {
  while (true) {
    PolyMatrix m = matrix(n);
    if (projindex::char_poly_values(m).back() != 0) return m;
  }
}

inline PolyMatrix upper_triangular(std::size_t n) {
  PolyMatrix m(n, n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = MultiPoly(0, rational());
  return m;
}

/// Independent determinant by Laplace expansion along the first row.
inline Scalar laplace_det(const std::vector<std::vector<Scalar>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Scalar total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    std::vector<std::vector<Scalar>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Scalar> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(std::move(row));
    }
    Scalar term = a[0][c] * laplace_det(minor);
    total += c % 2 == 0 ? term : Scalar(-term);
  }
  return total;
}

inline std::vector<std::vector<Scalar>> values(const PolyMatrix& m) {
  std::vector<std::vector<Scalar>> out(m.rows(), std::vector<Scalar>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.scalar(i, j);
  return out;
}

}  // namespace gen
