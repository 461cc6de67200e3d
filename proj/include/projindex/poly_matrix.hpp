#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "projindex/multipoly.hpp"

namespace projindex {

/// Dense rectangular matrix of polynomials sharing one variable count. A
/// matrix of constants is the nvars == 0 case.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);

  static PolyMatrix identity(std::size_t n, std::size_t nvars = 0);
  static PolyMatrix from_scalars(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nvars() const { return nvars_; }
  bool is_square() const { return rows_ == cols_; }

  MultiPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const MultiPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  /// Constant value of entry (i, j); requires the entry to be constant.
  Scalar scalar(std::size_t i, std::size_t j) const;

  /// Entrywise evaluation; the result is a constant (nvars == 0) matrix.
  PolyMatrix evaluate(std::span<const Scalar> point) const;

  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const Scalar& c, const PolyMatrix& a);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

  MultiPoly trace() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t nvars_;
  std::vector<MultiPoly> entries_;
};

/// sigma_1(M), ..., sigma_n(M): the elementary symmetric functions of the
/// eigenvalues, i.e. det(sI - M) = s^n - sigma_1 s^(n-1) + ... + (-1)^n sigma_n.
/// Faddeev-LeVerrier recurrence; divides only by the integers 1..n.
std::vector<MultiPoly> char_poly_coeffs(const PolyMatrix& m);

/// Same, for a constant matrix, returned as scalars.
std::vector<Scalar> char_poly_values(const PolyMatrix& m);

}  // namespace projindex
