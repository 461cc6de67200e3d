#pragma once

#include <optional>
#include <vector>

#include "projindex/linear.hpp"
#include "projindex/multipoly.hpp"

namespace projindex {

/// Truncated power series: a polynomial with every term of total degree above
/// `order` discarded. Arithmetic between jets requires equal orders.
class Jet {
 public:
  Jet(const MultiPoly& base, unsigned order) : base_(base.truncate(order)), order_(order) {}

  const MultiPoly& base() const { return base_; }
  unsigned order() const { return order_; }
  std::size_t nvars() const { return base_.nvars(); }

  friend Jet operator+(const Jet& a, const Jet& b);
  friend Jet operator-(const Jet& a, const Jet& b);
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator*(const Scalar& c, const Jet& a) { return Jet(a.base_ * c, a.order_); }
  friend bool operator==(const Jet& a, const Jet& b) = default;

 private:
  MultiPoly base_;
  unsigned order_;
};

using JetMatrix = std::vector<std::vector<Jet>>;

/// A x = b modulo total degree > order, eliminated once so that several
/// right-hand sides can share the work. Unknown coefficients not fixed by the
/// system are set to zero.
class JetLinearSystem {
 public:
  JetLinearSystem(const JetMatrix& a, unsigned order);
  /// std::nullopt when no solution exists.
  std::optional<std::vector<Jet>> solve(const std::vector<Jet>& b) const;

 private:
  std::size_t rows_ = 0, cols_ = 0, nvars_ = 0;
  unsigned order_;
  MonomialBasis basis_;
  RowEchelon echelon_;
};

std::optional<std::vector<Jet>> jet_solve_linear(const JetMatrix& a, const std::vector<Jet>& b,
                                                 unsigned order);

/// Determinant of a square jet matrix by cofactor expansion, truncated at the
/// common jet order.
Jet jet_determinant(const JetMatrix& m);

}  // namespace projindex
