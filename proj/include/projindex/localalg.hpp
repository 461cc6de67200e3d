#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "projindex/jet.hpp"
#include "projindex/linear.hpp"
#include "projindex/multipoly.hpp"

namespace projindex {

struct LocalOptions {
  /// Highest truncation order tried before declaring the zero non-isolated.
  /// 0 selects the default 4n + 16.
  unsigned trunc_cap = 0;
};

unsigned default_trunc_cap(std::size_t n);
unsigned effective_trunc_cap(const LocalOptions& options, std::size_t n);

/// The local quotient O/(g) at an isolated zero w0 of g = (g_1..g_n).
///
/// Computed after translating w0 to the origin. d_M denotes
/// dim Q[[w]]/((g) + m^(M+1)); stab_order is the least M with d_M = d_(M+1),
/// which certifies m^(M+1) in (g) (Nakayama), so d_M is the multiplicity and
/// every membership question can be settled modulo degree > stab_order.
class LocalAlgebra {
 public:
  static LocalAlgebra compute(std::span<const MultiPoly> g, std::span<const Scalar> w0,
                              const LocalOptions& options = {});

  std::size_t n() const { return center_.size(); }
  const std::vector<Scalar>& center() const { return center_; }
  unsigned mult() const { return mult_; }
  unsigned stab_order() const { return stab_order_; }
  const std::vector<Exponent>& standard_monomials() const { return standard_; }
  /// g translated so that the center is the origin.
  const std::vector<MultiPoly>& centered_g() const { return centered_; }

  /// Membership of an origin-centered polynomial in the local ideal (g).
  bool contains_centered(const MultiPoly& h) const;

 private:
  std::vector<Scalar> center_;
  std::vector<MultiPoly> centered_;
  unsigned mult_ = 0;
  unsigned stab_order_ = 0;
  std::vector<Exponent> standard_;
  std::shared_ptr<const MonomialBasis> basis_;
  std::shared_ptr<const RowEchelon> ideal_;
};

/// Dimension of Q[[w]]/((g) + m^(order+1)) for origin-centered g; exposed for
/// tests of the stabilization certificate.
std::size_t truncated_quotient_dim(std::span<const MultiPoly> centered_g, unsigned order);

LocalAlgebra local_multiplicity(std::span<const MultiPoly> g, std::span<const Scalar> w0,
                                const LocalOptions& options = {});

/// h given in the original (uncentered) coordinates.
bool membership_test(const MultiPoly& h, const LocalAlgebra& local);

/// Least alpha_i >= 1 with w_i^alpha_i in the local ideal, for each i.
std::vector<unsigned> monomial_exponents(const LocalAlgebra& local);

/// Jets b_ij (origin-centered) with w_i^alpha_i = sum_j b_ij g_j modulo
/// total degree > order.
JetMatrix cofactor_series(const LocalAlgebra& local, std::span<const unsigned> alpha, unsigned order);

}  // namespace projindex
