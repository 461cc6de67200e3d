#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "projindex/error.hpp"
#include "projindex/multipoly.hpp"

namespace projindex {

/// A homogeneous symmetric polynomial stored in the elementary basis.
///
/// `tilde` is a polynomial in `arity` variables where variable k (0-based)
/// stands for sigma_{k+1} and carries weight k+1. Every term has weighted
/// degree exactly `degree`.
class SymSpec {
 public:
  SymSpec(std::size_t arity, unsigned degree, MultiPoly tilde);

  std::size_t arity() const { return arity_; }
  unsigned degree() const { return degree_; }
  const MultiPoly& tilde() const { return tilde_; }

  /// The symmetric polynomial itself, tilde(e_1(x), ..., e_r(x)).
  MultiPoly expand() const;

  /// e-basis text, e.g. "e1^2 - 2*e2".
  std::string to_string() const { return tilde_.to_string('e', 1); }

  friend bool operator==(const SymSpec& a, const SymSpec& b) = default;

 private:
  std::size_t arity_;
  unsigned degree_;
  MultiPoly tilde_;
};

unsigned weighted_degree(const Exponent& e);

/// e_k(x_1, ..., x_r); e_0 = 1.
MultiPoly elementary_symmetric(std::size_t r, unsigned k);

/// Rewrites a symmetric homogeneous polynomial of degree `degree` in the
/// elementary basis (leading-term subtraction under lex order).
/// Throws DomainError when the input is not symmetric or not homogeneous.
SymSpec to_e_basis(const MultiPoly& sym, unsigned degree);

/// Evaluates tilde at the given sigma values in a ring R (Scalar or
/// MultiPoly); `one` is the unit of R.
template <class R>
R eval_on_sigmas(const SymSpec& spec, std::span<const R> sigmas, const R& one) {
  if (sigmas.size() != spec.arity())
    throw DomainError("symmetric function of arity " + std::to_string(spec.arity()) + " given " +
                      std::to_string(sigmas.size()) + " sigma values");
  return evaluate_in<R>(spec.tilde(), sigmas, one);
}

inline Scalar eval_on_sigmas(const SymSpec& spec, std::span<const Scalar> sigmas) {
  return eval_on_sigmas<Scalar>(spec, sigmas, Scalar(1));
}

/// Elementary symmetric values of {a} united with a multiset whose values are
/// `sigmas` (length n); the result has length n + 1.
template <class R>
std::vector<R> augment_sigmas(const R& a, std::span<const R> sigmas) {
  // e_k({a} u S) = e_k(S) + a e_{k-1}(S)
  std::vector<R> out;
  out.reserve(sigmas.size() + 1);
  for (std::size_t k = 0; k < sigmas.size(); ++k) {
    R next = sigmas[k];
    next += k == 0 ? a : R(a * sigmas[k - 1]);
    out.push_back(std::move(next));
  }
  if (sigmas.empty()) out.push_back(a);
  else out.push_back(R(a * sigmas.back()));
  return out;
}

/// sigma_j(I - L) from sigma_1(L), ..., sigma_n(L) (n = sigmas.size()),
/// 0 <= j <= n.
Scalar sigma_shift(std::size_t j, std::span<const Scalar> sigmas);

/// sigma_1(I - L), ..., sigma_n(I - L).
std::vector<Scalar> sigma_shift_all(std::span<const Scalar> sigmas);

/// Every monomial sigma^a of weighted degree `degree` in `arity` sigmas, as
/// SymSpecs with coefficient 1, in canonical order.
std::vector<SymSpec> elementary_monomials(std::size_t arity, unsigned degree);

/// Accepts either e-basis text ("e1^2 - 2*e2") or a symmetric polynomial in
/// x1..x_arity ("x1^2 + x2^2"). The degree is read off the input.
SymSpec parse_sym_spec(std::string_view text, std::size_t arity);

}  // namespace projindex
