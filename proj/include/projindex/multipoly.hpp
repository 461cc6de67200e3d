#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "projindex/scalar.hpp"

namespace projindex {

using Exponent = std::vector<unsigned>;

unsigned total_degree(const Exponent& e);

/// Graded lexicographic order: total degree first, then the first variable
/// with a differing exponent decides (larger exponent is larger).
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are kept in graded-lex order with no zero coefficients, so two
/// polynomials are equal iff their term maps are equal. Variables are
/// 0-based internally; the text form names them by a prefix and a first index
/// (z0.., w1.., e1..).
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Scalar, GrlexLess>;
  static constexpr int kZeroDegree = -1;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}
  MultiPoly(std::size_t nvars, const Scalar& constant);

  static MultiPoly variable(std::size_t nvars, std::size_t index);
  static MultiPoly monomial(const Exponent& e, const Scalar& c = 1);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// kZeroDegree for the zero polynomial.
  int total_degree() const;
  /// Least total degree of a term (order of vanishing at the origin).
  int min_degree() const;
  int degree_in(std::size_t var) const;
  bool is_homogeneous() const;

  Scalar coefficient(const Exponent& e) const;
  Scalar constant_term() const;

  /// Adds c * w^e to this polynomial, dropping the term if it cancels.
  MultiPoly& add_term(const Exponent& e, const Scalar& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Scalar& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Scalar& c) { return a *= c; }
  friend MultiPoly operator*(const Scalar& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned k) const;
  Scalar evaluate(std::span<const Scalar> point) const;
  MultiPoly partial(std::size_t var) const;
  /// Drops every term of total degree > max_degree.
  MultiPoly truncate(unsigned max_degree) const;
  MultiPoly homogeneous_part(unsigned degree) const;
  /// Substitutes images[i] for variable i. All images share one nvars, which
  /// becomes the nvars of the result.
  MultiPoly compose(std::span<const MultiPoly> images) const;
  /// p(w + shift).
  MultiPoly translate(std::span<const Scalar> shift) const;

  /// Leading term under graded-lex (largest exponent). Requires nonzero.
  const Exponent& leading_exponent() const;
  const Scalar& leading_coefficient() const;

  std::string to_string(char prefix, unsigned first_index) const;

 private:
  void check_compatible(const MultiPoly& o) const;

  std::size_t nvars_ = 0;
  TermMap terms_;
};

/// Evaluates p with variable i replaced by values[i], in any commutative ring R
/// that supports R + R, R * R and Scalar * R. `one` is the ring unit.
template <class R>
R evaluate_in(const MultiPoly& p, std::span<const R> values, const R& one) {
  std::vector<std::vector<R>> powers(values.size());
  auto power_of = [&](std::size_t var, unsigned k) -> const R& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(one);
    while (cache.size() <= k) cache.push_back(cache.back() * values[var]);
    return cache[k];
  };
  R result = Scalar(0) * one;
  for (const auto& [e, c] : p.terms()) {
    R term = c * one;
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] != 0) term = term * power_of(v, e[v]);
    result = result + term;
  }
  return result;
}

/// Exact quotient a / b when b divides a, std::nullopt otherwise.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

/// Greatest common divisor over Q, normalized to leading coefficient 1
/// (zero only when both inputs are zero).
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

}  // namespace projindex
