// Exact division and multivariate GCD over Q.
//
// gcd() views both inputs as univariate in their highest-index variable with
// coefficients in Q[remaining variables], splits off contents recursively and
// runs a primitive pseudo-remainder sequence on the primitive parts.

#include <map>

#include "projindex/error.hpp"
#include "projindex/multipoly.hpp"

namespace projindex {

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.nvars() != b.nvars()) throw DomainError("division across different variable counts");
  MultiPoly quotient(a.nvars());
  MultiPoly rest = a;
  const Exponent& lb = b.leading_exponent();
  const Scalar& cb = b.leading_coefficient();
  // With a single divisor, b | a iff every leading term met along the way is
  // divisible by lt(b): lt(b*c) = lt(b)*lt(c) for a monomial order.
  while (!rest.is_zero()) {
    const Exponent& lr = rest.leading_exponent();
    Exponent shift(lr.size());
    for (std::size_t v = 0; v < lr.size(); ++v) {
      if (lr[v] < lb[v]) return std::nullopt;
      shift[v] = lr[v] - lb[v];
    }
    Scalar c = rest.leading_coefficient() / cb;
    MultiPoly t = MultiPoly::monomial(shift, c);
    quotient += t;
    rest -= t * b;
  }
  return quotient;
}

namespace {

MultiPoly monic(const MultiPoly& p) {
  if (p.is_zero()) return p;
  Scalar inv = 1 / p.leading_coefficient();
  return p * inv;
}

int highest_variable(const MultiPoly& p) {
  int best = -1;
  for (const auto& [e, c] : p.terms())
    for (std::size_t v = e.size(); v-- > 0;)
      if (e[v] != 0) {
        best = std::max(best, static_cast<int>(v));
        break;
      }
  return best;
}

// Coefficients of p as a polynomial in `var`, keyed by the power of `var`.
std::map<unsigned, MultiPoly> coefficients_in(const MultiPoly& p, std::size_t var) {
  std::map<unsigned, MultiPoly> out;
  for (const auto& [e, c] : p.terms()) {
    Exponent rest = e;
    rest[var] = 0;
    auto [it, ok] = out.try_emplace(e[var], MultiPoly(p.nvars()));
    it->second.add_term(rest, c);
  }
  return out;
}

MultiPoly lead_coefficient_in(const MultiPoly& p, std::size_t var) {
  return coefficients_in(p, var).rbegin()->second;
}

MultiPoly var_power(std::size_t nvars, std::size_t var, unsigned k) {
  Exponent e(nvars, 0);
  e[var] = k;
  return MultiPoly::monomial(e);
}

MultiPoly content_in(const MultiPoly& p, std::size_t var) {
  MultiPoly g(p.nvars());
  for (const auto& [k, coeff] : coefficients_in(p, var)) {
    g = gcd(g, coeff);
    if (g.is_constant()) break;
  }
  return g;
}

MultiPoly primitive_part(const MultiPoly& p, std::size_t var) {
  if (p.is_zero()) return p;
  auto q = divide_exact(p, content_in(p, var));
  if (!q) throw std::logic_error("content does not divide polynomial");
  return *q;
}

MultiPoly pseudo_remainder(MultiPoly a, const MultiPoly& b, std::size_t var) {
  int db = b.degree_in(var);
  MultiPoly lb = lead_coefficient_in(b, var);
  while (!a.is_zero() && a.degree_in(var) >= db) {
    int da = a.degree_in(var);
    MultiPoly la = lead_coefficient_in(a, var);
    a = lb * a - la * var_power(a.nvars(), var, static_cast<unsigned>(da - db)) * b;
  }
  return a;
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) throw DomainError("gcd across different variable counts");
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  int va = highest_variable(a), vb = highest_variable(b);
  int top = std::max(va, vb);
  if (top < 0) return MultiPoly(a.nvars(), Scalar(1));
  auto var = static_cast<std::size_t>(top);

  MultiPoly content = gcd(content_in(a, var), content_in(b, var));
  MultiPoly x = primitive_part(a, var);
  MultiPoly y = primitive_part(b, var);
  if (x.degree_in(var) < y.degree_in(var)) std::swap(x, y);
  while (!y.is_zero() && y.degree_in(var) > 0) {
    MultiPoly r = pseudo_remainder(x, y, var);
    x = std::move(y);
    y = primitive_part(r, var);
  }
  // y == 0: x carries the common factor; y a nonzero var-free term: coprime.
  MultiPoly common = y.is_zero() ? primitive_part(x, var) : MultiPoly(a.nvars(), Scalar(1));
  return monic(content * common);
}

}  // namespace projindex
