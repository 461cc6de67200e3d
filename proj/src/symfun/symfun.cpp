#include "projindex/symfun.hpp"

#include <algorithm>
#include <functional>

#include "projindex/poly_parse.hpp"

namespace projindex {

unsigned weighted_degree(const Exponent& e) {
  unsigned w = 0;
  for (std::size_t k = 0; k < e.size(); ++k) w += static_cast<unsigned>(k + 1) * e[k];
  return w;
}

SymSpec::SymSpec(std::size_t arity, unsigned degree, MultiPoly tilde)
    : arity_(arity), degree_(degree), tilde_(std::move(tilde)) {
  if (tilde_.nvars() != arity_)
    throw DomainError("e-basis polynomial has " + std::to_string(tilde_.nvars()) +
                      " variables, expected " + std::to_string(arity_));
  for (const auto& [e, c] : tilde_.terms())
    if (weighted_degree(e) != degree_)
      throw DomainError("e-basis term " + MultiPoly::monomial(e).to_string('e', 1) +
                        " has weighted degree " + std::to_string(weighted_degree(e)) +
                        ", expected " + std::to_string(degree_));
}

MultiPoly elementary_symmetric(std::size_t r, unsigned k) {
  MultiPoly out(r);
  if (k > r) return out;
  Exponent e(r, 0);
  std::function<void(std::size_t, unsigned)> pick = [&](std::size_t from, unsigned left) {
    if (left == 0) {
      out.add_term(e, 1);
      return;
    }
    for (std::size_t v = from; v + left <= r; ++v) {
      e[v] = 1;
      pick(v + 1, left - 1);
      e[v] = 0;
    }
  };
  pick(0, k);
  return out;
}

MultiPoly SymSpec::expand() const {
  std::vector<MultiPoly> es;
  for (unsigned k = 1; k <= arity_; ++k) es.push_back(elementary_symmetric(arity_, k));
  return evaluate_in<MultiPoly>(tilde_, es, MultiPoly(arity_, Scalar(1)));
}

namespace {

MultiPoly swap_variables(const MultiPoly& p, std::size_t i, std::size_t j) {
  MultiPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Exponent s = e;
    std::swap(s[i], s[j]);
    out.add_term(s, c);
  }
  return out;
}

const Exponent& lex_leading(const MultiPoly& p) {
  const Exponent* best = nullptr;
  for (const auto& [e, c] : p.terms())
    if (!best || std::lexicographical_compare(best->begin(), best->end(), e.begin(), e.end())) best = &e;
  return *best;
}

}  // namespace

SymSpec to_e_basis(const MultiPoly& sym, unsigned degree) {
  const std::size_t r = sym.nvars();
  for (const auto& [e, c] : sym.terms())
    if (total_degree(e) != degree)
      throw DomainError("polynomial is not homogeneous of degree " + std::to_string(degree));
  for (std::size_t i = 0; i + 1 < r; ++i)
    if (swap_variables(sym, i, i + 1) != sym)
      throw DomainError("polynomial is not symmetric (changes under swapping variables " +
                        std::to_string(i + 1) + " and " + std::to_string(i + 2) + ")");

  std::vector<MultiPoly> es;
  for (unsigned k = 1; k <= r; ++k) es.push_back(elementary_symmetric(r, k));

  MultiPoly rest = sym;
  MultiPoly tilde(r);
  while (!rest.is_zero()) {
    // Lex-leading exponent of a symmetric polynomial is non-increasing; it is
    // the leading term of prod sigma_k^(a_k - a_{k+1}).
    Exponent lead = lex_leading(rest);
    Scalar c = rest.coefficient(lead);
    Exponent t(r, 0);
    MultiPoly product(r, Scalar(1));
    for (std::size_t k = 0; k < r; ++k) {
      unsigned next = k + 1 < r ? lead[k + 1] : 0;
      if (lead[k] < next) throw std::logic_error("symmetric leading exponent not non-increasing");
      t[k] = lead[k] - next;
      if (t[k] > 0) product *= es[k].pow(t[k]);
    }
    tilde.add_term(t, c);
    rest -= product * c;
  }
  return SymSpec(r, degree, std::move(tilde));
}

Scalar sigma_shift(std::size_t j, std::span<const Scalar> sigmas) {
  const std::size_t n = sigmas.size();
  if (j > n) throw DomainError("sigma index " + std::to_string(j) + " out of range 0.." + std::to_string(n));
  // sigma_j(I - L) = sum_{l=0}^{j} C(n-l, n-j) (-1)^l sigma_l(L)
  Scalar total = 0;
  for (std::size_t l = 0; l <= j; ++l) {
    Scalar s = l == 0 ? Scalar(1) : sigmas[l - 1];
    Scalar term = s * Scalar(binomial(static_cast<long>(n - l), static_cast<long>(n - j)));
    if (l % 2 == 1) term = -term;
    total += term;
  }
  return total;
}

std::vector<Scalar> sigma_shift_all(std::span<const Scalar> sigmas) {
  std::vector<Scalar> out;
  for (std::size_t j = 1; j <= sigmas.size(); ++j) out.push_back(sigma_shift(j, sigmas));
  return out;
}

std::vector<SymSpec> elementary_monomials(std::size_t arity, unsigned degree) {
  std::vector<SymSpec> out;
  Exponent e(arity, 0);
  std::function<void(std::size_t, unsigned)> fill = [&](std::size_t k, unsigned left) {
    if (k == arity) {
      if (left == 0) out.emplace_back(arity, degree, MultiPoly::monomial(e));
      return;
    }
    unsigned w = static_cast<unsigned>(k + 1);
    for (unsigned a = 0; a * w <= left; ++a) {
      e[k] = a;
      fill(k + 1, left - a * w);
    }
    e[k] = 0;
  };
  fill(0, degree);
  return out;
}

SymSpec parse_sym_spec(std::string_view text, std::size_t arity) {
  if (mentions_prefix(text, 'e')) {
    MultiPoly tilde = parse_poly(text, VarScheme::elementary(arity));
    if (tilde.is_zero()) throw DomainError("symmetric function is zero");
    unsigned d = weighted_degree(tilde.terms().begin()->first);
    return SymSpec(arity, d, std::move(tilde));
  }
  MultiPoly sym = parse_poly(text, VarScheme::symmetric(arity));
  if (sym.is_zero()) throw DomainError("symmetric function is zero");
  if (!sym.is_homogeneous()) throw DomainError("symmetric function is not homogeneous");
  return to_e_basis(sym, static_cast<unsigned>(sym.total_degree()));
}

}  // namespace projindex
