#include "projindex/localalg.hpp"

#include "projindex/error.hpp"

namespace projindex {

unsigned default_trunc_cap(std::size_t n) { return static_cast<unsigned>(4 * n + 16); }

unsigned effective_trunc_cap(const LocalOptions& options, std::size_t n) {
  return options.trunc_cap == 0 ? default_trunc_cap(n) : options.trunc_cap;
}

namespace {

struct TruncatedIdeal {
  std::shared_ptr<MonomialBasis> basis;
  std::shared_ptr<RowEchelon> echelon;
  std::size_t dim() const { return basis->size() - echelon->rank(); }
};

// Span of trunc_order(m * g_j) over monomials m of degree < order; together
// with m^(order+1) this is (g) + m^(order+1) (each g_j vanishes at 0).
TruncatedIdeal truncated_ideal(std::span<const MultiPoly> g, std::size_t nvars, unsigned order) {
  TruncatedIdeal t{std::make_shared<MonomialBasis>(nvars, order), std::make_shared<RowEchelon>()};
  const MonomialBasis& basis = *t.basis;
  for (const auto& gj : g) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Exponent& m = basis[k];
      if (total_degree(m) + static_cast<unsigned>(gj.min_degree()) > order) break;
      MultiPoly prod = (MultiPoly::monomial(m) * gj).truncate(order);
      t.echelon->insert(basis.coordinates(prod));
    }
  }
  return t;
}

}  // namespace

std::size_t truncated_quotient_dim(std::span<const MultiPoly> centered_g, unsigned order) {
  std::size_t nvars = centered_g.empty() ? 0 : centered_g.front().nvars();
  for (const auto& gj : centered_g)
    if (!is_zero(gj.constant_term()))
      throw DomainError("generator does not vanish at the origin");
  std::vector<MultiPoly> nonzero;
  for (const auto& gj : centered_g)
    if (!gj.is_zero()) nonzero.push_back(gj);
  return truncated_ideal(nonzero, nvars, order).dim();
}

LocalAlgebra LocalAlgebra::compute(std::span<const MultiPoly> g, std::span<const Scalar> w0,
                                   const LocalOptions& options) {
  const std::size_t n = w0.size();
  if (g.size() != n) throw DomainError("local algebra needs n equations in n variables");
  for (const auto& gj : g)
    if (gj.nvars() != n) throw DomainError("equation variable count does not match the center");

  LocalAlgebra la;
  la.center_.assign(w0.begin(), w0.end());
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_zero(g[j].evaluate(w0)))
      throw DomainError("g" + std::to_string(j + 1) + " does not vanish at the center");
    la.centered_.push_back(g[j].translate(w0));
  }
  std::vector<MultiPoly> gens;
  for (const auto& gj : la.centered_)
    if (!gj.is_zero()) gens.push_back(gj);

  const unsigned cap = effective_trunc_cap(options, n);
  TruncatedIdeal current = truncated_ideal(gens, n, 0);
  for (unsigned order = 0;; ++order) {
    if (order + 1 > cap)
      throw NonIsolatedZero("local quotient dimension did not stabilize up to truncation order " +
                            std::to_string(cap) +
                            ": non-isolated zero (positive-dimensional component - out of scope)");
    TruncatedIdeal next = truncated_ideal(gens, n, order + 1);
    if (next.dim() == current.dim()) {
      la.mult_ = static_cast<unsigned>(current.dim());
      la.stab_order_ = order;
      for (std::size_t k = 0; k < current.basis->size(); ++k)
        if (!current.echelon->is_pivot(k)) la.standard_.push_back((*current.basis)[k]);
      la.basis_ = current.basis;
      la.ideal_ = current.echelon;
      return la;
    }
    current = std::move(next);
  }
}

bool LocalAlgebra::contains_centered(const MultiPoly& h) const {
  if (h.nvars() != n()) throw DomainError("membership test: variable count mismatch");
  return ideal_->contains(basis_->coordinates(h.truncate(stab_order_)));
}

LocalAlgebra local_multiplicity(std::span<const MultiPoly> g, std::span<const Scalar> w0,
                                const LocalOptions& options) {
  return LocalAlgebra::compute(g, w0, options);
}

bool membership_test(const MultiPoly& h, const LocalAlgebra& local) {
  return local.contains_centered(h.translate(local.center()));
}

std::vector<unsigned> monomial_exponents(const LocalAlgebra& local) {
  const std::size_t n = local.n();
  std::vector<unsigned> alpha;
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly wi = MultiPoly::variable(n, i);
    MultiPoly power = wi;
    unsigned a = 1;
    while (!local.contains_centered(power)) {
      if (++a > local.mult())
        throw std::logic_error("no power w_i^a with a <= multiplicity lies in the local ideal");
      power *= wi;
    }
    alpha.push_back(a);
  }
  return alpha;
}

JetMatrix cofactor_series(const LocalAlgebra& local, std::span<const unsigned> alpha, unsigned order) {
  const std::size_t n = local.n();
  if (alpha.size() != n) throw DomainError("cofactor series: exponent vector length mismatch");
  std::vector<Jet> row;
  for (const auto& gj : local.centered_g()) row.emplace_back(gj, order);
  JetLinearSystem system(JetMatrix{row}, order);
  JetMatrix b;
  for (std::size_t i = 0; i < n; ++i) {
    Exponent e(n, 0);
    e[i] = alpha[i];
    auto solved = system.solve({Jet(MultiPoly::monomial(e), order)});
    if (!solved)
      throw std::logic_error("w" + std::to_string(i + 1) + "^" + std::to_string(alpha[i]) +
                             " has no cofactor expansion at order " + std::to_string(order));
    b.push_back(std::move(*solved));
  }
  return b;
}

}  // namespace projindex
