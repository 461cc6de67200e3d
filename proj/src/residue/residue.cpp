#include "projindex/residue.hpp"

#include <numeric>

#include "projindex/error.hpp"

namespace projindex {

std::string to_string(ResidueKind kind) {
  switch (kind) {
    case ResidueKind::Res1: return "Res1";
    case ResidueKind::Res2: return "Res2";
    case ResidueKind::Res3: return "Res3";
  }
  return "?";
}

std::string to_string(ResiduePath path) {
  return path == ResiduePath::ClosedForm ? "ClosedForm" : "Hartshorne";
}

namespace {

Scalar jacobian_determinant(std::span<const MultiPoly> g, std::span<const Scalar> w0) {
  const std::size_t n = g.size();
  PolyMatrix jac(n, n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) jac(j, k) = MultiPoly(0, g[j].partial(k).evaluate(w0));
  return char_poly_values(jac).back();
}

Scalar hartshorne(const MultiPoly& h, const LocalAlgebra& local, const ResidueOptions& options,
                  LocalSummary& summary) {
  const std::size_t n = local.n();
  summary.alpha = monomial_exponents(local);
  unsigned alpha_sum = std::accumulate(summary.alpha.begin(), summary.alpha.end(), 0u);
  // The target monomial w^(alpha-1) has degree alpha_sum - n. A cofactor
  // solution modulo degree > extract + stab + 1 differs from an exact one by
  // terms in m^(extract+1), since m^(stab+1) lies in (g).
  unsigned extract = alpha_sum - static_cast<unsigned>(n);
  unsigned solve_order = extract + local.stab_order() + 1 + options.extra_order;
  JetMatrix b = cofactor_series(local, summary.alpha, solve_order);
  for (auto& row : b)
    for (auto& entry : row) entry = Jet(entry.base(), extract);
  Jet det = jet_determinant(b);
  Jet numerator = Jet(h.translate(local.center()), extract) * det;
  Exponent target(n);
  for (std::size_t i = 0; i < n; ++i) target[i] = summary.alpha[i] - 1;
  return numerator.base().coefficient(target);
}

}  // namespace

ResidueValue grothendieck_residue(const MultiPoly& h, const LocalAlgebra& local, const ResidueOptions& options) {
  if (h.nvars() != local.n()) throw DomainError("residue numerator variable count mismatch");
  ResidueValue out;
  out.local.mult = local.mult();
  out.local.stab_order = local.stab_order();
  std::vector<MultiPoly> g = local.centered_g();
  std::vector<Scalar> origin(local.n(), Scalar(0));
  Scalar det = jacobian_determinant(g, origin);
  if (!is_zero(det) && !options.force_hartshorne) {
    out.path = ResiduePath::ClosedForm;
    out.value = h.evaluate(local.center()) / det;
    return out;
  }
  out.path = ResiduePath::Hartshorne;
  out.value = hartshorne(h, local, options, out.local);
  return out;
}

ResidueValue grothendieck_residue(const MultiPoly& h, std::span<const MultiPoly> g,
                                  std::span<const Scalar> w0, const ResidueOptions& options) {
  LocalAlgebra local = local_multiplicity(g, w0, options.local);
  return grothendieck_residue(h, local, options);
}

MultiPoly res1_numerator(const LocalModel& model) {
  return model.f0.pow(static_cast<unsigned>(model.n()));
}

MultiPoly res2_numerator(const LocalModel& model, const SymSpec& phi) {
  std::vector<MultiPoly> sigmas = char_poly_coeffs(model.jac_g);
  return eval_on_sigmas<MultiPoly>(phi, sigmas, MultiPoly(model.n(), Scalar(1)));
}

MultiPoly res3_numerator(const LocalModel& model, const SymSpec& psi) {
  std::vector<MultiPoly> sigmas = char_poly_coeffs(model.jac_g);
  std::vector<MultiPoly> augmented = augment_sigmas<MultiPoly>(model.f0, sigmas);
  return eval_on_sigmas<MultiPoly>(psi, augmented, MultiPoly(model.n(), Scalar(1)));
}

ResidueValue compute_residue(const ResidueRequest& request, const ResidueOptions& options) {
  if (!request.map) throw DomainError("residue request without a map");
  const HomogeneousMap& f = *request.map;
  const std::size_t n = f.n();
  if (classify_point(f, request.point) == PointKind::RegularNonFixed)
    throw DomainError("point " + request.point.to_string() + " is neither fixed nor indeterminate");

  MultiPoly numerator;
  LocalModel model = dehomogenize(f, request.point, request.chart);
  switch (request.kind) {
    case ResidueKind::Res1:
      numerator = res1_numerator(model);
      break;
    case ResidueKind::Res2: {
      if (!request.sym) throw DomainError("Res2 needs a symmetric polynomial phi");
      const SymSpec& phi = *request.sym;
      if (phi.arity() != n || phi.degree() != n)
        throw DomainError("Res2 needs phi of arity n = " + std::to_string(n) + " and degree n (got arity " +
                          std::to_string(phi.arity()) + ", degree " + std::to_string(phi.degree()) + ")");
      numerator = res2_numerator(model, phi);
      break;
    }
    case ResidueKind::Res3: {
      if (f.nu() <= 1) throw DomainError("Res3 requires nu > 1 (map degree >= 3)");
      if (!request.sym) throw DomainError("Res3 needs a symmetric polynomial psi");
      const SymSpec& psi = *request.sym;
      if (psi.arity() != n + 1 || psi.degree() != n)
        throw DomainError("Res3 needs psi of arity n+1 = " + std::to_string(n + 1) + " and degree n (got arity " +
                          std::to_string(psi.arity()) + ", degree " + std::to_string(psi.degree()) + ")");
      numerator = res3_numerator(model, psi);
      break;
    }
  }
  return grothendieck_residue(numerator, model.g, model.w0, options);
}

ResidueValue res1(const HomogeneousMap& f, const ProjPoint& p, const ResidueOptions& options,
                  std::optional<std::size_t> chart) {
  return compute_residue({ResidueKind::Res1, &f, p, std::nullopt, chart}, options);
}

ResidueValue res2(const HomogeneousMap& f, const ProjPoint& p, const SymSpec& phi, const ResidueOptions& options,
                  std::optional<std::size_t> chart) {
  return compute_residue({ResidueKind::Res2, &f, p, phi, chart}, options);
}

ResidueValue res3(const HomogeneousMap& f, const ProjPoint& p, const SymSpec& psi, const ResidueOptions& options,
                  std::optional<std::size_t> chart) {
  return compute_residue({ResidueKind::Res3, &f, p, psi, chart}, options);
}

Scalar simple_fixed_point_residue(ResidueKind kind, std::span<const Scalar> sigma_df,
                                  const std::optional<SymSpec>& sym) {
  const std::size_t n = sigma_df.size();
  std::vector<Scalar> one_minus = sigma_shift_all(sigma_df);  // sigma_k(I - df)
  const Scalar& denominator = one_minus.back();               // prod (1 - lambda_j)
  if (is_zero(denominator)) throw DomainError("fixed point is not simple");
  Scalar sign = n % 2 == 0 ? 1 : -1;
  switch (kind) {
    case ResidueKind::Res1:
      return sign / denominator;
    case ResidueKind::Res2:
      if (!sym) throw DomainError("Res2 needs phi");
      return eval_on_sigmas(*sym, one_minus) / denominator;
    case ResidueKind::Res3: {
      if (!sym) throw DomainError("Res3 needs psi");
      // sigma_k of {lambda_j - 1} is (-1)^k sigma_k(I - df).
      std::vector<Scalar> shifted = one_minus;
      for (std::size_t k = 0; k < n; ++k)
        if (k % 2 == 0) shifted[k] = -shifted[k];
      std::vector<Scalar> augmented = augment_sigmas<Scalar>(Scalar(1), shifted);
      return sign * eval_on_sigmas(*sym, augmented) / denominator;
    }
  }
  return 0;
}

Scalar nondegenerate_indeterminacy_residue(ResidueKind kind, std::span<const Scalar> sigma_g,
                                           const std::optional<SymSpec>& sym) {
  const Scalar& det = sigma_g.back();
  if (is_zero(det)) throw DomainError("indeterminacy point is degenerate (det G = 0)");
  switch (kind) {
    case ResidueKind::Res1:
      return 0;
    case ResidueKind::Res2:
      if (!sym) throw DomainError("Res2 needs phi");
      return eval_on_sigmas(*sym, sigma_g) / det;
    case ResidueKind::Res3: {
      if (!sym) throw DomainError("Res3 needs psi");
      std::vector<Scalar> augmented = augment_sigmas<Scalar>(Scalar(0), sigma_g);
      return eval_on_sigmas(*sym, augmented) / det;
    }
  }
  return 0;
}

}  // namespace projindex
