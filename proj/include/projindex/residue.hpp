#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "projindex/localalg.hpp"
#include "projindex/projmap.hpp"
#include "projindex/symfun.hpp"

namespace projindex {

enum class ResidueKind { Res1, Res2, Res3 };
enum class ResiduePath { ClosedForm, Hartshorne };

std::string to_string(ResidueKind kind);
std::string to_string(ResiduePath path);

struct ResidueOptions {
  LocalOptions local;
  /// Use the monomial-reduction path even where det(dg) != 0.
  bool force_hartshorne = false;
  /// Extra truncation order for the cofactor solve (stability checks).
  unsigned extra_order = 0;
};

struct LocalSummary {
  unsigned mult = 0;
  unsigned stab_order = 0;
  std::vector<unsigned> alpha;  // empty on the closed-form path
};

struct ResidueValue {
  Scalar value;
  ResiduePath path = ResiduePath::ClosedForm;
  LocalSummary local;
};

/// Res_{w0}[h dw / (g_1..g_n)] at an isolated zero w0 of g.
///
/// det(dg)(w0) != 0: h(w0) / det(dg)(w0). Otherwise: minimal exponents alpha
/// with w_i^alpha_i in (g), cofactors w_i^alpha_i = sum_j b_ij g_j, and the
/// coefficient of w^(alpha-1) in h det(b), everything centered at w0.
ResidueValue grothendieck_residue(const MultiPoly& h, std::span<const MultiPoly> g,
                                  std::span<const Scalar> w0, const ResidueOptions& options = {});

/// Same, reusing an already computed local algebra of g at its center.
ResidueValue grothendieck_residue(const MultiPoly& h, const LocalAlgebra& local,
                                  const ResidueOptions& options = {});

struct ResidueRequest {
  ResidueKind kind;
  const HomogeneousMap* map;
  ProjPoint point;
  std::optional<SymSpec> sym;         // arity n for Res2, n+1 for Res3
  std::optional<std::size_t> chart;   // default: the point's pivot
};

/// Validates the request (point in Sigma(f), arity/degree, nu > 1 for Res3)
/// and evaluates the index residue.
ResidueValue compute_residue(const ResidueRequest& request, const ResidueOptions& options = {});

ResidueValue res1(const HomogeneousMap& f, const ProjPoint& p, const ResidueOptions& options = {},
                  std::optional<std::size_t> chart = std::nullopt);
ResidueValue res2(const HomogeneousMap& f, const ProjPoint& p, const SymSpec& phi,
                  const ResidueOptions& options = {}, std::optional<std::size_t> chart = std::nullopt);
ResidueValue res3(const HomogeneousMap& f, const ProjPoint& p, const SymSpec& psi,
                  const ResidueOptions& options = {}, std::optional<std::size_t> chart = std::nullopt);

/// Numerators h of the three residues in a chart: F0(1,w)^n, phi(dg_w) and
/// psi(F0(1,w), eigenvalues of dg_w), built through sigma values.
MultiPoly res1_numerator(const LocalModel& model);
MultiPoly res2_numerator(const LocalModel& model, const SymSpec& phi);
MultiPoly res3_numerator(const LocalModel& model, const SymSpec& psi);

/// Closed forms at a simple fixed point from sigma_k(df_p).
Scalar simple_fixed_point_residue(ResidueKind kind, std::span<const Scalar> sigma_df,
                                  const std::optional<SymSpec>& sym = std::nullopt);

/// Closed forms at an indeterminacy point with det G != 0, from sigma_k(G).
Scalar nondegenerate_indeterminacy_residue(ResidueKind kind, std::span<const Scalar> sigma_g,
                                           const std::optional<SymSpec>& sym = std::nullopt);

}  // namespace projindex
