#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "projindex/projmap.hpp"
#include "projindex/residue.hpp"
#include "projindex/symfun.hpp"

namespace projindex {

enum class ChernKind {
  Phi,  // TP^n - N^(x nu)
  Psi,  // (TP^n + N) - N^(x nu)
};

/// Chern classes of a virtual bundle on P^n written as multiples of powers
/// of c1(N): c_j = cj[j-1] * c1(N)^j for j = 1..n.
struct ChernTarget {
  unsigned n = 0;
  unsigned nu = 0;
  ChernKind kind = ChernKind::Phi;
  std::vector<Scalar> cj;

  static ChernTarget make(ChernKind kind, unsigned n, unsigned nu);
  /// Coefficient of c1(N)^j in c_j; 1 for j = 0 and 0 past n.
  Scalar coefficient(std::size_t j) const;
};

/// Integral over P^n of sym evaluated on the target's Chern classes, using
/// the integral of c1(N)^n = (-1)^n. sym must have degree n and arity n (Phi)
/// or n+1 (Psi; c_(n+1) vanishes on P^n).
Scalar chern_integral(const ChernTarget& target, const SymSpec& sym);

struct PointEntry {
  ProjPoint point;
  PointKind kind;
  std::optional<unsigned> mult;  // absent for regular points
  std::optional<Scalar> residue;
  std::optional<ResiduePath> path;
  std::optional<unsigned> level;  // power-map points only
};

struct Identity {
  std::string label;
  Scalar lhs;
  Scalar rhs;
  bool holds = false;
  bool draft = false;
};

struct VerificationReport {
  std::string check;  // "1i", "1ii", "1iii", "ueda k=..", "ueda-poly"
  std::vector<PointEntry> per_point;
  Scalar lhs;
  Scalar rhs;
  unsigned long census_total = 0;
  unsigned long census_expected = 0;
  bool complete = false;
  bool pass = false;
  bool draft = false;
  std::vector<Identity> identities;
  std::vector<std::string> notes;
};

enum class Theorem1Part { I, II, III };

/// Sums Res1 / Res2_phi / Res3_psi over the members of Sigma(f) in `points`
/// and compares with (-1)^n / chern_integral(Phi, phi) / chern_integral(Psi, psi).
/// Regular points are reported and skipped. The sum is only asserted when the
/// census certifies the point list complete.
VerificationReport verify_theorem1(const HomogeneousMap& f, const std::vector<ProjPoint>& points,
                                   Theorem1Part part, const std::optional<SymSpec>& sym = std::nullopt,
                                   const ResidueOptions& options = {});

/// Sum over fixed points of sigma_k(df_p) / prod(1 - lambda_j(p)) against
/// (-1)^k (nu+1)^k. Requires a complete list of simple fixed points and no
/// indeterminacy points.
VerificationReport ueda_check(const HomogeneousMap& f, const std::vector<ProjPoint>& points, unsigned k,
                              const ResidueOptions& options = {});

/// Polynomial form of the same identity, sampled at each t, plus its
/// derivative at t = 1. Flagged draft.
VerificationReport ueda_polynomial_checks(const HomogeneousMap& f, const std::vector<ProjPoint>& points,
                                          const std::vector<Scalar>& t_samples,
                                          const ResidueOptions& options = {});

std::vector<Scalar> default_t_samples();

struct CensusResult {
  std::vector<PointEntry> per_point;
  unsigned long total = 0;
  unsigned long expected = 0;
  /// Count of characteristic directions of a degree-d homogeneous map on
  /// C^(n+1), (d^(n+1) - 1)/(d - 1) with d = nu + 1.
  unsigned long draft_count = 0;
  /// The same count with the exponent taken as n, (d^n - 1)/(d - 1).
  unsigned long draft_count_literal = 0;
  bool complete = false;
};

/// Multiplicities of the Sigma(f) members of `points` against
/// ((nu+1)^(n+1) - 1)/nu. Throws on duplicate points.
CensusResult census(const HomogeneousMap& f, const std::vector<ProjPoint>& points,
                    const LocalOptions& options = {});

unsigned long expected_census(std::size_t n, unsigned nu);

struct ExampleMap {
  std::string name;
  HomogeneousMap map;
  std::vector<ProjPoint> points;
  std::vector<unsigned> levels;  // parallel to points; empty when not a power map
};

/// [z0^(nu+1) : ... : zn^(nu+1)] with all of its fixed points, grouped by
/// level (number of nonzero coordinates minus one). Only nu in {1, 2} has a
/// fully rational fixed-point set.
ExampleMap make_power_map(unsigned n, unsigned nu);
/// [z1 z2 : z0 z2 : z0 z1]: 4 fixed and 3 indeterminacy points.
ExampleMap make_cremona();
/// [z0^2 : z0 z1 + z1^2] on P^1: a double fixed point at [1:0].
ExampleMap make_degenerate_p1();
/// [z0^2 : z0 z1 + z1^2 : z2^2] on P^2: holomorphic, two double fixed points.
ExampleMap make_degenerate_p2();

/// Every bundled example: power maps for n <= 3, nu in {1, 2}, then the rest.
std::vector<ExampleMap> bundled_examples();
/// Looks up "power-map" (with n, nu), "cremona", "degenerate-p1", "degenerate-p2".
ExampleMap make_example(const std::string& name, unsigned n = 0, unsigned nu = 0);

/// Res1 at any power-map fixed point of level l: (-1)^n (-1)^l / nu^l.
Scalar power_map_level_res1(unsigned n, unsigned nu, unsigned level);
/// (-1)^n sum_l C(n+1, l+1) (-1)^l phi(nu, .., nu, -1, .., -1), l copies of nu.
Scalar power_map_level_sum_ii(unsigned n, unsigned nu, const SymSpec& phi);

struct AbelResult {
  Scalar lhs;  // (x + y)^r
  Scalar rhs;  // sum_k C(r,k) x (x - kz)^(k-1) (y + kz)^(r-k)
  bool holds = false;
};

AbelResult abel_identity(unsigned r, const Scalar& x, const Scalar& y, const Scalar& z);
bool abel_identity_check(unsigned r, const Scalar& x, const Scalar& y, const Scalar& z);

/// The power-map chain for phi = sigma_1^n: the level sum, the Abel instance
/// r = n+1, x = -y = n+nu+1, z = nu+1, and (n+nu+1)^n.
struct ExampleChain {
  bool abel_holds = false;
  Scalar level_sum;
  Scalar chern;
  Scalar closed_form;
  bool holds() const { return abel_holds && level_sum == closed_form && chern == closed_form; }
};

ExampleChain example_chain_check(unsigned n, unsigned nu);

/// sigma_1^n, sigma_n and friends as SymSpecs.
SymSpec sigma_power(std::size_t arity, unsigned k, unsigned power);

}  // namespace projindex
