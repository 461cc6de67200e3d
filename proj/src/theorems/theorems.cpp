#include "projindex/theorems.hpp"

#include <functional>
#include <set>

#include "projindex/error.hpp"

namespace projindex {

// ---- Chern targets -------------------------------------------------------

ChernTarget ChernTarget::make(ChernKind kind, unsigned n, unsigned nu) {
  if (n == 0) throw DomainError("Chern target needs n >= 1");
  ChernTarget t;
  t.n = n;
  t.nu = nu;
  t.kind = kind;
  for (unsigned j = 1; j <= n; ++j) {
    Scalar sum = 0;
    for (unsigned k = 0; k <= j; ++k) {
      Scalar c = binomial(n + 1, k);
      if (kind == ChernKind::Psi) c -= binomial(n + 1, static_cast<long>(k) - 1);
      sum += c * power(Scalar(nu), static_cast<long>(j - k));
    }
    t.cj.push_back(j % 2 == 0 ? sum : Scalar(-sum));
  }
  return t;
}

Scalar ChernTarget::coefficient(std::size_t j) const {
  if (j == 0) return 1;
  if (j > cj.size()) return 0;
  return cj[j - 1];
}

Scalar chern_integral(const ChernTarget& target, const SymSpec& sym) {
  const std::size_t arity = target.kind == ChernKind::Phi ? target.n : target.n + 1;
  if (sym.degree() != target.n)
    throw DomainError("symmetric polynomial has degree " + std::to_string(sym.degree()) + ", expected n = " +
                      std::to_string(target.n));
  if (sym.arity() != arity)
    throw DomainError("symmetric polynomial has arity " + std::to_string(sym.arity()) + ", expected " +
                      std::to_string(arity));
  // c_j -> cj * t^j turns a weighted-degree-n polynomial into (value) t^n.
  std::vector<Scalar> classes;
  for (std::size_t j = 1; j <= arity; ++j) classes.push_back(target.coefficient(j));
  Scalar value = eval_on_sigmas(sym, classes);
  return target.n % 2 == 0 ? value : Scalar(-value);
}

SymSpec sigma_power(std::size_t arity, unsigned k, unsigned exponent) {
  if (k == 0 || k > arity) throw DomainError("sigma index out of range");
  Exponent e(arity, 0);
  e[k - 1] = exponent;
  return SymSpec(arity, k * exponent, MultiPoly::monomial(e));
}

// ---- census ---------------------------------------------------------------

namespace {

Integer ipow(unsigned long base, unsigned long e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

void reject_duplicates(const std::vector<ProjPoint>& points) {
  std::set<ProjPoint> seen;
  for (const auto& p : points)
    if (!seen.insert(p).second) throw DomainError("duplicate point " + p.to_string());
}

unsigned long to_ulong(const Integer& v) { return v.get_ui(); }

std::string incomplete_note(unsigned long total, unsigned long expected) {
  return "census incomplete (" + std::to_string(total) + " of " + std::to_string(expected) +
         "): residues reported, sum not asserted";
}

}  // namespace

unsigned long expected_census(std::size_t n, unsigned nu) {
  if (nu == 0) throw DomainError("census needs nu >= 1");
  Integer top = ipow(nu + 1, n + 1) - 1;
  return to_ulong(Integer(top / nu));
}

CensusResult census(const HomogeneousMap& f, const std::vector<ProjPoint>& points, const LocalOptions& options) {
  reject_duplicates(points);
  CensusResult out;
  for (const auto& p : points) {
    PointEntry entry{p, classify_point(f, p), std::nullopt, std::nullopt, std::nullopt, std::nullopt};
    if (entry.kind != PointKind::RegularNonFixed) {
      LocalModel model = dehomogenize(f, p);
      entry.mult = local_multiplicity(model.g, model.w0, options).mult();
      out.total += *entry.mult;
    }
    out.per_point.push_back(std::move(entry));
  }
  const std::size_t n = f.n();
  const unsigned long d = f.degree();
  out.expected = expected_census(n, f.nu());
  out.draft_count = to_ulong(Integer((ipow(d, n + 1) - 1) / (d - 1)));
  out.draft_count_literal = to_ulong(Integer((ipow(d, n) - 1) / (d - 1)));
  out.complete = out.total == out.expected;
  return out;
}

// ---- residue sums ---------------------------------------------------------

VerificationReport verify_theorem1(const HomogeneousMap& f, const std::vector<ProjPoint>& points,
                                   Theorem1Part part, const std::optional<SymSpec>& sym,
                                   const ResidueOptions& options) {
  reject_duplicates(points);
  const std::size_t n = f.n();
  VerificationReport report;
  ResidueKind kind = ResidueKind::Res1;
  switch (part) {
    case Theorem1Part::I:
      report.check = "1i";
      report.rhs = n % 2 == 0 ? 1 : -1;
      break;
    case Theorem1Part::II:
      report.check = "1ii";
      kind = ResidueKind::Res2;
      if (!sym) throw DomainError("verify 1ii needs a symmetric polynomial phi");
      report.rhs = chern_integral(ChernTarget::make(ChernKind::Phi, n, f.nu()), *sym);
      break;
    case Theorem1Part::III:
      report.check = "1iii";
      kind = ResidueKind::Res3;
      if (f.nu() <= 1) throw DomainError("verify 1iii requires nu > 1 (map degree >= 3)");
      if (!sym) throw DomainError("verify 1iii needs a symmetric polynomial psi");
      report.rhs = chern_integral(ChernTarget::make(ChernKind::Psi, n, f.nu()), *sym);
      break;
  }

  report.lhs = 0;
  for (const auto& p : points) {
    PointEntry entry{p, classify_point(f, p), std::nullopt, std::nullopt, std::nullopt, std::nullopt};
    if (entry.kind == PointKind::RegularNonFixed) {
      report.notes.push_back("skipped regular point " + p.to_string());
    } else {
      ResidueValue r = compute_residue({kind, &f, p, kind == ResidueKind::Res1 ? std::nullopt : sym, std::nullopt},
                                       options);
      entry.mult = r.local.mult;
      entry.residue = r.value;
      entry.path = r.path;
      report.lhs += r.value;
      report.census_total += r.local.mult;
    }
    report.per_point.push_back(std::move(entry));
  }
  report.census_expected = expected_census(n, f.nu());
  report.complete = report.census_total == report.census_expected;
  if (!report.complete) report.notes.push_back(incomplete_note(report.census_total, report.census_expected));
  report.pass = report.complete && report.lhs == report.rhs;
  return report;
}

// ---- Ueda -----------------------------------------------------------------

namespace {

struct SimpleFixedData {
  std::vector<Scalar> sigma_df;      // sigma_1..sigma_n of df_p
  std::vector<Scalar> one_minus;     // sigma_1..sigma_n of I - df_p
  Scalar prod_one_minus;             // prod (1 - lambda_j)
};

// Holomorphy and simplicity preconditions shared by both Ueda checks; fills
// the per-point entries and census fields of `report`.
std::vector<SimpleFixedData> ueda_points(const HomogeneousMap& f, const std::vector<ProjPoint>& points,
                                         const ResidueOptions& options, VerificationReport& report) {
  reject_duplicates(points);
  const std::size_t n = f.n();
  std::vector<SimpleFixedData> data;
  for (const auto& p : points) {
    PointEntry entry{p, classify_point(f, p), std::nullopt, std::nullopt, std::nullopt, std::nullopt};
    if (entry.kind == PointKind::IndeterminacyPoint)
      throw DomainError("indeterminacy point " + p.to_string() + " present: the map is not holomorphic");
    if (entry.kind == PointKind::RegularNonFixed) {
      report.notes.push_back("skipped regular point " + p.to_string());
      report.per_point.push_back(std::move(entry));
      continue;
    }
    FixedPointSpectrum s = fixed_point_spectrum(f, p);
    if (!s.simple) throw DomainError("non-simple fixed point " + p.to_string() + ": det(Jac f~ - I) = 0");
    LocalModel model = dehomogenize(f, p);
    entry.mult = local_multiplicity(model.g, model.w0, options.local).mult();
    report.census_total += *entry.mult;

    SimpleFixedData d;
    d.sigma_df = s.sigma_df;
    d.one_minus = sigma_shift_all(s.sigma_df);
    // Denominator the direct way, (-1)^n det(Jac f~ - I), cross-checked
    // against the binomial sigma_n(I - L) formula.
    Scalar det_shift = char_poly_values(s.jac_f - PolyMatrix::identity(n)).back();
    d.prod_one_minus = n % 2 == 0 ? det_shift : Scalar(-det_shift);
    if (d.prod_one_minus != d.one_minus.back())
      throw std::logic_error("sigma_n(I - df) disagrees with det(I - df) at " + p.to_string());
    data.push_back(std::move(d));
    report.per_point.push_back(std::move(entry));
  }
  report.census_expected = expected_census(n, f.nu());
  report.complete = report.census_total == report.census_expected;
  if (!report.complete) report.notes.push_back(incomplete_note(report.census_total, report.census_expected));
  return data;
}

bool all_hold(const std::vector<Identity>& ids) {
  for (const auto& id : ids)
    if (!id.holds) return false;
  return true;
}

}  // namespace

VerificationReport ueda_check(const HomogeneousMap& f, const std::vector<ProjPoint>& points, unsigned k,
                              const ResidueOptions& options) {
  const std::size_t n = f.n();
  if (k > n) throw DomainError("ueda index k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
  VerificationReport report;
  report.check = "ueda k=" + std::to_string(k);
  std::vector<SimpleFixedData> data = ueda_points(f, points, options, report);

  report.lhs = 0;
  std::size_t next = 0;
  for (auto& entry : report.per_point) {
    if (entry.kind != PointKind::FixedPoint) continue;
    const SimpleFixedData& d = data[next++];
    Scalar numerator = k == 0 ? Scalar(1) : d.sigma_df[k - 1];
    entry.residue = numerator / d.prod_one_minus;
    report.lhs += *entry.residue;
  }
  Scalar base = f.degree();
  report.rhs = power(k % 2 == 0 ? base : Scalar(-base), k);

  // Res2 recovered from the eigenvalue data, phi(I - df)/prod(1 - lambda),
  // against the residue engine and the Chern target.
  ChernTarget target = ChernTarget::make(ChernKind::Phi, n, f.nu());
  for (const SymSpec& phi : {sigma_power(n, static_cast<unsigned>(n), 1), sigma_power(n, 1, static_cast<unsigned>(n))}) {
    Scalar from_ueda = 0;
    std::size_t agree = 0;
    std::size_t i = 0;
    for (const auto& entry : report.per_point) {
      if (entry.kind != PointKind::FixedPoint) continue;
      const SimpleFixedData& d = data[i++];
      Scalar local = eval_on_sigmas(phi, d.one_minus) / d.prod_one_minus;
      from_ueda += local;
      if (res2(f, entry.point, phi, options).value == local) ++agree;
    }
    const std::string name = "phi = " + phi.to_string();
    report.identities.push_back({"Res2 from eigenvalue data matches residue engine, " + name,
                                 Scalar(static_cast<unsigned long>(agree)), Scalar(static_cast<unsigned long>(i)),
                                 agree == i, false});
    Scalar rhs = chern_integral(target, phi);
    report.identities.push_back({"Res2 sum from eigenvalue data, " + name, from_ueda, rhs,
                                 !report.complete || from_ueda == rhs, false});
  }
  report.pass = report.complete && report.lhs == report.rhs && all_hold(report.identities);
  return report;
}

std::vector<Scalar> default_t_samples() {
  return {Scalar(-1), Scalar(0), make_scalar(1, 2), Scalar(1), Scalar(2), Scalar(3)};
}

VerificationReport ueda_polynomial_checks(const HomogeneousMap& f, const std::vector<ProjPoint>& points,
                                          const std::vector<Scalar>& t_samples, const ResidueOptions& options) {
  const std::size_t n = f.n();
  VerificationReport report;
  report.check = "ueda-poly";
  report.draft = true;
  std::vector<SimpleFixedData> data = ueda_points(f, points, options, report);
  const Scalar d = f.degree();

  for (const Scalar& t : t_samples) {
    // det(tI - df) = sum_k (-1)^k sigma_k t^(n-k)
    Scalar lhs = 0;
    for (const auto& pd : data) {
      Scalar phi_t = power(t, static_cast<long>(n));
      for (std::size_t k = 1; k <= n; ++k) {
        Scalar term = pd.sigma_df[k - 1] * power(t, static_cast<long>(n - k));
        phi_t += k % 2 == 0 ? term : Scalar(-term);
      }
      lhs += phi_t / pd.prod_one_minus;
    }
    Scalar rhs = 0;
    for (std::size_t k = 0; k <= n; ++k) rhs += power(d, static_cast<long>(n - k)) * power(t, static_cast<long>(k));
    report.identities.push_back({"sum det(tI - df)/det(I - df) at t = " + to_string(t), lhs, rhs,
                                 !report.complete || lhs == rhs, true});
  }

  report.lhs = 0;
  std::size_t i = 0;
  for (auto& entry : report.per_point) {
    if (entry.kind != PointKind::FixedPoint) continue;
    const SimpleFixedData& pd = data[i++];
    Scalar sub = n == 1 ? Scalar(1) : pd.one_minus[n - 2];  // sigma_(n-1)(I - df)
    entry.residue = sub / pd.prod_one_minus;
    report.lhs += *entry.residue;
  }
  report.rhs = 0;
  for (std::size_t k = 0; k <= n; ++k) report.rhs += Scalar(static_cast<unsigned long>(k)) * power(d, static_cast<long>(n - k));
  report.pass = report.complete && report.lhs == report.rhs && all_hold(report.identities);
  return report;
}

// ---- examples -------------------------------------------------------------

namespace {

HomogeneousMap map_from(std::size_t n, const std::vector<std::vector<std::pair<Exponent, long>>>& comps) {
  std::vector<MultiPoly> out;
  for (const auto& terms : comps) {
    MultiPoly p(n + 1);
    for (const auto& [e, c] : terms) p.add_term(e, c);
    out.push_back(std::move(p));
  }
  return HomogeneousMap::validate(std::move(out));
}

ProjPoint point_of(std::initializer_list<long> coords) {
  std::vector<Scalar> v;
  for (long c : coords) v.emplace_back(c);
  return ProjPoint(std::move(v));
}

}  // namespace

ExampleMap make_power_map(unsigned n, unsigned nu) {
  if (n == 0 || nu == 0) throw DomainError("power map needs n >= 1 and nu >= 1");
  if (nu > 2) throw DomainError("non-rational fixed points: nu = " + std::to_string(nu) + " has non-rational roots of unity");
  std::vector<MultiPoly> comps;
  for (std::size_t j = 0; j <= n; ++j) {
    Exponent e(n + 1, 0);
    e[j] = nu + 1;
    comps.push_back(MultiPoly::monomial(e));
  }
  ExampleMap ex{"power-map", HomogeneousMap::validate(std::move(comps)), {}, {}};
  std::vector<long> roots = nu == 1 ? std::vector<long>{1} : std::vector<long>{1, -1};

  for (unsigned level = 0; level <= n; ++level) {
    std::vector<std::size_t> support;
    std::function<void(std::size_t)> choose = [&](std::size_t from) {
      if (support.size() == level + 1) {
        // first support coordinate normalized to 1, the others range over roots
        std::vector<std::size_t> pick(level, 0);
        while (true) {
          std::vector<Scalar> coords(n + 1, Scalar(0));
          coords[support[0]] = 1;
          for (unsigned i = 0; i < level; ++i) coords[support[i + 1]] = roots[pick[i]];
          ex.points.emplace_back(std::move(coords));
          ex.levels.push_back(level);
          std::size_t i = level;
          while (i > 0 && pick[i - 1] + 1 == roots.size()) pick[--i] = 0;
          if (i == 0) break;
          ++pick[i - 1];
        }
        return;
      }
      for (std::size_t v = from; v <= n; ++v) {
        support.push_back(v);
        choose(v + 1);
        support.pop_back();
      }
    };
    choose(0);
  }
  return ex;
}

ExampleMap make_cremona() {
  HomogeneousMap f = map_from(2, {{{{0, 1, 1}, 1}}, {{{1, 0, 1}, 1}}, {{{1, 1, 0}, 1}}});
  return {"cremona",
          std::move(f),
          {point_of({1, 0, 0}), point_of({0, 1, 0}), point_of({0, 0, 1}), point_of({1, 1, 1}), point_of({1, 1, -1}),
           point_of({1, -1, 1}), point_of({1, -1, -1})},
          {}};
}

ExampleMap make_degenerate_p1() {
  HomogeneousMap f = map_from(1, {{{{2, 0}, 1}}, {{{1, 1}, 1}, {{0, 2}, 1}}});
  return {"degenerate-p1", std::move(f), {point_of({1, 0}), point_of({0, 1})}, {}};
}

ExampleMap make_degenerate_p2() {
  HomogeneousMap f = map_from(2, {{{{2, 0, 0}, 1}}, {{{1, 1, 0}, 1}, {{0, 2, 0}, 1}}, {{{0, 0, 2}, 1}}});
  return {"degenerate-p2",
          std::move(f),
          {point_of({1, 0, 0}), point_of({1, 0, 1}), point_of({0, 1, 0}), point_of({0, 0, 1}), point_of({0, 1, 1})},
          {}};
}

std::vector<ExampleMap> bundled_examples() {
  std::vector<ExampleMap> out;
  for (unsigned nu = 1; nu <= 2; ++nu)
    for (unsigned n = 1; n <= 3; ++n) out.push_back(make_power_map(n, nu));
  out.push_back(make_cremona());
  out.push_back(make_degenerate_p1());
  out.push_back(make_degenerate_p2());
  return out;
}

ExampleMap make_example(const std::string& name, unsigned n, unsigned nu) {
  if (name == "power-map") return make_power_map(n, nu);
  if (name == "cremona") return make_cremona();
  if (name == "degenerate-p1") return make_degenerate_p1();
  if (name == "degenerate-p2") return make_degenerate_p2();
  throw DomainError("unknown example '" + name + "' (expected power-map, cremona, degenerate-p1, degenerate-p2)");
}

Scalar power_map_level_res1(unsigned n, unsigned nu, unsigned level) {
  Scalar sign = (n + level) % 2 == 0 ? 1 : -1;
  return sign / power(Scalar(nu), level);
}

Scalar power_map_level_sum_ii(unsigned n, unsigned nu, const SymSpec& phi) {
  Scalar total = 0;
  for (unsigned level = 0; level <= n; ++level) {
    std::vector<Scalar> sigmas;
    for (unsigned i = 0; i < n; ++i) sigmas = augment_sigmas<Scalar>(i < level ? Scalar(nu) : Scalar(-1), sigmas);
    Scalar term = binomial(n + 1, level + 1) * eval_on_sigmas(phi, sigmas);
    total += level % 2 == 0 ? term : Scalar(-term);
  }
  return n % 2 == 0 ? total : Scalar(-total);
}

// ---- Abel -----------------------------------------------------------------

AbelResult abel_identity(unsigned r, const Scalar& x, const Scalar& y, const Scalar& z) {
  if (is_zero(x)) throw DomainError("Abel identity needs x != 0");
  AbelResult out;
  out.lhs = power(Scalar(x + y), r);
  out.rhs = 0;
  for (unsigned k = 0; k <= r; ++k) {
    Scalar a = x - Scalar(k) * z;
    Scalar b = y + Scalar(k) * z;
    out.rhs += binomial(r, k) * x * power(a, static_cast<long>(k) - 1) * power(b, static_cast<long>(r - k));
  }
  out.holds = out.lhs == out.rhs;
  return out;
}

bool abel_identity_check(unsigned r, const Scalar& x, const Scalar& y, const Scalar& z) {
  return abel_identity(r, x, y, z).holds;
}

ExampleChain example_chain_check(unsigned n, unsigned nu) {
  ExampleChain c;
  Scalar x = n + nu + 1;
  c.abel_holds = abel_identity_check(n + 1, x, Scalar(-x), Scalar(nu + 1));
  SymSpec phi = sigma_power(n, 1, n);
  c.level_sum = power_map_level_sum_ii(n, nu, phi);
  c.chern = chern_integral(ChernTarget::make(ChernKind::Phi, n, nu), phi);
  c.closed_form = power(x, n);
  return c;
}

}  // namespace projindex
