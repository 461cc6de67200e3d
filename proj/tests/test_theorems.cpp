#include <doctest.h>

#include <string>

#include "projindex/error.hpp"
#include "projindex/theorems.hpp"
#include "support/gen.hpp"

using namespace projindex;

namespace {

Scalar sign(long k) { return k % 2 == 0 ? Scalar(1) : Scalar(-1); }

Scalar residue_sum(const VerificationReport& r) {
  Scalar s = 0;
  for (const auto& e : r.per_point)
    if (e.residue) s += *e.residue;
  return s;
}

std::string label(const ExampleMap& ex) {
  return ex.name + " n=" + std::to_string(ex.map.n()) + " nu=" + std::to_string(ex.map.nu());
}

}  // namespace

TEST_CASE("Chern integrals of the fixed-point bundle in closed form") {
  for (unsigned n = 1; n <= 5; ++n) {
    for (unsigned nu = 1; nu <= 5; ++nu) {
      ChernTarget t = ChernTarget::make(ChernKind::Phi, n, nu);
      // sigma_n integrates to sum_k C(n+1, k) nu^(n-k)
      Scalar top = 0;
      for (unsigned k = 0; k <= n; ++k) top += binomial(n + 1, k) * power(Scalar(nu), static_cast<long>(n - k));
      CHECK(chern_integral(t, sigma_power(n, n, 1)) == top);
      CHECK(chern_integral(t, sigma_power(n, 1, n)) == power(Scalar(n + nu + 1), static_cast<long>(n)));
      CHECK(t.coefficient(0) == 1);
      CHECK(t.coefficient(n + 1) == 0);
    }
  }
  ChernTarget psi = ChernTarget::make(ChernKind::Psi, 1, 2);
  CHECK(chern_integral(psi, parse_sym_spec("e1", 2)) == 3);
  ChernTarget phi = ChernTarget::make(ChernKind::Phi, 2, 1);
  CHECK_THROWS_AS(chern_integral(phi, parse_sym_spec("e1", 2)), DomainError);
  CHECK_THROWS_AS(chern_integral(phi, parse_sym_spec("e1^2", 3)), DomainError);
}

TEST_CASE("sigma powers") {
  CHECK(sigma_power(3, 1, 3) == parse_sym_spec("e1^3", 3));
  CHECK(sigma_power(3, 3, 1) == parse_sym_spec("x1*x2*x3", 3));
  CHECK(sigma_power(2, 2, 2).degree() == 4);
}

TEST_CASE("residue sums over every bundled example") {
  for (const auto& ex : bundled_examples()) {
    CAPTURE(label(ex));
    const std::size_t n = ex.map.n();
    VerificationReport one = verify_theorem1(ex.map, ex.points, Theorem1Part::I);
    CHECK(one.complete);
    CHECK(one.pass);
    CHECK(one.lhs == sign(static_cast<long>(n)));
    CHECK(one.rhs == sign(static_cast<long>(n)));
    CHECK(residue_sum(one) == one.lhs);

    ChernTarget phi_target = ChernTarget::make(ChernKind::Phi, static_cast<unsigned>(n), ex.map.nu());
    for (const auto& phi : elementary_monomials(n, static_cast<unsigned>(n))) {
      CAPTURE(phi.to_string());
      VerificationReport two = verify_theorem1(ex.map, ex.points, Theorem1Part::II, phi);
      CHECK(two.pass);
      CHECK(two.rhs == chern_integral(phi_target, phi));
      CHECK(residue_sum(two) == two.lhs);
    }

    if (ex.map.nu() == 1) {
      CHECK_THROWS_AS(verify_theorem1(ex.map, ex.points, Theorem1Part::III, parse_sym_spec("e1", n + 1)),
                      DomainError);
      continue;
    }
    ChernTarget psi_target = ChernTarget::make(ChernKind::Psi, static_cast<unsigned>(n), ex.map.nu());
    for (const auto& psi : elementary_monomials(n + 1, static_cast<unsigned>(n))) {
      CAPTURE(psi.to_string());
      VerificationReport three = verify_theorem1(ex.map, ex.points, Theorem1Part::III, psi);
      CHECK(three.pass);
      CHECK(three.rhs == chern_integral(psi_target, psi));
    }
  }
}

TEST_CASE("point lists that are incomplete, padded or repeated") {
  ExampleMap ex = make_cremona();
  std::vector<ProjPoint> padded = ex.points;
  padded.emplace_back(std::vector<Scalar>{Scalar(1), Scalar(2), Scalar(3)});
  VerificationReport r = verify_theorem1(ex.map, padded, Theorem1Part::I);
  CHECK(r.pass);
  CHECK(r.per_point.back().kind == PointKind::RegularNonFixed);
  CHECK_FALSE(r.per_point.back().residue.has_value());
  CHECK_FALSE(r.notes.empty());

  std::vector<ProjPoint> partial(ex.points.begin(), ex.points.end() - 1);
  VerificationReport p = verify_theorem1(ex.map, partial, Theorem1Part::I);
  CHECK_FALSE(p.complete);
  CHECK_FALSE(p.pass);

  std::vector<ProjPoint> repeated = ex.points;
  repeated.push_back(ProjPoint({Scalar(2), Scalar(0), Scalar(0)}));
  CHECK_THROWS_AS(verify_theorem1(ex.map, repeated, Theorem1Part::I), DomainError);
  CHECK_THROWS_AS(census(ex.map, repeated), DomainError);

  CHECK_THROWS_AS(verify_theorem1(ex.map, ex.points, Theorem1Part::II), DomainError);
}

TEST_CASE("fixed-point trace identities") {
  std::vector<ExampleMap> simple;
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned nu = 1; nu <= 2; ++nu) simple.push_back(make_power_map(n, nu));
  simple.push_back(make_degenerate_p1());
  for (const auto& ex : simple) {
    CAPTURE(label(ex));
    const unsigned n = static_cast<unsigned>(ex.map.n());
    if (ex.name == "degenerate-p1") {
      CHECK_THROWS_WITH_AS(ueda_check(ex.map, ex.points, 1), doctest::Contains("non-simple"), DomainError);
      continue;
    }
    for (unsigned k = 0; k <= n; ++k) {
      VerificationReport r = ueda_check(ex.map, ex.points, k);
      CHECK(r.pass);
      CHECK(r.rhs == sign(k) * power(Scalar(ex.map.nu() + 1), k));
      for (const auto& id : r.identities) CHECK_MESSAGE(id.holds, id.label);
    }
    VerificationReport poly = ueda_polynomial_checks(ex.map, ex.points, default_t_samples());
    CHECK(poly.draft);
    CHECK(poly.pass);
    CHECK(poly.identities.size() >= default_t_samples().size());
  }
  ExampleMap p2 = make_degenerate_p2();
  CHECK_THROWS_WITH_AS(ueda_check(p2.map, p2.points, 1), doctest::Contains("non-simple"), DomainError);
  ExampleMap cremona = make_cremona();
  CHECK_THROWS_AS(ueda_check(cremona.map, cremona.points, 1), DomainError);
}

TEST_CASE("census of bundled examples") {
  for (const auto& ex : bundled_examples()) {
    CAPTURE(label(ex));
    const std::size_t n = ex.map.n();
    const unsigned d = ex.map.nu() + 1;
    CensusResult c = census(ex.map, ex.points);
    CHECK(c.complete);
    CHECK(c.total == c.expected);
    unsigned long full = 1;
    for (std::size_t i = 0; i <= n; ++i) full *= d;
    CHECK(c.expected == (full - 1) / ex.map.nu());
    CHECK(c.expected == expected_census(n, ex.map.nu()));
    CHECK(c.draft_count == c.expected);
    CHECK(c.draft_count_literal != c.expected);
  }
  ExampleMap p1 = make_degenerate_p1();
  CensusResult c = census(p1.map, {p1.points[0]});
  CHECK_FALSE(c.complete);
  CHECK(c.total == 2);
  CHECK(c.per_point[0].mult == 2u);
}

TEST_CASE("power-map generator") {
  for (unsigned n = 1; n <= 3; ++n) {
    for (unsigned nu = 1; nu <= 2; ++nu) {
      ExampleMap ex = make_power_map(n, nu);
      REQUIRE(ex.levels.size() == ex.points.size());
      for (unsigned l = 0; l <= n; ++l) {
        std::size_t count = 0;
        for (unsigned lv : ex.levels) count += lv == l;
        CHECK(Scalar(static_cast<long>(count)) == binomial(n + 1, l + 1) * power(Scalar(nu), l));
      }
      for (std::size_t i = 0; i < ex.points.size(); ++i) {
        CHECK(ex.points[i].nonzero_count() == ex.levels[i] + 1);
        CHECK(res1(ex.map, ex.points[i]).value == power_map_level_res1(n, nu, ex.levels[i]));
      }
      for (const auto& phi : elementary_monomials(n, n))
        CHECK(verify_theorem1(ex.map, ex.points, Theorem1Part::II, phi).lhs == power_map_level_sum_ii(n, nu, phi));
    }
  }
  CHECK_THROWS_WITH_AS(make_power_map(2, 3), doctest::Contains("non-rational"), DomainError);
  CHECK_THROWS_AS(make_example("no-such-map"), DomainError);
  CHECK(make_example("power-map", 2, 2).points.size() == 13);
}

TEST_CASE("Abel identity on random rationals") {
  for (int trial = 0; trial < 100; ++trial) {
    unsigned r = static_cast<unsigned>(gen::integer(0, 8));
    Scalar x = gen::nonzero_rational(), y = gen::rational(), z = trial % 10 == 0 ? Scalar(0) : gen::rational();
    AbelResult a = abel_identity(r, x, y, z);
    CHECK(a.lhs == power(Scalar(x + y), r));
    // direct evaluation of the right-hand side
    Scalar rhs = 0;
    for (unsigned k = 0; k <= r; ++k)
      rhs += binomial(r, k) * x * power(Scalar(x - k * z), static_cast<long>(k) - 1) *
             power(Scalar(y + k * z), static_cast<long>(r - k));
    CHECK(a.rhs == rhs);
    CHECK(a.holds);
    CHECK(abel_identity_check(r, x, y, z));
  }
  CHECK_THROWS_AS(abel_identity(3, Scalar(0), Scalar(1), Scalar(1)), DomainError);
}

TEST_CASE("power-map chain through the Abel identity") {
  for (unsigned n = 1; n <= 3; ++n) {
    for (unsigned nu = 1; nu <= 3; ++nu) {
      ExampleChain c = example_chain_check(n, nu);
      CHECK(c.abel_holds);
      CHECK(c.closed_form == power(Scalar(n + nu + 1), static_cast<long>(n)));
      CHECK(c.holds());
    }
  }
}
