#include <doctest.h>

#include "projindex/error.hpp"
#include "projindex/localalg.hpp"
#include "projindex/poly_parse.hpp"
#include "support/gen.hpp"

using namespace projindex;

namespace {

std::vector<MultiPoly> ws(std::vector<const char*> texts) {
  std::vector<MultiPoly> out;
  for (const char* t : texts) out.push_back(parse_poly(t, VarScheme::chart(texts.size())));
  return out;
}

std::vector<Scalar> origin(std::size_t n) { return std::vector<Scalar>(n, Scalar(0)); }

LocalAlgebra at_origin(std::vector<const char*> texts, const LocalOptions& o = {}) {
  return local_multiplicity(ws(texts), origin(texts.size()), o);
}

}  // namespace

TEST_CASE("multiplicities of standard ideals") {
  CHECK(at_origin({"w1", "w2", "w3"}).mult() == 1);
  CHECK(at_origin({"w1^2"}).mult() == 2);
  CHECK(at_origin({"w1^2", "w2^3"}).mult() == 6);
  CHECK(at_origin({"w1^2 - w2^3", "w1*w2"}).mult() == 5);
  CHECK(at_origin({"w1 + w2^2", "w2^3 + w1^5"}).mult() == 3);
  // units away from the origin do not change the local count
  CHECK(at_origin({"w1^2*(1 + w2)", "w2*(3 - w1)"}).mult() == 2);
}

TEST_CASE("multiplicity is computed after translating to the center") {
  // (w1 - 1)^2 at w1 = 1
  auto g = ws({"w1^2 - 2*w1 + 1"});
  std::vector<Scalar> c{Scalar(1)};
  LocalAlgebra la = local_multiplicity(g, c);
  CHECK(la.mult() == 2);
  CHECK(la.center() == c);
  std::vector<Scalar> bad{Scalar(2)};
  CHECK_THROWS_WITH_AS(local_multiplicity(g, bad), doctest::Contains("does not vanish"), DomainError);
}

TEST_CASE("standard monomials span the quotient") {
  LocalAlgebra la = at_origin({"w1^2", "w2^3"});
  CHECK(la.standard_monomials().size() == la.mult());
  for (const auto& e : la.standard_monomials()) CHECK_FALSE(la.contains_centered(MultiPoly::monomial(e)));
}

TEST_CASE("stabilization is certified at later orders") {
  std::vector<std::vector<const char*>> cases{
      {"w1^2"}, {"w1^2", "w2^3"}, {"w1^2 - w2^3", "w1*w2"}, {"w1 + w2^2", "w2^3 + w1^5"}, {"w1*w2", "w1^2 + w2^2"}};
  for (const auto& c : cases) {
    auto g = ws(c);
    LocalAlgebra la = local_multiplicity(g, origin(c.size()));
    for (unsigned extra = 0; extra <= 2; ++extra)
      CHECK(truncated_quotient_dim(g, la.stab_order() + extra) == la.mult());
    if (la.stab_order() > 0) CHECK(truncated_quotient_dim(g, la.stab_order() - 1) < la.mult());
  }
}

TEST_CASE("ideal membership") {
  LocalAlgebra la = at_origin({"w1^2 - w2^3", "w1*w2"});
  CHECK(la.contains_centered(ws({"w1^2 - w2^3", "0"})[0]));
  CHECK(la.contains_centered(ws({"w1^3", "0"})[0]));
  CHECK(la.contains_centered(ws({"w2^4", "0"})[0]));
  CHECK_FALSE(la.contains_centered(ws({"w2^3", "0"})[0]));
  CHECK_FALSE(la.contains_centered(ws({"w1", "0"})[0]));
  // combinations of the generators stay inside
  for (int trial = 0; trial < 20; ++trial) {
    MultiPoly h = gen::poly(2, 3) * ws({"w1*w2", "0"})[0] + gen::poly(2, 2) * ws({"w1^2 - w2^3", "0"})[0];
    CHECK(la.contains_centered(h));
  }
  std::vector<Scalar> c{Scalar(1), Scalar(0)};
  LocalAlgebra shifted = local_multiplicity(ws({"(w1 - 1)^2", "w2"}), c);
  CHECK(membership_test(ws({"w1^2 - 2*w1 + 1", "0"})[0], shifted));
  CHECK_FALSE(membership_test(ws({"w1 - 1", "0"})[0], shifted));
}

TEST_CASE("minimal monomial exponents") {
  CHECK(monomial_exponents(at_origin({"w1^2", "w2^3"})) == std::vector<unsigned>{2, 3});
  CHECK(monomial_exponents(at_origin({"w1^2 - w2^3", "w1*w2"})) == std::vector<unsigned>{3, 4});
  CHECK(monomial_exponents(at_origin({"w1 + w2^2", "w2^3"})) == std::vector<unsigned>{2, 3});
}

TEST_CASE("cofactor series reproduce the monomials") {
  auto check = [](std::vector<const char*> texts) {
    LocalAlgebra la = at_origin(texts);
    auto alpha = monomial_exponents(la);
    const unsigned order = 8;
    JetMatrix b = cofactor_series(la, alpha, order);
    const std::size_t n = la.n();
    for (std::size_t i = 0; i < n; ++i) {
      MultiPoly sum(n);
      for (std::size_t j = 0; j < n; ++j) sum += b[i][j].base() * la.centered_g()[j];
      Exponent e(n, 0);
      e[i] = alpha[i];
      CHECK(sum.truncate(order) == MultiPoly::monomial(e));
    }
  };
  check({"w1^2"});
  check({"w1^2 - w2^3", "w1*w2"});
  check({"w1 + w2^2", "w2^3 + w1^5"});
}

TEST_CASE("non-isolated zeros hit the truncation cap") {
  CHECK_THROWS_AS(at_origin({"w1", "w1"}), NonIsolatedZero);
  CHECK_THROWS_AS(at_origin({"w1*w2", "w1^2"}), NonIsolatedZero);
  CHECK_THROWS_AS(at_origin({"0"}), NonIsolatedZero);
  // a cap below the needed order is reported the same way
  LocalOptions tight;
  tight.trunc_cap = 2;
  CHECK_THROWS_AS(at_origin({"w1^4"}, tight), NonIsolatedZero);
  CHECK(at_origin({"w1^4"}).mult() == 4);
  CHECK(default_trunc_cap(3) == 28);
}

TEST_CASE("invertible linear parts give multiplicity one") {
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = static_cast<std::size_t>(gen::integer(1, 3));
    PolyMatrix l = gen::invertible_matrix(n);
    std::vector<MultiPoly> g;
    for (std::size_t i = 0; i < n; ++i) {
      MultiPoly gi(n);
      for (std::size_t j = 0; j < n; ++j) gi += MultiPoly::variable(n, j) * l.scalar(i, j);
      // higher-order noise vanishing at the origin
      MultiPoly noise = gen::poly(n, 3);
      gi += noise - noise.truncate(1);
      g.push_back(gi);
    }
    LocalAlgebra la = local_multiplicity(g, origin(n));
    CHECK(la.mult() == 1);
    CHECK(la.stab_order() == 0);
  }
}
