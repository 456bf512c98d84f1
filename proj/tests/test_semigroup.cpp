#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "vll/semigroup.hpp"
#include "vll/variety.hpp"

using namespace vll;

namespace {
  Identity id(char const* text) {
    return parse_identity(text);
  }
}  // namespace

TEST_CASE("Cayley tables are validated", "[semigroup]") {
  CHECK_NOTHROW(FiniteSemigroup::validate({{0, 0}, {1, 1}}));
  CHECK_NOTHROW(FiniteSemigroup::validate({{0, 1}, {1, 0}}));
  CHECK_THROWS_AS(FiniteSemigroup::validate({{1, 0}, {0, 0}}), NotAssociative);
  CHECK_THROWS_AS(FiniteSemigroup::validate({{0, 2}, {1, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(FiniteSemigroup::validate({{0, 0}}), std::invalid_argument);
  try {
    FiniteSemigroup::validate({{1, 0}, {0, 0}});
  } catch (NotAssociative const& e) {
    auto const t = FiniteSemigroup::Table{{1, 0}, {0, 0}};
    CHECK(t[t[e.a][e.b]][e.c] != t[e.a][t[e.b][e.c]]);
  }
}

TEST_CASE("identities in small models", "[semigroup]") {
  auto const rz = builtin::right_zero2();
  CHECK(satisfies(rz, id("ab = cb")).satisfied);
  auto const r = satisfies(rz, id("ab = ba"));
  CHECK_FALSE(r.satisfied);
  REQUIRE(r.witness);
  CHECK(r.witness->at(Letter(1)) == 0);
  CHECK(r.witness->at(Letter(2)) == 1);
  CHECK(satisfies(builtin::semilattice2(), id("a = aa")).satisfied);
  auto const cm = satisfies(builtin::cyclic_monoid(2), id("ab = aab"));
  CHECK_FALSE(cm.satisfied);
}

TEST_CASE("zero identities in models", "[semigroup]") {
  CHECK(satisfies(builtin::nil2(), id("ab = 0")).satisfied);
  CHECK_FALSE(satisfies(builtin::semilattice2(), id("a = 0")).satisfied);
  CHECK_FALSE(satisfies(builtin::cyclic_monoid(2), id("aa = 0")).satisfied);
  CHECK_FALSE(satisfies(builtin::cyclic_group(2), id("aa = 0")).satisfied);
  CHECK(builtin::nil2().zero() == std::optional<std::size_t>(0));
  CHECK_FALSE(builtin::cyclic_group(3).zero());
}

TEST_CASE("builtin models", "[semigroup]") {
  auto const cm = builtin::cyclic_monoid(2);
  CHECK(cm.order() == 3);
  CHECK(cm.product(1, 1) == 2);
  CHECK(cm.product(2, 1) == 2);
  CHECK(cm.product(0, 1) == 1);
  auto const z2 = builtin::cyclic_group(2);
  CHECK(z2.table() == FiniteSemigroup::Table{{0, 1}, {1, 0}});
  auto const nil = builtin::nil2();
  CHECK(nil.table() == FiniteSemigroup::Table{{0, 0}, {0, 0}});
  CHECK(builtin_semigroup("Z3").order() == 3);
  CHECK(builtin_semigroup("Zr(3)").order() == 3);
  CHECK(builtin_semigroup("CM4").order() == 5);
  CHECK(builtin_semigroup("CyclicMonoid(2)").table() == cm.table());
  CHECK_THROWS_AS(builtin_semigroup("Q8"), std::invalid_argument);
  for (std::size_t m = 1; m <= 4; ++m) {
    auto const S = builtin::cyclic_monoid(m);
    auto const a = Word({1});
    CHECK(satisfies(S, Identity::equation(a.power(m), a.power(m + 1)))
              .satisfied);
    CHECK(satisfies(S, id("ab = ba")).satisfied);
  }
}

TEST_CASE("direct products", "[semigroup]") {
  auto const band = direct_product(builtin::left_zero2(),
                                   builtin::right_zero2());
  CHECK(band.order() == 4);
  CHECK(satisfies(band, id("aba = a")).satisfied);
  CHECK_FALSE(satisfies(band, id("ab = a")).satisfied);
  auto const sl = direct_product(builtin::semilattice2(),
                                 builtin::semilattice2());
  CHECK(satisfies(sl, id("ab = ba")).satisfied);
  CHECK(satisfies(sl, id("a = aa")).satisfied);
  FiniteSemigroup const one = FiniteSemigroup::validate({{0}});
  auto const            copy = direct_product(builtin::cyclic_group(3), one);
  CHECK(copy.table() == builtin::cyclic_group(3).table());
}

TEST_CASE("evaluation agrees with a left fold", "[semigroup][oracle]") {
  auto const S     = builtin::cyclic_monoid(3);
  auto const t     = S.table();
  auto const words = all_words(5, 2);
  for (auto const& w : words) {
    for (std::size_t a = 0; a < S.order(); ++a) {
      for (std::size_t b = 0; b < S.order(); ++b) {
        Assignment const                           as = {{Letter(1), a},
                                                         {Letter(2), b}};
        std::map<std::uint32_t, std::size_t> const raw = {{1, a}, {2, b}};
        REQUIRE(S.evaluate(w, as) == oracle::evaluate(t, w, raw));
      }
    }
  }
}
