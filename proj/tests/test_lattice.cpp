#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "vll/lattice.hpp"

using namespace vll;

namespace {
  std::size_t at(FiniteLattice const& L, char const* label) {
    auto i = L.find(label);
    REQUIRE(i);
    return *i;
  }

  std::vector<FiniteLattice> small_catalog() {
    std::vector<FiniteLattice> out;
    for (std::size_t n = 1; n <= 5; ++n) {
      out.push_back(catalog::chain(n));
    }
    out.push_back(catalog::boolean(2));
    out.push_back(catalog::boolean(3));
    out.push_back(catalog::M3());
    out.push_back(catalog::N5());
    out.push_back(catalog::product(catalog::N5(), catalog::chain(2)));
    out.push_back(catalog::product(catalog::M3(), catalog::chain(2)));
    out.push_back(catalog::product(catalog::chain(3), catalog::chain(3)));
    return out;
  }
}  // namespace

TEST_CASE("construction and validation", "[lattice]") {
  CHECK(catalog::chain(2).size() == 2);
  auto const n5 = catalog::N5();
  CHECK(n5.size() == 5);
  CHECK(n5.join(at(n5, "a"), at(n5, "c")) == at(n5, "1"));
  CHECK(n5.meet(at(n5, "b"), at(n5, "c")) == at(n5, "0"));
  CHECK(n5.bottom() == at(n5, "0"));
  CHECK(n5.top() == at(n5, "1"));
  // bowtie: two minimal below two maximal
  try {
    FiniteLattice::from_covers(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    FAIL("bowtie accepted");
  } catch (NotALattice const& e) {
    CHECK(std::string(e.what()).find("least upper bound")
          != std::string::npos);
  }
  CHECK_THROWS_AS(FiniteLattice::from_covers(2, {{0, 1}, {1, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(FiniteLattice::from_covers(2, {{0, 5}}),
                  std::invalid_argument);
  CHECK(catalog::product(catalog::N5(), catalog::chain(2)).size() == 10);
}

TEST_CASE("catalog names", "[lattice]") {
  CHECK(catalog_lattice("chain(4)").size() == 4);
  CHECK(catalog_lattice("boolean(3)").size() == 8);
  CHECK(catalog_lattice("product(N5, chain(2))").size() == 10);
  CHECK(catalog_lattice("dual(N5)").size() == 5);
  CHECK_THROWS_AS(catalog_lattice("chain(x)"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_lattice("K7"), std::invalid_argument);
}

TEST_CASE("special elements", "[lattice]") {
  auto const n5 = catalog::N5();
  auto const c  = classify_element(n5, at(n5, "c"));
  CHECK_FALSE(c.modular);
  REQUIRE(c.modular_witness);
  CHECK(*c.modular_witness == LawWitness{at(n5, "a"), at(n5, "b")});
  auto const m3 = catalog::M3();
  for (std::size_t x = 0; x < m3.size(); ++x) {
    CHECK(classify_element(m3, x).modular);
  }
  for (auto const& L : small_catalog()) {
    auto const b = classify_element(L, L.bottom());
    CHECK(b.distributive);
    CHECK(b.lower_modular);
    CHECK(classify_element(L, L.top()).lower_modular);
  }
}

TEST_CASE("classification agrees with brute force", "[lattice][oracle]") {
  for (auto const& L : small_catalog()) {
    auto const o = oracle::of(L);
    for (std::size_t a = 0; a < L.size(); ++a) {
      for (std::size_t b = 0; b < L.size(); ++b) {
        REQUIRE(L.join(a, b) == o.join(a, b));
        REQUIRE(L.meet(a, b) == o.meet(a, b));
      }
      auto const k = classify_element(L, a);
      REQUIRE(k.modular == o.modular(a));
      REQUIRE(k.lower_modular == o.lower_modular(a));
      REQUIRE(k.upper_modular == o.upper_modular(a));
      REQUIRE(k.distributive == o.distributive(a));
    }
  }
}

TEST_CASE("coideals", "[lattice]") {
  auto const n5 = catalog::N5();
  auto const up = principal_coideal(n5, at(n5, "a"));
  CHECK(up.lattice.size() == 3);
  CHECK(up.embedding
        == std::vector<std::size_t>{at(n5, "a"), at(n5, "b"), at(n5, "1")});
}

TEST_CASE("0-distributivity", "[lattice]") {
  CHECK(is_zero_distributive(catalog::N5()));
  auto const m3 = catalog::M3();
  auto const v  = zero_distributivity_violation(m3);
  REQUIRE(v);
  CHECK(m3.meet(v->x, v->z) == m3.bottom());
  CHECK(m3.meet(v->y, v->z) == m3.bottom());
  CHECK(m3.meet(m3.join(v->x, v->y), v->z) != m3.bottom());
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(is_zero_distributive(catalog::chain(n)));
  }
}

TEST_CASE("congruences and quotients", "[lattice]") {
  CHECK(enumerate_lattice_congruences(catalog::chain(2)).size() == 2);
  CHECK(enumerate_lattice_congruences(catalog::chain(3)).size() == 4);
  CHECK(enumerate_lattice_congruences(catalog::M3()).size() == 2);
  CHECK(enumerate_lattice_congruences(catalog::N5()).size() == 5);
  CHECK_THROWS_AS(enumerate_lattice_congruences(catalog::boolean(4)),
                  std::length_error);

  auto const c3 = catalog::chain(3);
  auto const d  = quotient(c3, Partition::discrete(3));
  CHECK(d.lattice.size() == 3);
  CHECK(quotient(c3, Partition::full(3)).lattice.size() == 1);
  auto const top = quotient(c3, Partition::from_classes(3, {{1, 2}}));
  CHECK(top.lattice.size() == 2);
  CHECK(top.surjection == std::vector<std::size_t>{0, 1, 1});
  CHECK(top.lattice.leq(0, 1));
  CHECK_THROWS_AS(quotient(c3, Partition::from_classes(3, {{0, 2}})),
                  std::invalid_argument);
}

TEST_CASE("the two lemmas", "[lattice]") {
  for (auto const& L : small_catalog()) {
    CHECK_FALSE(check_lower_modular_lift(L));
    CHECK_FALSE(check_upper_modular_preservation(L));
  }
}

TEST_CASE("duality swaps lower and upper modularity", "[lattice][property]") {
  for (auto const& L : small_catalog()) {
    auto const D = dual(L);
    for (std::size_t x = 0; x < L.size(); ++x) {
      REQUIRE(classify_element(L, x).upper_modular
              == classify_element(D, x).lower_modular);
    }
  }
}
