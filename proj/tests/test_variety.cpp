#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "vll/variety.hpp"

using namespace vll;

namespace {
  bool holds_text(VarietyId const& v, char const* id) {
    return holds(v, parse_identity(id)).holds;
  }
}  // namespace

TEST_CASE("criteria on named identities", "[variety]") {
  CHECK(holds_text(VarietyId::P(), "ab = aab"));
  CHECK_FALSE(holds_text(VarietyId::P(), "ab = ba"));
  CHECK(holds_text(VarietyId::right_zero(), "ab = cb"));
  CHECK(holds_text(VarietyId::C(2), "aabb = bbaa"));
  CHECK_FALSE(holds_text(VarietyId::C(2), "ab = aab"));
  CHECK(holds_text(VarietyId::zero_reduced({parse_word("aa")}),
                   "abab = baba"));
  CHECK(holds_text(VarietyId::trivial(), "ab = c"));
  CHECK(holds_text(VarietyId::P(), "aabb = bbaa"));
  CHECK(holds_text(VarietyId::P_dual(), "ba = baa"));
  CHECK_FALSE(holds_text(VarietyId::P_dual(), "ab = aab"));
  CHECK(holds_text(VarietyId::left_zero(), "ab = ac"));
  CHECK(holds_text(VarietyId::semilattices(), "ab = bba"));
  CHECK_FALSE(holds_text(VarietyId::commutative(), "ab = bba"));
}

TEST_CASE("clauses and witnesses", "[variety]") {
  auto r = holds(VarietyId::P(), parse_identity("ab = ba"));
  CHECK(r.clause == Clause::edge_letter_mismatch);
  auto c = holds(VarietyId::C(2), parse_identity("ab = aab"));
  CHECK(c.clause == Clause::multiplicity_mismatch);
  REQUIRE(c.witness);
  CHECK(*c.witness == Letter(1));
}

TEST_CASE("C_m degenerates at m = 0, 1", "[variety]") {
  CHECK(VarietyId::C(0) == VarietyId::trivial());
  CHECK(VarietyId::C(1) == VarietyId::semilattices());
  CHECK(parse_variety("C3") == VarietyId::C(3));
  CHECK(parse_variety("C(3)") == VarietyId::C(3));
  CHECK_THROWS_AS(parse_variety("D2"), std::invalid_argument);
}

TEST_CASE("zero identities", "[variety]") {
  auto zr = VarietyId::zero_reduced({parse_word("aa")});
  CHECK(holds_text(zr, "abb = 0"));
  CHECK_FALSE(holds_text(zr, "ab = 0"));
  CHECK_FALSE(holds_text(zr, "ab = ba"));
  CHECK(holds_text(zr, "ab = ab"));
  CHECK_THROWS_AS(holds(VarietyId::P(), parse_identity("aa = 0")),
                  UnsupportedQuery);
}

TEST_CASE("joins of varieties", "[variety]") {
  std::vector<VarietyId> const j = {VarietyId::C(2),
                                    VarietyId::right_zero()};
  CHECK_FALSE(holds_in_join(j, parse_identity("aab = ab")));
  CHECK(holds_in_join(j, parse_identity("aabbc = bbaac")));
  std::vector<VarietyId> const t = {VarietyId::trivial()};
  CHECK(holds_in_join(t, parse_identity("ab = c")));
}

TEST_CASE("join scan", "[variety]") {
  CHECK(join_contains_P_scan(4, 3).ok);
  CHECK(join_contains_P_scan(1, 1).ok);
  CHECK(join_contains_P_scan(5, 2).ok);
}

TEST_CASE("P and its dual agree with a three-element model",
          "[variety][oracle]") {
  auto const words = all_words(4, 3);
  auto const S     = FiniteSemigroup::validate(oracle::p3());
  auto const D     = FiniteSemigroup::validate(oracle::p3_dual());
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i; j < words.size(); ++j) {
      auto const& u = words[i];
      auto const& v = words[j];
      auto const  id = Identity::equation(u, v);
      INFO(to_string(id));
      REQUIRE(holds(VarietyId::P(), id).holds
              == oracle::satisfies(oracle::p3(), u, v, 3));
      REQUIRE(holds(VarietyId::P_dual(), id).holds
              == oracle::satisfies(oracle::p3_dual(), u, v, 3));
    }
  }
}

TEST_CASE("C_m agrees with the cyclic monoid", "[variety][oracle]") {
  auto const words = all_words(4, 2);
  for (std::size_t m : {2, 3}) {
    auto const t = builtin::cyclic_monoid(m).table();
    for (auto const& u : words) {
      for (auto const& v : words) {
        REQUIRE(holds(VarietyId::C(m), Identity::equation(u, v)).holds
                == oracle::satisfies(t, u, v, 2));
      }
    }
  }
}
