#include <catch_amalgamated.hpp>

#include "vll/gset.hpp"

using namespace vll;

namespace {
  Word w(char const* text) {
    return parse_word(text);
  }
}  // namespace

TEST_CASE("partitions lambda", "[gset]") {
  CHECK(parse_lambda("3,2,1,1").parts()
        == std::vector<std::size_t>{3, 2, 1, 1});
  CHECK(to_string(parse_lambda("3,2,1,1")) == "3,2,1,1");
  CHECK_THROWS_AS(parse_lambda("3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lambda("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lambda("2,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lambda("2,x"), std::invalid_argument);
  CHECK(multinomial(parse_lambda("3,2,1,1")) == 420);
  CHECK(multinomial(parse_lambda("1,1")) == 2);
  CHECK(multinomial(PartitionLambda(std::vector<std::size_t>(40, 1)))
        == UINT64_MAX);
}

TEST_CASE("carriers and groups", "[gset]") {
  auto const g21 = build_wlambda(parse_lambda("2,1"));
  CHECK(g21.carrier() == std::vector<Word>{w("aab"), w("aba"), w("baa")});
  CHECK(g21.group().size() == 1);
  auto const g11 = build_wlambda(parse_lambda("1,1"));
  CHECK(g11.carrier() == std::vector<Word>{w("ab"), w("ba")});
  CHECK(g11.group().size() == 2);
  auto const g = build_wlambda(parse_lambda("3,2,1,1"));
  CHECK(g.size() == 420);
  CHECK(g.group().size() == 2);
  CHECK(g.index(w("cdaaabb")) < g.size());
  CHECK_FALSE(g.find(w("aaabb")));
  CHECK_THROWS_AS(g.index(w("ab")), std::invalid_argument);
  CHECK_THROWS_AS(build_wlambda(parse_lambda("3,2,1,1"), 100),
                  std::length_error);
  // the non-identity element swaps x3 and x4
  auto const& swap = g.actions()[1];
  CHECK(g.carrier()[swap[g.index(w("cdaaabb"))]] == w("dcaaabb"));
}

TEST_CASE("generated congruences", "[gset]") {
  auto const g11 = build_wlambda(parse_lambda("1,1"));
  std::pair<Word, Word> const one[] = {{w("ab"), w("ba")}};
  CHECK(congruence_from_pairs(g11, one).partition().number_of_blocks() == 1);
  auto const g21 = build_wlambda(parse_lambda("2,1"));
  CHECK(congruence_from_pairs(g21, {}) == GCongruence::discrete(g21));
  auto const g211 = build_wlambda(parse_lambda("2,1,1"));
  std::pair<Word, Word> const gen[] = {{w("aabc"), w("abac")}};
  auto const c = congruence_from_pairs(g211, gen);
  CHECK(c.related(g211.index(w("aacb")), g211.index(w("acab"))));
  CHECK(c.partition().number_of_blocks() == g211.size() - 2);
  CHECK(is_congruence(g211, c.partition()));
}

TEST_CASE("invariance", "[gset]") {
  auto const g   = build_wlambda(parse_lambda("3,2,1,1"));
  auto const bad = Partition::from_classes(
      g.size(), {{g.index(w("cdaaabb")), g.index(w("dcbbaaa"))}});
  CHECK_FALSE(is_congruence(g, bad));
  CHECK_THROWS_AS(GCongruence::from_partition(g, bad), std::invalid_argument);
  CHECK(is_congruence(g, Partition::full(g.size())));
  CHECK_FALSE(is_congruence(g, Partition::full(3)));
}

TEST_CASE("congruence counts", "[gset]") {
  // frozen from an independent exhaustive count
  std::pair<char const*, std::size_t> const expected[] = {
      {"1,1", 2},  {"2,1", 5},  {"1,1,1", 6}, {"3,1", 15},
      {"2,2", 31}, {"4,1", 52}, {"2,1,1", 6841}};
  for (auto const& [text, count] : expected) {
    INFO(text);
    auto const g = build_wlambda(parse_lambda(text));
    CHECK(enumerate_congruences(g).size() == count);
  }
  auto const g = build_wlambda(parse_lambda("2,2"));
  CHECK(enumerate_congruences_by_filter(g)
        == enumerate_congruences_by_closure(g));
  CHECK_THROWS_AS(enumerate_congruences(build_wlambda(parse_lambda("3,1,1"))),
                  std::length_error);
}

TEST_CASE("congruences on different G-sets do not mix", "[gset]") {
  auto const a = build_wlambda(parse_lambda("1,1"));
  auto const b = build_wlambda(parse_lambda("2,1"));
  CHECK_THROWS_AS(join(GCongruence::full(a), GCongruence::full(b)),
                  std::invalid_argument);
}

TEST_CASE("modular law instances", "[gset]") {
  auto const g    = build_wlambda(parse_lambda("2,2"));
  auto const con  = enumerate_congruences(g);
  auto const full = GCongruence::full(g);
  CHECK(check_modular_instance(full, full, full).equal);
  auto const disc = GCongruence::discrete(g);
  for (auto const& x : con) {
    for (auto const& z : con) {
      REQUIRE(check_modular_instance(x, disc, z).inclusion);
      for (auto const& y : con) {
        if (leq(y, z)) {
          REQUIRE(check_modular_instance(x, y, z).inclusion);
        }
      }
    }
  }
}
