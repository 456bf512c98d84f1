#include <catch_amalgamated.hpp>

#include <json.hpp>

#include "vll/replay.hpp"

using namespace vll;

TEST_CASE("the aaabb = bbaaa instance", "[replay]") {
  auto const r = proof_replay(parse_word("aaabb"), parse_word("bbaaa"));
  CHECK(r.lambda == std::vector<std::size_t>{3, 2, 1, 1});
  CHECK(r.x == Word({3}));
  CHECK(r.y == Word({4}));
  CHECK(r.carrier_size == 420);
  CHECK(r.group_order == 2);
  CHECK(r.beta_is_congruence);
  CHECK(r.gamma_is_congruence);
  CHECK(r.gamma_prime_is_congruence);
  CHECK(r.alpha_is_congruence);
  CHECK(r.xuy_gamma_xyu);
  CHECK(r.xyu_beta_xyv);
  CHECK(r.xyv_gamma_xvy);
  CHECK(r.xuy_xvy_in_gamma_join_beta);
  CHECK(r.structure_holds());

  // frozen from an independent computation: alpha has 416 classes,
  // (gamma v beta) ^ alpha = alpha and (gamma ^ alpha) v beta = beta
  for (auto const* f : {&r.with_gamma, &r.with_gamma_prime}) {
    CHECK(f->beta_le_alpha);
    CHECK(f->inclusion);
    CHECK_FALSE(f->equal);
    CHECK(f->lhs_blocks == 416);
    CHECK(f->rhs_blocks == 418);
    CHECK_FALSE(f->conclusion_in_alpha);
    CHECK(f->inference_valid);
  }
}

TEST_CASE("preconditions", "[replay]") {
  CHECK_THROWS_AS(proof_replay(parse_word("aaabb"), parse_word("aaabb")),
                  ReplayPrecondition);
  CHECK_THROWS_AS(proof_replay(parse_word("aabb"), parse_word("bbaa")),
                  ReplayPrecondition);
  CHECK_THROWS_AS(proof_replay(parse_word("aaab"), parse_word("baaa")),
                  ReplayPrecondition);
  CHECK_THROWS_AS(proof_replay(parse_word("aab"), parse_word("abb")),
                  ReplayPrecondition);
  CHECK_THROWS_AS(proof_replay(parse_word("bbbcc"), parse_word("ccbbb")),
                  ReplayPrecondition);
  try {
    proof_replay(parse_word("aabb"), parse_word("bbaa"));
  } catch (ReplayPrecondition const& e) {
    CHECK(std::string(e.what()).find("multiply") != std::string::npos);
  }
}

TEST_CASE("other instances", "[replay]") {
  for (auto [u, v] : {std::pair{"ababa", "aaabb"},
                      std::pair{"aaaabbb", "bbbaaaa"},
                      std::pair{"aaa", "aaa"}}) {
    INFO(u << " = " << v);
    if (std::string(u) == v) {
      CHECK_THROWS_AS(proof_replay(parse_word(u), parse_word(v)),
                      ReplayPrecondition);
      continue;
    }
    auto const r = proof_replay(parse_word(u), parse_word(v));
    CHECK(r.structure_holds());
    CHECK(r.with_gamma.inference_valid);
  }
}

TEST_CASE("JSON report", "[replay]") {
  auto const r = proof_replay(parse_word("aaabb"), parse_word("bbaaa"));
  auto const j = nlohmann::json::parse(to_json(r));
  CHECK(j["carrier_size"] == 420);
  CHECK(j["lambda"] == nlohmann::json::array({3, 2, 1, 1}));
  CHECK(j["conclusions"]["structure_holds"] == true);
  CHECK(j["modular_instance"]["gamma"]["inclusion"] == true);
  CHECK(to_json(r) == to_json(proof_replay(parse_word("aaabb"),
                                           parse_word("bbaaa"))));
}
