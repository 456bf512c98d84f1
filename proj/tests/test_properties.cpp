// Invariants checked exhaustively over small bounded domains.

#include <catch_amalgamated.hpp>

#include <map>

#include "oracles.hpp"
#include "vll/gset.hpp"
#include "vll/semigroup.hpp"
#include "vll/variety.hpp"

using namespace vll;

namespace {
  std::vector<VarietyId> varieties() {
    return {VarietyId::trivial(),     VarietyId::semilattices(),
            VarietyId::left_zero(),   VarietyId::right_zero(),
            VarietyId::commutative(), VarietyId::C(2),
            VarietyId::C(3),          VarietyId::P(),
            VarietyId::P_dual(),      VarietyId::zero_reduced({Word({1, 1})})};
  }

  // Every substitution of x1, x2 by words of length <= 2 over x1, x2.
  std::vector<Substitution> small_substitutions() {
    auto const                images = all_words(2, 2);
    std::vector<Substitution> out;
    for (auto const& a : images) {
      for (auto const& b : images) {
        Substitution s;
        s.set(Letter(1), a);
        s.set(Letter(2), b);
        out.push_back(std::move(s));
      }
    }
    return out;
  }

  // Values of each word under all assignments of x1..xk.
  std::map<Word, std::vector<std::size_t>> signatures(
      FiniteSemigroup const&   S,
      std::vector<Word> const& words,
      std::uint32_t            k) {
    std::map<Word, std::vector<std::size_t>> out;
    std::size_t                              count = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
      count *= S.order();
    }
    for (auto const& w : words) {
      auto& sig = out[w];
      for (std::size_t n = 0; n < count; ++n) {
        Assignment  a;
        std::size_t rest = n;
        for (std::uint32_t i = 0; i < k; ++i) {
          a.emplace(Letter(i + 1), rest % S.order());
          rest /= S.order();
        }
        sig.push_back(S.evaluate(w, a));
      }
    }
    return out;
  }
}  // namespace

TEST_CASE("permutations preserve length and letter counts",
          "[property][word]") {
  auto const pi = LetterPermutation(
      {{Letter(1), Letter(3)}, {Letter(2), Letter(1)}, {Letter(3), Letter(2)}});
  for (auto const& w : all_words(5, 3)) {
    auto const image = apply_permutation(w, pi);
    REQUIRE(image.length() == w.length());
    REQUIRE(partition_of(image).sorted == partition_of(w).sorted);
  }
}

TEST_CASE("substitutions compose", "[property][word]") {
  auto const subs  = small_substitutions();
  auto const words = all_words(3, 2);
  for (auto const& s : subs) {
    for (auto const& t : subs) {
      auto const ts = s.then(t);
      for (auto const& w : words) {
        REQUIRE(apply_substitution(apply_substitution(w, s), t)
                == apply_substitution(w, ts));
      }
    }
  }
}

TEST_CASE("balanced means anagram", "[property][word]") {
  auto const words = all_words(4, 2);
  for (auto const& u : words) {
    for (auto const& v : words) {
      auto a = std::vector<Letter>(u.letters().begin(), u.letters().end());
      auto b = std::vector<Letter>(v.letters().begin(), v.letters().end());
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      REQUIRE(is_balanced(u, v) == (a == b));
      REQUIRE(is_balanced(u, v)
              == (partition_of(u).per_letter == partition_of(v).per_letter));
    }
  }
}

TEST_CASE("instances persist in longer words", "[property][word]") {
  auto const words    = all_words(5, 2);
  auto const patterns = all_words(3, 2);
  for (auto const& p : patterns) {
    for (auto const& w : words) {
      if (!contains_instance(w, p)) {
        continue;
      }
      for (std::uint32_t x = 1; x <= 2; ++x) {
        Word const a({x});
        REQUIRE(contains_instance(a + w, p));
        REQUIRE(contains_instance(w + a, p));
      }
    }
  }
}

TEST_CASE("each criterion is an equivalence", "[property][variety]") {
  auto const  words = all_words(6, 2);
  std::size_t n     = words.size();
  for (auto const& v : varieties()) {
    INFO(to_string(v));
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        rel[i][j] = holds(v, Identity::equation(words[i], words[j])).holds;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      REQUIRE(rel[i][i]);
      for (std::size_t j = 0; j < n; ++j) {
        REQUIRE(rel[i][j] == rel[j][i]);
        if (!rel[i][j]) {
          continue;
        }
        for (std::size_t k = 0; k < n; ++k) {
          if (rel[j][k]) {
            REQUIRE(rel[i][k]);
          }
        }
      }
    }
  }
}

TEST_CASE("criteria are fully invariant", "[property][variety]") {
  auto const words = all_words(4, 2);
  auto const subs  = small_substitutions();
  Word const a({1}), b({2});
  for (auto const& v : varieties()) {
    INFO(to_string(v));
    for (auto const& u : words) {
      for (auto const& w : words) {
        if (!holds(v, Identity::equation(u, w)).holds) {
          continue;
        }
        for (auto const& s : subs) {
          REQUIRE(holds(v, Identity::equation(apply_substitution(u, s),
                                              apply_substitution(w, s)))
                      .holds);
        }
        for (auto const& l : {a, b}) {
          for (auto const& r : {a, b}) {
            REQUIRE(holds(v, Identity::equation(l + u + r, l + w + r)).holds);
          }
        }
      }
    }
  }
}

TEST_CASE("criteria are sound for their models", "[property][variety]") {
  auto const words = all_words(5, 3);
  std::vector<std::pair<VarietyId, FiniteSemigroup>> const pairs = {
      {VarietyId::left_zero(), builtin::left_zero2()},
      {VarietyId::right_zero(), builtin::right_zero2()},
      {VarietyId::semilattices(), builtin::semilattice2()},
      {VarietyId::commutative(), builtin::cyclic_group(2)},
      {VarietyId::commutative(), builtin::nil2()},
      {VarietyId::C(2), builtin::cyclic_monoid(2)},
      {VarietyId::C(3), builtin::cyclic_monoid(3)},
      {VarietyId::P(), FiniteSemigroup::validate(oracle::p3(), "P3")},
      {VarietyId::P_dual(),
       FiniteSemigroup::validate(oracle::p3_dual(), "P3dual")}};
  for (auto const& [v, S] : pairs) {
    INFO(to_string(v) << " in " << S.name());
    auto const sig = signatures(S, words, 3);
    for (auto const& u : words) {
      for (auto const& w : words) {
        if (holds(v, Identity::equation(u, w)).holds) {
          REQUIRE(sig.at(u) == sig.at(w));
        }
      }
    }
  }
}

TEST_CASE("defining identities pass their own criteria",
          "[property][variety]") {
  std::vector<std::pair<VarietyId, std::vector<char const*>>> const defs = {
      {VarietyId::P(), {"ab = aab", "aabb = bbaa"}},
      {VarietyId::P_dual(), {"ba = baa", "aabb = bbaa"}},
      {VarietyId::C(2), {"aa = aaa", "ab = ba"}},
      {VarietyId::C(3), {"aaa = aaaa", "ab = ba"}},
      {VarietyId::semilattices(), {"a = aa", "ab = ba"}},
      {VarietyId::right_zero(), {"ab = b"}},
      {VarietyId::left_zero(), {"ab = a"}},
      {VarietyId::commutative(), {"ab = ba"}}};
  for (auto const& [v, ids] : defs) {
    for (auto text : ids) {
      INFO(to_string(v) << ": " << text);
      CHECK(holds(v, parse_identity(text)).holds);
    }
  }
}

TEST_CASE("products satisfy exactly the common identities",
          "[property][semigroup]") {
  std::vector<FiniteSemigroup> const small = {
      builtin::left_zero2(), builtin::right_zero2(), builtin::semilattice2(),
      builtin::cyclic_group(2), builtin::nil2()};
  auto const words = all_words(3, 2);
  for (auto const& S : small) {
    for (auto const& T : small) {
      auto const P = direct_product(S, T);
      for (auto const& u : words) {
        for (auto const& w : words) {
          auto const id = Identity::equation(u, w);
          REQUIRE(satisfies(P, id).satisfied
                  == (satisfies(S, id).satisfied
                      && satisfies(T, id).satisfied));
        }
      }
    }
  }
}

TEST_CASE("carrier sizes are multinomials", "[property][gset]") {
  for (auto text : {"1,1", "2,1", "1,1,1", "2,2", "3,2", "2,1,1", "3,2,1,1",
                    "2,2,2", "4,1,1"}) {
    auto const lambda = parse_lambda(text);
    auto const G      = build_wlambda(lambda);
    REQUIRE(G.size() == multinomial(lambda));
    for (auto const& w : G.carrier()) {
      REQUIRE(partition_of(w).sorted == lambda.parts());
    }
  }
}

TEST_CASE("generated congruences are least", "[property][gset]") {
  auto const G   = build_wlambda(parse_lambda("2,2"));
  auto const con = enumerate_congruences(G);
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      std::pair<Word, Word> const gen[] = {{G.carrier()[i], G.carrier()[j]}};
      auto const                  c     = congruence_from_pairs(G, gen);
      REQUIRE(is_congruence(G, c.partition()));
      for (auto const& d : con) {
        if (d.related(i, j)) {
          REQUIRE(leq(c, d));
        }
      }
    }
  }
}

TEST_CASE("congruences form a lattice", "[property][gset]") {
  for (auto text : {"1,1", "2,1", "1,1,1", "3,1", "2,2", "4,1"}) {
    auto const G   = build_wlambda(parse_lambda(text));
    auto const con = enumerate_congruences(G);
    for (auto const& a : con) {
      REQUIRE(join(a, a) == a);
      for (auto const& b : con) {
        auto const j = join(a, b);
        auto const m = meet(a, b);
        REQUIRE(is_congruence(G, j.partition()));
        REQUIRE(is_congruence(G, m.partition()));
        REQUIRE(j == join(b, a));
        REQUIRE(join(a, meet(a, b)) == a);
        REQUIRE(meet(a, join(a, b)) == a);
      }
    }
  }
}

TEST_CASE("the modular inequality", "[property][gset]") {
  auto const G   = build_wlambda(parse_lambda("2,2"));
  auto const con = enumerate_congruences(G);
  for (auto const& g : con) {
    for (auto const& b : con) {
      for (auto const& a : con) {
        if (leq(b, a)) {
          REQUIRE(check_modular_instance(g, b, a).inclusion);
        }
      }
    }
  }
}
