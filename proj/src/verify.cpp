#include "vll/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "vll/deduction.hpp"
#include "vll/gset.hpp"
#include "vll/lattice.hpp"
#include "vll/replay.hpp"
#include "vll/semigroup.hpp"
#include "vll/variety.hpp"

namespace vll {

  Profile profile_named(std::string_view name) {
    if (name == "quick") {
      return Profile::quick();
    } else if (name == "full") {
      return Profile::full();
    }
    throw std::invalid_argument("unknown profile \"" + std::string(name)
                                + "\", expected quick or full");
  }

  Profile resolve_profile(std::string_view requested) {
    if (char const* env = std::getenv("VLL_BUDGET"); env && *env) {
      return profile_named(env);
    }
    return profile_named(requested);
  }

  std::string to_string(Status s) {
    switch (s) {
      case Status::pass:
        return "pass";
      case Status::fail:
        return "fail";
      case Status::unknown:
        return "unknown";
    }
    return "?";
  }

  namespace {
    using std::chrono::milliseconds;

    // Collects failures; the first few become the witness.
    class Failures {
     public:
      void add(std::string what) {
        if (_count++ < 3) {
          _text += (_text.empty() ? "" : "; ") + what;
        }
      }
      bool empty() const {
        return _count == 0;
      }
      void finish(CheckOutcome& out, std::string summary) const {
        out.status  = empty() ? Status::pass : Status::fail;
        out.summary = std::move(summary);
        if (!empty()) {
          out.witness = _text;
          if (_count > 3) {
            out.witness += "; and " + std::to_string(_count - 3) + " more";
          }
        }
      }

     private:
      std::size_t _count = 0;
      std::string _text;
    };

    std::string yes_no(bool b) {
      return b ? "true" : "false";
    }

    ////////////////////////////////////////////////////////////////////
    // AC1: criteria against finite models
    ////////////////////////////////////////////////////////////////////

    // Value of every word under every assignment of x1..xk, assignments
    // enumerated as an odometer.
    class ValueTable {
     public:
      ValueTable(FiniteSemigroup const& S,
                 std::vector<Word> const& words,
                 std::uint32_t            k)
          : _S(S) {
        std::size_t count = 1;
        for (std::uint32_t i = 0; i < k; ++i) {
          count *= S.order();
        }
        std::vector<std::size_t> digits(k, 0);
        std::vector<Assignment>  assignments;
        for (std::size_t n = 0; n < count; ++n) {
          Assignment a;
          for (std::uint32_t i = 0; i < k; ++i) {
            a.emplace(Letter(i + 1), digits[i]);
          }
          assignments.push_back(std::move(a));
          for (std::size_t i = k; i > 0; --i) {
            if (++digits[i - 1] < S.order()) {
              break;
            }
            digits[i - 1] = 0;
          }
        }
        for (auto const& w : words) {
          std::vector<std::size_t> values;
          values.reserve(count);
          for (auto const& a : assignments) {
            values.push_back(S.evaluate(w, a));
          }
          _values.emplace(w, std::move(values));
        }
      }

      bool satisfied(Word const& u, Word const& v) const {
        return _values.at(u) == _values.at(v);
      }

      std::string const& name() const {
        return _S.name();
      }

     private:
      FiniteSemigroup const&                              _S;
      std::map<Word, std::vector<std::size_t>>            _values;
    };

    void ac1(Profile const& p, CheckOutcome& out) {
      auto const words = all_words(p.word_length, p.letters);
      auto const L     = p.word_length;
      Failures   f;

      auto const rz2 = builtin::right_zero2();
      auto const lz2 = builtin::left_zero2();
      auto const sl2 = builtin::semilattice2();
      auto const z2  = builtin::cyclic_group(2);
      auto const nil = builtin::nil2();
      // counts below L + 1 are told apart exactly
      auto const cmL = builtin::cyclic_monoid(L + 1);
      auto const cm2 = builtin::cyclic_monoid(2);

      std::vector<ValueTable> tables;
      for (auto const* S : {&rz2, &lz2, &sl2, &z2, &nil, &cmL, &cm2}) {
        tables.emplace_back(*S, words, p.letters);
      }
      auto const& [t_rz, t_lz, t_sl, t_z2, t_nil, t_cmL, t_cm2]
          = std::tie(tables[0], tables[1], tables[2], tables[3], tables[4],
                     tables[5], tables[6]);

      struct Exact {
        VarietyId         v;
        ValueTable const& model;
      };
      Exact const exact[] = {{VarietyId::right_zero(), t_rz},
                             {VarietyId::left_zero(), t_lz},
                             {VarietyId::semilattices(), t_sl},
                             {VarietyId::commutative(), t_cmL}};
      ValueTable const* com_sound[] = {&t_sl, &t_z2, &t_nil};

      std::size_t pairs = 0, c2_exact = 0;
      for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
          ++pairs;
          auto const& u  = words[i];
          auto const& v  = words[j];
          auto const  id = Identity::equation(u, v);
          for (auto const& e : exact) {
            bool crit = holds(e.v, id).holds;
            if (crit != e.model.satisfied(u, v)) {
              f.add(to_string(e.v) + " vs " + e.model.name() + " on "
                    + to_string(id) + ": criterion " + yes_no(crit));
            }
          }
          bool com = holds(VarietyId::commutative(), id).holds;
          for (auto const* m : com_sound) {
            if (com && !m->satisfied(u, v)) {
              f.add("COM holds but " + m->name() + " refutes "
                    + to_string(id));
            }
          }
          bool c2    = holds(VarietyId::C(2), id).holds;
          bool model = t_cm2.satisfied(u, v);
          if (c2 && !model) {
            f.add("C2 holds but " + t_cm2.name() + " refutes "
                  + to_string(id));
          }
          c2_exact += c2 == model;
        }
      }
      f.finish(out,
               std::to_string(pairs) + " identities of length <= "
                   + std::to_string(L) + " over "
                   + std::to_string(p.letters)
                   + " letters; RZ, LZ, SL exact against RZ2, LZ2, SL2; COM "
                     "sound for SL2, Z2, NilN2 and exact against "
                   + cmL.name() + "; C2 sound against " + cm2.name()
                   + " (exact on " + std::to_string(c2_exact) + ")");
    }

    ////////////////////////////////////////////////////////////////////
    // AC2: C2 v RZ contains P
    ////////////////////////////////////////////////////////////////////

    void ac2(Profile const& p, CheckOutcome& out) {
      std::vector<std::pair<std::size_t, std::uint32_t>> scans
          = {{4, 3}, {5, 2}};
      if (p.name == "full") {
        scans.emplace_back(5, 3);
        scans.emplace_back(7, 2);
      }
      Failures    f;
      std::size_t total = 0;
      std::string bounds;
      for (auto [len, k] : scans) {
        auto r = join_contains_P_scan(len, k);
        total += r.identities_checked;
        bounds += (bounds.empty() ? "" : ", ") + std::string("(")
                  + std::to_string(len) + "," + std::to_string(k) + ")";
        if (!r.ok) {
          f.add("scan (" + std::to_string(len) + "," + std::to_string(k)
                + "): " + to_string(*r.counterexample)
                + " holds in C2 and RZ but not in P");
        }
      }
      f.finish(out,
               "scans " + bounds + ": " + std::to_string(total)
                   + " identities, every one holding in C2 and RZ holds in P");
    }

    ////////////////////////////////////////////////////////////////////
    // AC3: xuy = yux
    ////////////////////////////////////////////////////////////////////

    std::vector<Word> anagrams(std::vector<std::size_t> const& counts) {
      std::vector<Letter> letters;
      for (std::size_t i = 0; i < counts.size(); ++i) {
        letters.insert(letters.end(), counts[i], Letter(i + 1));
      }
      std::vector<Word> out;
      do {
        out.emplace_back(letters);
      } while (std::next_permutation(letters.begin(), letters.end()));
      return out;
    }

    void ac3(Profile const&, CheckOutcome& out) {
      std::vector<Word> samples = anagrams({3, 2});
      auto const        big     = anagrams({4, 3, 2});
      samples.insert(samples.end(), big.begin(), big.end());
      samples.push_back(parse_word("aaaabbccc"));
      samples.push_back(parse_word("aa"));

      std::pair<VarietyId, bool> const expected[]
          = {{VarietyId::left_zero(), false},
             {VarietyId::right_zero(), false},
             {VarietyId::P(), false},
             {VarietyId::P_dual(), false},
             {VarietyId::commutative(), true},
             {VarietyId::semilattices(), true}};
      Failures f;
      for (auto const& u : samples) {
        auto const m = static_cast<std::uint32_t>(content(u).size());
        Word const x({m + 1}), y({m + 2});
        auto const id = Identity::equation(x + u + y, y + u + x);
        for (auto const& [v, want] : expected) {
          auto r = holds(v, id);
          if (r.holds != want) {
            f.add(to_string(v) + " on " + to_string(id) + ": got "
                  + yes_no(r.holds) + " (" + to_string(r.clause) + ")");
          }
        }
      }
      f.finish(out,
               std::to_string(samples.size())
                   + " words u: xuy = yux fails in LZ, RZ, P, Prev and holds "
                     "in COM, SL");
    }

    ////////////////////////////////////////////////////////////////////
    // AC4: the G-set construction for aaabb = bbaaa
    ////////////////////////////////////////////////////////////////////

    void ac4(Profile const&, CheckOutcome& out) {
      auto const u = parse_word("aaabb"), v = parse_word("bbaaa");
      auto const r = proof_replay(u, v);
      Failures   f;
      auto       expect = [&](bool ok, std::string const& what) {
        if (!ok) {
          f.add(what);
        }
      };
      std::vector<std::size_t> const lambda = {3, 2, 1, 1};
      expect(r.lambda == lambda, "lambda differs from (3,2,1,1)");
      expect(r.carrier_size == 420,
             "|W_lambda| = " + std::to_string(r.carrier_size));
      expect(r.group_order == 2,
             "|S_lambda| = " + std::to_string(r.group_order));
      expect(r.beta_is_congruence, "beta is not a congruence");
      expect(r.gamma_is_congruence, "gamma is not a congruence");
      expect(r.gamma_prime_is_congruence, "gamma' is not a congruence");
      expect(r.alpha_is_congruence, "alpha is not a congruence");
      expect(r.xuy_gamma_xyu, "xuy gamma xyu fails");
      expect(r.xyu_beta_xyv, "xyu beta xyv fails");
      expect(r.xyv_gamma_xvy, "xyv gamma xvy fails");
      expect(r.xuy_xvy_in_gamma_join_beta, "(xuy, xvy) not in gamma v beta");
      expect(r.with_gamma.beta_le_alpha, "beta is not below alpha");
      expect(r.with_gamma.inclusion,
             "(gamma ^ alpha) v beta is not below (gamma v beta) ^ alpha");
      expect(r.with_gamma_prime.inclusion,
             "(gamma' ^ alpha) v beta is not below (gamma' v beta) ^ alpha");
      expect(r.structure_holds(), "structure check fails");
      f.finish(out,
               "lambda=(3,2,1,1), |W|=" + std::to_string(r.carrier_size)
                   + ", |S|=" + std::to_string(r.group_order)
                   + ", beta/gamma/gamma' congruences, memberships and the "
                     "modular inclusion all hold; sides equal: "
                   + yes_no(r.with_gamma.equal));
    }

    ////////////////////////////////////////////////////////////////////
    // AC5: Sapir's systems and the chain xwx = ... = xw^(2n)x
    ////////////////////////////////////////////////////////////////////

    std::pair<Word, Word> unordered(Identity const& id) {
      auto a = id.lhs(), b = id.rhs();
      if (b < a) {
        std::swap(a, b);
      }
      return {a, b};
    }

    void ac5(Profile const&, CheckOutcome& out) {
      Failures   f;
      auto const s = sapir_system(2, {parse_word("aa")});
      std::set<std::pair<Word, Word>> got, want;
      for (auto const& id : s.generated.equations) {
        got.insert(unordered(id));
      }
      for (auto text : {"bcd = bcccd",
                        "bbbbbbcccccc = ccccccbbbbbb",
                        "bb = bbbb",
                        "baaaac = baac"}) {
        want.insert(unordered(parse_identity(text)));
      }
      if (got != want || !s.generated.zero_patterns.empty()
          || s.generated.equations.size() != 4) {
        std::string listed;
        for (auto const& id : s.generated.equations) {
          listed += (listed.empty() ? "" : ", ") + to_string(id);
        }
        f.add("sapir_system(2, {aa}) = {" + listed + "}");
      }
      auto const chain = replay_case2_chain(2, parse_word("a"), 3);
      if (!chain.proved()) {
        f.add("replay_case2_chain(2, a, 3) returned "
              + to_string(chain.outcome) + " after "
              + std::to_string(chain.states) + " states");
      } else {
        auto [sigma, goal] = case2_chain_problem(2, parse_word("a"), 3);
        if (!replay_trace(sigma, goal, chain.trace)) {
          f.add("the case-2 chain trace does not replay");
        }
      }
      f.finish(out,
               "sapir_system(2, {aa}) emits exactly the four families with "
               "x^0 = x^6; bab = ba^6b proved in "
                   + std::to_string(chain.trace.size()) + " steps");
    }

    ////////////////////////////////////////////////////////////////////
    // AC6: deduction soundness
    ////////////////////////////////////////////////////////////////////

    IdentitySystem system_of(std::string label,
                             std::initializer_list<char const*> ids) {
      IdentitySystem s;
      s.label = std::move(label);
      for (auto text : ids) {
        s.add(parse_identity(text));
      }
      return s;
    }

    void ac6(Profile const&, CheckOutcome& out) {
      Failures   f;
      auto const sigma_p  = system_of("P", {"ab = aab", "aabb = bbaa"});
      auto const sigma_c2 = system_of("C2", {"aa = aaa", "ab = ba"});
      auto const sigma_sl = system_of("SL", {"a = aa", "ab = ba"});

      struct Goal {
        IdentitySystem sigma;
        Identity       goal;
      };
      std::vector<Goal> goals = {
          {sigma_p, parse_identity("ab = aaab")},
          {sigma_p, parse_identity("abab = aabb")},
          {sigma_c2, parse_identity("aab = aba")},
          {sigma_c2, parse_identity("aabb = abbba")},
          {sigma_sl, parse_identity("ab = aab")},
          {sigma_sl, parse_identity("abc = cba")},
      };
      for (std::size_t n = 1; n <= 3; ++n) {
        auto [sigma, goal] = case2_chain_problem(2, parse_word("a"), n);
        goals.push_back({sigma, goal});
      }
      {
        auto [sigma, goal] = case2_chain_problem(2, parse_word("ab"), 2);
        goals.push_back({sigma, goal});
      }
      std::size_t replayed = 0;
      for (auto const& g : goals) {
        auto r = derive(g.sigma, g.goal);
        if (!r.proved()) {
          f.add(to_string(g.goal) + " from " + g.sigma.label + ": "
                + to_string(r.outcome));
        } else if (!replay_trace(g.sigma, g.goal, r.trace)) {
          f.add("trace for " + to_string(g.goal) + " does not replay");
        } else {
          ++replayed;
        }
      }
      struct Scan {
        VarietyId      v;
        IdentitySystem sigma;
        std::size_t    len;
      };
      Scan const scans[] = {{VarietyId::P(), sigma_p, 5},
                            {VarietyId::C(2), sigma_c2, 5},
                            {VarietyId::semilattices(), sigma_sl, 4}};
      std::size_t checked = 0;
      for (auto const& s : scans) {
        auto r = consistency_scan(s.v, s.sigma, s.len);
        checked += r.identities_checked;
        if (!r.ok) {
          f.add("consistency_scan(" + to_string(s.v) + ", "
                + std::to_string(s.len) + "): " + to_string(*r.counterexample)
                + " is derivable but fails the criterion");
        }
      }
      f.finish(out,
               std::to_string(replayed)
                   + " proved traces replay; consistency scans for (P, 5), "
                     "(C2, 5), (SL, 4) checked "
                   + std::to_string(checked) + " derivable identities");
    }

    ////////////////////////////////////////////////////////////////////
    // AC7, AC8: lattices
    ////////////////////////////////////////////////////////////////////

    struct Named {
      std::string   name;
      FiniteLattice lattice;
    };

    std::vector<Named> catalog_base() {
      std::vector<Named> base;
      for (std::size_t n = 2; n <= 5; ++n) {
        base.push_back({"chain(" + std::to_string(n) + ")",
                        catalog::chain(n)});
      }
      for (std::size_t n = 2; n <= 3; ++n) {
        base.push_back({"boolean(" + std::to_string(n) + ")",
                        catalog::boolean(n)});
      }
      base.push_back({"M3", catalog::M3()});
      base.push_back({"N5", catalog::N5()});
      return base;
    }

    // Base lattices, their pairwise products of size <= 10, and every
    // quotient of those.
    std::vector<Named> catalog_closure() {
      auto const         base = catalog_base();
      std::vector<Named> out  = base;
      for (std::size_t i = 0; i < base.size(); ++i) {
        for (std::size_t j = i; j < base.size(); ++j) {
          if (base[i].lattice.size() * base[j].lattice.size() <= 10) {
            out.push_back({"product(" + base[i].name + "," + base[j].name
                               + ")",
                           catalog::product(base[i].lattice,
                                            base[j].lattice)});
          }
        }
      }
      std::size_t const generators = out.size();
      for (std::size_t i = 0; i < generators; ++i) {
        auto const thetas = enumerate_lattice_congruences(out[i].lattice);
        for (std::size_t t = 0; t < thetas.size(); ++t) {
          out.push_back({out[i].name + "/theta" + std::to_string(t),
                         quotient(out[i].lattice, thetas[t]).lattice});
        }
      }
      return out;
    }

    void ac7(Profile const&, CheckOutcome& out) {
      Failures   f;
      auto const closure = catalog_closure();
      for (auto const& [name, L] : closure) {
        if (auto bad = check_lower_modular_lift(L)) {
          f.add(name + ": " + L.label(bad->first) + " is lower-modular but "
                + L.label(L.join(bad->first, bad->second))
                + " is not lower-modular in [" + L.label(bad->second) + ")");
        }
        if (auto bad = check_upper_modular_preservation(L)) {
          std::string blocks;
          for (auto const& cls : bad->theta.classes()) {
            std::string b;
            for (auto e : cls) {
              b += (b.empty() ? "" : ",") + L.label(e);
            }
            blocks += "{" + b + "}";
          }
          f.add(name + ": upper-modular " + L.label(bad->x)
                + " maps to a non-upper-modular class modulo " + blocks);
        }
      }
      f.finish(out,
               std::to_string(closure.size())
                   + " lattices (catalog, products up to size 10, all "
                     "quotients): lower-modular lift and upper-modular "
                     "preservation hold");
    }

    void ac8(Profile const&, CheckOutcome& out) {
      Failures f;
      auto     expect = [&](bool ok, std::string const& what) {
        if (!ok) {
          f.add(what);
        }
      };
      auto const n5 = catalog::N5();
      auto const m3 = catalog::M3();
      auto const c  = *n5.find("c");
      auto const cn = classify_element(n5, c);
      expect(!cn.modular, "c is modular in N5");
      for (std::size_t x = 0; x < m3.size(); ++x) {
        expect(classify_element(m3, x).modular,
               m3.label(x) + " is not modular in M3");
      }
      expect(!is_zero_distributive(m3), "M3 is 0-distributive");
      expect(is_zero_distributive(n5), "N5 is not 0-distributive");
      for (std::size_t n = 1; n <= 6; ++n) {
        expect(is_zero_distributive(catalog::chain(n)),
               "chain(" + std::to_string(n) + ") is not 0-distributive");
      }
      std::size_t distributive = 0;
      for (auto const& [name, L] : catalog_closure()) {
        expect(classify_element(L, L.bottom()).distributive,
               "the bottom of " + name + " is not distributive");
        for (std::size_t x = 0; x < L.size(); ++x) {
          auto k = classify_element(L, x);
          if (k.distributive) {
            ++distributive;
            expect(k.lower_modular,
                   L.label(x) + " in " + name
                       + " is distributive but not lower-modular");
          }
        }
      }
      f.finish(out,
               "c in N5 not modular; M3 modular throughout; 0-distributivity "
               "of M3, N5 and chains; bottoms distributive; "
                   + std::to_string(distributive)
                   + " distributive elements all lower-modular");
    }

    ////////////////////////////////////////////////////////////////////
    // AC9 and the congruence sweep
    ////////////////////////////////////////////////////////////////////

    void ac9(Profile const&, CheckOutcome& out) {
      Failures f;
      struct Row {
        char const* lambda;
        std::size_t carrier;
        std::size_t group;
      };
      Row const rows[] = {{"2,1", 3, 1}, {"1,1", 2, 2}, {"3,2,1,1", 420, 2}};
      for (auto const& row : rows) {
        auto const G = build_wlambda(parse_lambda(row.lambda));
        if (G.size() != row.carrier || G.group().size() != row.group) {
          f.add("W_(" + std::string(row.lambda)
                + "): |W| = " + std::to_string(G.size())
                + ", |S| = " + std::to_string(G.group().size()));
        }
      }
      auto const con = enumerate_congruences(build_wlambda(parse_lambda("1,1")));
      if (con.size() != 2) {
        f.add("|Con W_(1,1)| = " + std::to_string(con.size()));
      }
      f.finish(out,
               "|W_(2,1)|=3, |W_(1,1)|=2 with 2 congruences, "
               "|W_(3,2,1,1)|=420; group orders 1, 2, 2");
    }

    // Partitions of n into at least two parts, largest first.
    void partitions_of(std::size_t                            n,
                       std::size_t                            max_part,
                       std::vector<std::size_t>&              prefix,
                       std::vector<std::vector<std::size_t>>& out) {
      if (n == 0) {
        if (prefix.size() >= 2) {
          out.push_back(prefix);
        }
        return;
      }
      for (std::size_t k = std::min(n, max_part); k >= 1; --k) {
        prefix.push_back(k);
        partitions_of(n - k, k, prefix, out);
        prefix.pop_back();
      }
    }

    void gset_sweep(Profile const& p, CheckOutcome& out) {
      Failures                              f;
      std::vector<std::vector<std::size_t>> lambdas;
      for (std::size_t n = 2; n <= 5; ++n) {
        std::vector<std::size_t> prefix;
        partitions_of(n, n, prefix, lambdas);
      }
      EnumerationLimits const limits{p.max_carrier, 9};
      std::size_t             swept = 0;
      std::string             counts;
      for (auto const& parts : lambdas) {
        PartitionLambda const lambda(parts);
        if (multinomial(lambda) > p.max_carrier) {
          continue;
        }
        ++swept;
        auto const G   = build_wlambda(lambda);
        auto const con = enumerate_congruences(G, limits);
        counts += (counts.empty() ? "" : ", ") + std::string("(")
                  + to_string(lambda) + "):" + std::to_string(con.size());
        if (G.size() <= limits.filter_threshold) {
          auto const other = enumerate_congruences_by_closure(G);
          if (other != con) {
            f.add("(" + to_string(lambda)
                  + "): filter and closure enumerations differ");
          }
        }
        std::set<Partition> members;
        for (auto const& c : con) {
          members.insert(c.partition());
        }
        // all pairs on small lattices; otherwise against the principal
        // congruences, whose joins give everything
        std::vector<GCongruence> partners;
        if (con.size() <= 1000) {
          partners = con;
        } else {
          for (std::size_t i = 0; i < G.size(); ++i) {
            for (std::size_t j = i + 1; j < G.size(); ++j) {
              std::pair<Word, Word> const pair[]
                  = {{G.carrier()[i], G.carrier()[j]}};
              partners.push_back(congruence_from_pairs(G, pair));
            }
          }
        }
        for (auto const& a : con) {
          for (auto const& b : partners) {
            if (!members.count(join(a, b).partition())
                || !members.count(meet(a, b).partition())) {
              f.add("(" + to_string(lambda)
                    + "): congruences not closed under join/meet");
            }
          }
        }
      }
      f.finish(out,
               std::to_string(swept) + " G-sets with carrier <= "
                   + std::to_string(p.max_carrier)
                   + "; congruence counts " + counts);
    }
  }  // namespace

  std::vector<Check> acceptance_checks() {
    using std::chrono::milliseconds;
    return {
        {"AC1", "criteria agree with finite models", milliseconds(10'000), ac1},
        {"AC2", "C2 v RZ contains P", milliseconds(30'000), ac2},
        {"AC3", "xuy = yux failure set", milliseconds(1'000), ac3},
        {"AC4", "G-set construction for aaabb = bbaaa", milliseconds(60'000),
         ac4},
        {"AC5", "Sapir systems and the case-2 chain", milliseconds(60'000),
         ac5},
        {"AC6", "deduction soundness", milliseconds(300'000), ac6},
        {"AC7", "lattice lemmas on the catalog closure",
         milliseconds(300'000), ac7},
        {"AC8", "special-element facts", milliseconds(10'000), ac8},
        {"AC9", "G-set counts", milliseconds(10'000), ac9},
        {"GSET", "congruence enumeration sweep", milliseconds(120'000),
         gset_sweep},
    };
  }

  CheckOutcome run_check(Check const& check, Profile const& profile) {
    CheckOutcome out;
    out.id         = check.id;
    out.title      = check.title;
    out.limit      = check.limit;
    auto const t0  = std::chrono::steady_clock::now();
    try {
      check.body(profile, out);
    } catch (std::exception const& e) {
      out.status  = Status::fail;
      out.witness = std::string("exception: ") + e.what();
    }
    out.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    if (out.status == Status::pass && out.millis > out.limit) {
      out.status  = Status::fail;
      out.witness = "took " + std::to_string(out.millis.count())
                    + " ms, limit " + std::to_string(out.limit.count())
                    + " ms";
    }
    return out;
  }

  bool Report::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](auto const& c) {
      return c.status == Status::pass;
    });
  }

  Report run_suite(Profile const&                                  profile,
                   std::vector<std::string> const&                 only,
                   std::function<void(CheckOutcome const&)> const& progress) {
    Report report{"verify-paper", profile.name, {}};
    for (auto const& check : acceptance_checks()) {
      if (!only.empty()
          && std::find(only.begin(), only.end(), check.id) == only.end()) {
        continue;
      }
      report.checks.push_back(run_check(check, profile));
      if (progress) {
        progress(report.checks.back());
      }
    }
    return report;
  }

  std::string to_json(Report const& report, int indent) {
    using nlohmann::json;
    json checks = json::array();
    for (auto const& c : report.checks) {
      json j{{"id", c.id},
             {"title", c.title},
             {"status", to_string(c.status)},
             {"summary", c.summary},
             {"millis", c.millis.count()}};
      if (!c.witness.empty()) {
        j["witness"] = c.witness;
      }
      checks.push_back(std::move(j));
    }
    json j{{"suite", report.suite},
           {"profile", report.profile},
           {"passed", report.passed()},
           {"checks", std::move(checks)}};
    return j.dump(indent);
  }

}  // namespace vll
