#include "vll/deduction.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace vll {

  void IdentitySystem::add(Identity id) {
    if (id.is_zero()) {
      zero_patterns.push_back(id.lhs());
    } else {
      equations.push_back(std::move(id));
    }
  }

  void Bounds::validate() const {
    if (max_word_length == 0 || max_subst_image_length == 0
        || max_states == 0) {
      throw std::invalid_argument("deduction bounds must all be positive");
    }
  }

  std::string to_string(DeductionResult::Outcome o) {
    switch (o) {
      case DeductionResult::Outcome::proved:
        return "proved";
      case DeductionResult::Outcome::refuted:
        return "refuted";
      case DeductionResult::Outcome::unknown:
        return "unknown";
    }
    return "?";
  }

  namespace {

    // An axiom with a fixed orientation, lhs -> rhs, with letters renumbered:
    // slots [0, nbound) are the lhs letters, [nbound, nbound + nfree) the
    // letters occurring only in rhs.
    struct Oriented {
      std::size_t              axiom;
      bool                     reversed;
      std::vector<std::size_t> lhs;
      std::vector<std::size_t> rhs;
      std::vector<Letter>      slot_letter;
      std::size_t              nbound;
    };

    Oriented orient(Identity const& id, std::size_t index, bool reversed) {
      Word const& from = reversed ? id.rhs() : id.lhs();
      Word const& to   = reversed ? id.lhs() : id.rhs();
      Oriented    o{index, reversed, {}, {}, {}, 0};
      std::map<Letter, std::size_t> slot;
      auto                          id_of = [&](Letter x) {
        auto [it, fresh] = slot.emplace(x, o.slot_letter.size());
        if (fresh) {
          o.slot_letter.push_back(x);
        }
        return it->second;
      };
      for (auto x : from.letters()) {
        o.lhs.push_back(id_of(x));
      }
      o.nbound = o.slot_letter.size();
      for (auto x : to.letters()) {
        o.rhs.push_back(id_of(x));
      }
      return o;
    }

    struct Range {
      std::size_t start = 0;
      std::size_t len   = 0;
    };

    // One-step rewriting of words by a fixed identity system.
    class Rewriter {
     public:
      Rewriter(IdentitySystem const&      sigma,
               std::vector<Letter> const& alphabet,
               Bounds const&              bounds)
          : _bounds(bounds) {
        for (std::size_t i = 0; i < sigma.equations.size(); ++i) {
          auto const& eq = sigma.equations[i];
          if (eq.is_zero()) {
            throw std::invalid_argument("zero identity among equations");
          }
          _axioms.push_back(orient(eq, i, false));
          _axioms.push_back(orient(eq, i, true));
        }
        // free images: every word over the alphabet up to the image bound
        std::vector<std::vector<Letter>> frontier = {{}};
        for (std::size_t len = 1; len <= bounds.max_subst_image_length;
             ++len) {
          std::vector<std::vector<Letter>> next;
          for (auto const& prefix : frontier) {
            for (auto x : alphabet) {
              auto w = prefix;
              w.push_back(x);
              next.push_back(std::move(w));
            }
          }
          _free_images.insert(_free_images.end(), next.begin(), next.end());
          frontier = std::move(next);
        }
      }

      // Calls f(result, axiom, position, bindings, free image indices) for
      // every one-step rewrite of w whose result fits the length bound.
      template <typename F>
      void for_each(Word const& w, F&& f) const {
        auto letters = w.letters();
        for (auto const& ax : _axioms) {
          std::vector<Range> bind(ax.slot_letter.size());
          for (std::size_t pos = 0; pos < letters.size(); ++pos) {
            match(letters, ax, bind, 0, pos, pos, f);
          }
        }
      }

      Substitution substitution(std::span<Letter const>         w,
                                Oriented const&                 ax,
                                std::vector<Range> const&       bind,
                                std::vector<std::size_t> const& free) const {
        Substitution s;
        for (std::size_t i = 0; i < ax.nbound; ++i) {
          s.set(ax.slot_letter[i],
                Word(std::vector<Letter>(w.begin() + bind[i].start,
                                         w.begin() + bind[i].start
                                             + bind[i].len)));
        }
        for (std::size_t i = ax.nbound; i < ax.slot_letter.size(); ++i) {
          s.set(ax.slot_letter[i], Word(_free_images[free[i - ax.nbound]]));
        }
        return s;
      }

     private:
      template <typename F>
      void match(std::span<Letter const> w,
                 Oriented const&         ax,
                 std::vector<Range>&     bind,
                 std::size_t             k,
                 std::size_t             start,
                 std::size_t             cur,
                 F&                      f) const {
        if (k == ax.lhs.size()) {
          emit(w, ax, bind, start, cur, f);
          return;
        }
        std::size_t const remaining = ax.lhs.size() - k - 1;
        if (w.size() - cur < remaining + 1) {
          return;
        }
        auto& b = bind[ax.lhs[k]];
        if (b.len != 0) {
          if (cur + b.len <= w.size()
              && std::equal(w.begin() + b.start,
                            w.begin() + b.start + b.len,
                            w.begin() + cur)) {
            match(w, ax, bind, k + 1, start, cur + b.len, f);
          }
          return;
        }
        std::size_t const max_len = std::min(_bounds.max_subst_image_length,
                                             w.size() - cur - remaining);
        for (std::size_t len = 1; len <= max_len; ++len) {
          b = {cur, len};
          match(w, ax, bind, k + 1, start, cur + len, f);
        }
        b = {};
      }

      template <typename F>
      void emit(std::span<Letter const> w,
                Oriented const&         ax,
                std::vector<Range>&     bind,
                std::size_t             start,
                std::size_t             end,
                F&                      f) const {
        std::size_t const nfree = ax.slot_letter.size() - ax.nbound;
        std::size_t       base  = w.size() - (end - start);
        std::size_t       nfree_occ = 0;
        for (auto s : ax.rhs) {
          if (s < ax.nbound) {
            base += bind[s].len;
          } else {
            ++nfree_occ;
          }
        }
        if (base + nfree_occ > _bounds.max_word_length) {
          return;
        }
        std::vector<std::size_t> free(nfree, 0);
        if (nfree > 0 && _free_images.empty()) {
          return;
        }
        while (true) {
          std::size_t len = base;
          for (auto s : ax.rhs) {
            if (s >= ax.nbound) {
              len += _free_images[free[s - ax.nbound]].size();
            }
          }
          if (len <= _bounds.max_word_length) {
            std::vector<Letter> out;
            out.reserve(len);
            out.insert(out.end(), w.begin(), w.begin() + start);
            for (auto s : ax.rhs) {
              if (s < ax.nbound) {
                out.insert(out.end(),
                           w.begin() + bind[s].start,
                           w.begin() + bind[s].start + bind[s].len);
              } else {
                auto const& img = _free_images[free[s - ax.nbound]];
                out.insert(out.end(), img.begin(), img.end());
              }
            }
            out.insert(out.end(), w.begin() + end, w.end());
            f(Word(std::move(out)), ax, start, bind, free);
          }
          std::size_t i = nfree;
          while (i > 0 && free[i - 1] + 1 == _free_images.size()) {
            free[--i] = 0;
          }
          if (i == 0) {
            return;
          }
          ++free[i - 1];
        }
      }

      Bounds                           _bounds;
      std::vector<Oriented>            _axioms;
      std::vector<std::vector<Letter>> _free_images;
    };

    bool is_zero_word(IdentitySystem const& sigma, Word const& w) {
      return std::any_of(
          sigma.zero_patterns.begin(),
          sigma.zero_patterns.end(),
          [&](Word const& p) {
            return contains_instance(
                w, p, {std::max<std::size_t>(p.length(), 8),
                       std::max<std::size_t>(w.length(), 24)});
          });
    }

    std::vector<Letter> alphabet_of(Identity const& goal) {
      auto letters = goal.letters();
      return {letters.begin(), letters.end()};
    }

    // Finds the step a -> b; the edge is known to exist.
    RewriteStep find_step(IdentitySystem const& sigma,
                          Rewriter const&       rw,
                          Word const&           a,
                          Word const&           b) {
      std::optional<RewriteStep> found;
      rw.for_each(a,
                  [&](Word const&                     result,
                      Oriented const&                 ax,
                      std::size_t                     pos,
                      std::vector<Range> const&       bind,
                      std::vector<std::size_t> const& free) {
                    if (!found && result == b) {
                      found = RewriteStep{RewriteStep::Kind::axiom,
                                          a,
                                          b,
                                          ax.axiom,
                                          ax.reversed,
                                          pos,
                                          rw.substitution(
                                              a.letters(), ax, bind, free)};
                    }
                  });
      if (found) {
        return *found;
      }
      if (is_zero_word(sigma, a) && is_zero_word(sigma, b)) {
        return RewriteStep{RewriteStep::Kind::zero_collapse, a, b, 0, false, 0, {}};
      }
      throw std::logic_error("no rewrite step between " + to_string(a)
                             + " and " + to_string(b));
    }

    // One side of the bidirectional search.
    struct Side {
      std::vector<Word>                    nodes;
      std::vector<std::int64_t>            parent;
      std::unordered_map<Word, std::size_t> index;
      std::vector<std::size_t>             frontier;
      std::optional<std::size_t>           zero_node;

      std::size_t add(Word w, std::int64_t from) {
        auto [it, fresh] = index.emplace(w, nodes.size());
        if (fresh) {
          nodes.push_back(std::move(w));
          parent.push_back(from);
        }
        return it->second;
      }

      std::vector<Word> path_to(std::size_t i) const {
        std::vector<Word> out;
        for (std::int64_t j = static_cast<std::int64_t>(i); j >= 0;
             j = parent[j]) {
          out.push_back(nodes[j]);
        }
        std::reverse(out.begin(), out.end());
        return out;
      }
    };

  }  // namespace

  DeductionResult derive(IdentitySystem const& sigma,
                         Identity const&       goal,
                         Bounds                bounds) {
    bounds.validate();
    if (goal.is_zero()) {
      throw std::invalid_argument("derive needs an equation u = v");
    }
    DeductionResult result;
    Word const&     u = goal.lhs();
    Word const&     v = goal.rhs();
    if (u == v) {
      result.outcome = DeductionResult::Outcome::proved;
      result.states  = 1;
      return result;
    }
    if (u.length() > bounds.max_word_length
        || v.length() > bounds.max_word_length) {
      return result;
    }
    Rewriter rw(sigma, alphabet_of(goal), bounds);

    Side fwd, bwd;
    fwd.frontier.push_back(fwd.add(u, -1));
    bwd.frontier.push_back(bwd.add(v, -1));
    for (auto* side : {&fwd, &bwd}) {
      if (!sigma.zero_patterns.empty()
          && is_zero_word(sigma, side->nodes[0])) {
        side->zero_node = 0;
      }
    }

    // meeting: (index in fwd, index in bwd, via zero collapse)
    std::optional<std::tuple<std::size_t, std::size_t, bool>> meet;
    if (fwd.zero_node && bwd.zero_node) {
      meet = {0, 0, true};
    }

    while (!meet && !fwd.frontier.empty() && !bwd.frontier.empty()) {
      bool  forward = fwd.nodes.size() <= bwd.nodes.size();
      Side& here    = forward ? fwd : bwd;
      Side& there   = forward ? bwd : fwd;
      std::vector<std::size_t> next;
      for (auto i : here.frontier) {
        Word const current = here.nodes[i];
        rw.for_each(current,
                    [&](Word const& w,
                        Oriented const&,
                        std::size_t,
                        std::vector<Range> const&,
                        std::vector<std::size_t> const&) {
                      if (meet || here.index.count(w)) {
                        return;
                      }
                      auto j = here.add(w, static_cast<std::int64_t>(i));
                      next.push_back(j);
                      if (auto it = there.index.find(w);
                          it != there.index.end()) {
                        meet = forward ? std::tuple{j, it->second, false}
                                       : std::tuple{it->second, j, false};
                        return;
                      }
                      if (!sigma.zero_patterns.empty() && !here.zero_node
                          && is_zero_word(sigma, w)) {
                        here.zero_node = j;
                        if (there.zero_node) {
                          meet = forward ? std::tuple{j, *there.zero_node, true}
                                         : std::tuple{*there.zero_node, j, true};
                        }
                      }
                    });
        if (meet || fwd.nodes.size() + bwd.nodes.size() > bounds.max_states) {
          break;
        }
      }
      here.frontier = std::move(next);
      if (!meet && fwd.nodes.size() + bwd.nodes.size() > bounds.max_states) {
        break;
      }
    }
    result.states = fwd.nodes.size() + bwd.nodes.size();
    if (!meet) {
      return result;
    }

    auto [fi, bi, collapse] = *meet;
    auto path               = fwd.path_to(fi);
    auto back               = bwd.path_to(bi);
    std::reverse(back.begin(), back.end());
    if (!collapse) {
      back.erase(back.begin());  // the meeting word
    }
    path.insert(path.end(), back.begin(), back.end());
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      result.trace.push_back(find_step(sigma, rw, path[i], path[i + 1]));
    }
    result.outcome = DeductionResult::Outcome::proved;
    return result;
  }

  bool replay_trace(IdentitySystem const&        sigma,
                    Identity const&              goal,
                    std::span<RewriteStep const> trace) {
    if (goal.is_zero()) {
      return false;
    }
    Word current = goal.lhs();
    for (auto const& step : trace) {
      if (step.before != current) {
        return false;
      }
      if (step.kind == RewriteStep::Kind::zero_collapse) {
        if (!is_zero_word(sigma, step.before)
            || !is_zero_word(sigma, step.after)) {
          return false;
        }
      } else {
        if (step.axiom >= sigma.equations.size()) {
          return false;
        }
        auto const& ax   = sigma.equations[step.axiom];
        Word const& from = step.reversed ? ax.rhs() : ax.lhs();
        Word const& to   = step.reversed ? ax.lhs() : ax.rhs();
        if (!matches_at(step.before, step.position, from, step.substitution)) {
          return false;
        }
        auto   pattern = apply_substitution(from, step.substitution);
        auto   image   = apply_substitution(to, step.substitution);
        auto   b       = step.before.letters();
        std::vector<Letter> out(b.begin(), b.begin() + step.position);
        out.insert(out.end(), image.letters().begin(), image.letters().end());
        out.insert(out.end(),
                   b.begin() + step.position + pattern.length(),
                   b.end());
        if (Word(std::move(out)) != step.after) {
          return false;
        }
      }
      current = step.after;
    }
    return current == goal.rhs();
  }

  DeductionResult refute(std::span<FiniteSemigroup const> models,
                         Identity const&                  id) {
    DeductionResult result;
    for (auto const& S : models) {
      auto sat = satisfies(S, id);
      if (!sat.satisfied) {
        result.outcome    = DeductionResult::Outcome::refuted;
        result.model      = S.name();
        result.assignment = sat.witness;
        return result;
      }
    }
    return result;
  }

  std::vector<Word> one_step_rewrites(IdentitySystem const& sigma,
                                      Word const&           w,
                                      std::uint32_t         k,
                                      Bounds const&         bounds) {
    std::vector<Letter> alphabet;
    for (std::uint32_t i = 1; i <= k; ++i) {
      alphabet.emplace_back(i);
    }
    Rewriter          rw(sigma, alphabet, bounds);
    std::vector<Word> out;
    rw.for_each(w,
                [&](Word const& r,
                    Oriented const&,
                    std::size_t,
                    std::vector<Range> const&,
                    std::vector<std::size_t> const&) { out.push_back(r); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  ScanResult consistency_scan(VarietyId const&      v,
                              IdentitySystem const& sigma,
                              std::size_t           max_len,
                              std::uint32_t         k) {
    if (max_len == 0 || k == 0) {
      throw std::invalid_argument("scan bounds must be >= 1");
    }
    auto const words = all_words(max_len, k);
    std::unordered_map<Word, std::size_t> index;
    for (std::size_t i = 0; i < words.size(); ++i) {
      index.emplace(words[i], i);
    }
    std::vector<std::size_t> parent(words.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
      while (parent[i] != i) {
        parent[i] = parent[parent[i]];
        i         = parent[i];
      }
      return i;
    };

    Bounds bounds{max_len, max_len, 1};
    std::vector<Letter> alphabet;
    for (std::uint32_t i = 1; i <= k; ++i) {
      alphabet.emplace_back(i);
    }
    Rewriter rw(sigma, alphabet, bounds);
    std::vector<std::size_t> zero_words;
    for (std::size_t i = 0; i < words.size(); ++i) {
      rw.for_each(words[i],
                  [&](Word const& r,
                      Oriented const&,
                      std::size_t,
                      std::vector<Range> const&,
                      std::vector<std::size_t> const&) {
                    auto a = find(i), b = find(index.at(r));
                    if (a != b) {
                      parent[a] = b;
                    }
                  });
      if (!sigma.zero_patterns.empty() && is_zero_word(sigma, words[i])) {
        zero_words.push_back(i);
      }
    }
    for (std::size_t i = 1; i < zero_words.size(); ++i) {
      auto a = find(zero_words[0]), b = find(zero_words[i]);
      if (a != b) {
        parent[a] = b;
      }
    }

    std::unordered_map<std::size_t, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < words.size(); ++i) {
      classes[find(i)].push_back(i);
    }
    ScanResult result{true, std::nullopt, 0};
    // deterministic order: by smallest member
    std::vector<std::vector<std::size_t>> ordered;
    for (auto& [root, members] : classes) {
      ordered.push_back(std::move(members));
    }
    std::sort(ordered.begin(), ordered.end());
    for (auto const& members : ordered) {
      for (auto i : members) {
        for (auto j : members) {
          auto id = Identity::equation(words[i], words[j]);
          ++result.identities_checked;
          if (!holds(v, id).holds) {
            result.ok             = false;
            result.counterexample = id;
            return result;
          }
        }
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Sapir systems
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(SapirFamily f) {
    switch (f) {
      case SapirFamily::period_shift:
        return "xyz = xy^(r+1)z";
      case SapirFamily::idempotents_commute:
        return "x^0y^0 = y^0x^0";
      case SapirFamily::square_power:
        return "x^2 = x^(r+2)";
      case SapirFamily::basis_square:
        return "xv^2y = xvy";
      case SapirFamily::verbal:
        return "xwx = (xwx)^(r+1)";
    }
    return "?";
  }

  namespace {
    // The n smallest letters not occurring in any of the given words.
    std::vector<Letter> fresh_letters(std::vector<Word> const& avoid,
                                      std::size_t              n) {
      std::set<Letter> used;
      for (auto const& w : avoid) {
        auto c = content(w);
        used.insert(c.begin(), c.end());
      }
      std::vector<Letter> out;
      for (std::uint32_t i = 1; out.size() < n; ++i) {
        if (!used.count(Letter(i))) {
          out.emplace_back(i);
        }
      }
      return out;
    }

    SapirSystem build_sapir(std::size_t                      r,
                            std::vector<Word>                basis,
                            std::optional<std::vector<Word>> verbal) {
      if (r == 0) {
        throw std::invalid_argument("the exponent r must be >= 1");
      }
      std::vector<Word> avoid = basis;
      if (verbal) {
        avoid.insert(avoid.end(), verbal->begin(), verbal->end());
      }
      auto const fresh = fresh_letters(avoid, 3);
      Word const x({fresh[0]}), y({fresh[1]}), z({fresh[2]});
      SapirSystem s{r, basis, verbal, {}, {}, fresh[0], fresh[1], fresh[2]};
      auto add = [&](Word lhs, Word rhs, SapirFamily f) {
        s.generated.equations.push_back(
            Identity::equation(std::move(lhs), std::move(rhs)));
        s.families.push_back(f);
      };
      std::size_t const idem = r * (r + 1);
      add(x + y + z, x + y.power(r + 1) + z, SapirFamily::period_shift);
      add(x.power(idem) + y.power(idem),
          y.power(idem) + x.power(idem),
          SapirFamily::idempotents_commute);
      add(x.power(2), x.power(r + 2), SapirFamily::square_power);
      for (auto const& v : basis) {
        add(x + v.power(2) + y, x + v + y, SapirFamily::basis_square);
      }
      if (verbal) {
        for (auto const& w : *verbal) {
          add(x + w + x, (x + w + x).power(r + 1), SapirFamily::verbal);
        }
      }
      s.generated.label = (verbal && !verbal->empty() ? "S(G,X), r="
                                                      : "S(G), r=")
                          + std::to_string(r);
      return s;
    }
  }  // namespace

  SapirSystem sapir_system(std::size_t r, std::vector<Word> basis_words) {
    return build_sapir(r, std::move(basis_words), std::nullopt);
  }

  SapirSystem sapir_with_verbal(std::size_t       r,
                                std::vector<Word> basis_words,
                                std::vector<Word> verbal) {
    if (verbal.empty()) {
      return sapir_system(r, std::move(basis_words));
    }
    return build_sapir(r, std::move(basis_words), std::move(verbal));
  }

  std::pair<IdentitySystem, Identity> case2_chain_problem(std::size_t r,
                                                          Word const& w,
                                                          std::size_t n) {
    if (r == 0) {
      throw std::invalid_argument("the exponent r must be >= 1");
    }
    if (n == 0) {
      throw std::invalid_argument("the chain length n must be >= 1");
    }
    auto const     fresh = fresh_letters({w}, 2);
    Word const     x({fresh[0]}), y({fresh[1]});
    IdentitySystem sigma;
    sigma.label = "xwx = xw^2x with xv^2y = xvy at v = w, r="
                  + std::to_string(r);
    sigma.equations.push_back(Identity::equation(x + w + x, x + w.power(2) + x));
    sigma.equations.push_back(
        Identity::equation(x + w.power(2) + y, x + w + y));
    return {std::move(sigma),
            Identity::equation(x + w + x, x + w.power(2 * n) + x)};
  }

  DeductionResult replay_case2_chain(std::size_t r,
                                     Word const& w,
                                     std::size_t n,
                                     Bounds      bounds) {
    auto [sigma, goal] = case2_chain_problem(r, w, n);
    return derive(sigma, goal, bounds);
  }

}  // namespace vll
