// Bounded equational deduction over identity systems, model-based
// refutation, and generators for Sapir's S(G) and S(G, X) systems.

#ifndef VLL_DEDUCTION_HPP_
#define VLL_DEDUCTION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vll/identity.hpp"
#include "vll/semigroup.hpp"
#include "vll/variety.hpp"
#include "vll/word.hpp"

namespace vll {

  //! A finite system of identities: equations u = v together with zero
  //! patterns w (standing for w = 0).
  struct IdentitySystem {
    std::vector<Identity> equations;
    std::vector<Word>     zero_patterns;
    std::string           label;

    //! Adds an identity, routing w = 0 into zero_patterns.
    void add(Identity id);
  };

  struct Bounds {
    std::size_t max_word_length       = 16;
    std::size_t max_subst_image_length = 4;
    std::size_t max_states            = 2'000'000;

    //! Throws std::invalid_argument unless every bound is positive.
    void validate() const;
  };

  //! One application of an axiom in context: `before` contains
  //! s(lhs) at `position` and `after` replaces it with s(rhs), where
  //! (lhs, rhs) is the axiom, swapped when `reversed`. A zero collapse
  //! joins two words that both contain an instance of a zero pattern.
  struct RewriteStep {
    enum class Kind { axiom, zero_collapse };

    Kind         kind = Kind::axiom;
    Word         before;
    Word         after;
    std::size_t  axiom    = 0;
    bool         reversed = false;
    std::size_t  position = 0;
    Substitution substitution;
  };

  struct DeductionResult {
    enum class Outcome { proved, refuted, unknown };

    Outcome                   outcome = Outcome::unknown;
    std::vector<RewriteStep>  trace;
    std::string               model;
    std::optional<Assignment> assignment;
    std::size_t               states = 0;

    bool proved() const noexcept {
      return outcome == Outcome::proved;
    }
  };

  std::string to_string(DeductionResult::Outcome o);

  //! Bidirectional breadth-first search over the one-step rewrite relation
  //! of the system (axioms used in both directions). Proved results carry a
  //! trace; the search never refutes; Unknown when the budget runs out.
  DeductionResult derive(IdentitySystem const& sigma,
                         Identity const&       goal,
                         Bounds                bounds = {});

  //! Re-checks a trace step by step against the axioms of sigma.
  bool replay_trace(IdentitySystem const&           sigma,
                    Identity const&                 goal,
                    std::span<RewriteStep const>    trace);

  //! First falsifying (model, assignment), else Unknown.
  DeductionResult refute(std::span<FiniteSemigroup const> models,
                         Identity const&                  id);

  //! All words reachable in one step from w, restricted to words of length
  //! <= max_word_length whose free letters are drawn from x1..x_k.
  std::vector<Word> one_step_rewrites(IdentitySystem const& sigma,
                                      Word const&           w,
                                      std::uint32_t         k,
                                      Bounds const&         bounds);

  //! Every identity derivable from sigma inside words of length <= max_len
  //! over x1..x_k must pass the criterion of v.
  ScanResult consistency_scan(VarietyId const&      v,
                              IdentitySystem const& sigma,
                              std::size_t           max_len,
                              std::uint32_t         k = 3);

  //! The identity families of S(G) and S(G, X).
  enum class SapirFamily {
    period_shift,       // xyz = x y^(r+1) z
    idempotents_commute,  // x^0 y^0 = y^0 x^0, x^0 = x^(r(r+1))
    square_power,       // x^2 = x^(r+2)
    basis_square,       // x v^2 y = x v y
    verbal              // x w x = (x w x)^(r+1)
  };

  std::string to_string(SapirFamily f);

  struct SapirSystem {
    std::size_t                      r;
    std::vector<Word>                basis_words;
    std::optional<std::vector<Word>> verbal_words;
    IdentitySystem                   generated;
    //! Family of each equation in generated, index-aligned.
    std::vector<SapirFamily> families;
    //! The schema letters, fresh for the basis and verbal words.
    Letter x, y, z;
  };

  //! S(G) for a group variety of exponent r with basis {v = 1 | v in basis}.
  //! Throws std::invalid_argument for r = 0.
  SapirSystem sapir_system(std::size_t r, std::vector<Word> basis_words);

  //! S(G) together with xwx = (xwx)^(r+1) for w in verbal; an empty
  //! verbal set gives S(G) itself.
  SapirSystem sapir_with_verbal(std::size_t       r,
                                std::vector<Word> basis_words,
                                std::vector<Word> verbal);

  //! Derives x w x = x w^(2n) x from x w x = x w^2 x and x w^2 y = x w y,
  //! with x, y fresh for w.
  DeductionResult replay_case2_chain(std::size_t r,
                                     Word const& w,
                                     std::size_t n,
                                     Bounds      bounds = {});

  //! The system {x w x = x w^2 x, x w^2 y = x w y} used by
  //! replay_case2_chain, and its goal.
  std::pair<IdentitySystem, Identity> case2_chain_problem(std::size_t r,
                                                          Word const& w,
                                                          std::size_t n);

}  // namespace vll

#endif  // VLL_DEDUCTION_HPP_
