// Mechanical replay of the congruence argument on W_lambda that turns a
// nontrivial balanced identity u = v into xuy = yux.

#ifndef VLL_REPLAY_HPP_
#define VLL_REPLAY_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "vll/gset.hpp"
#include "vll/word.hpp"

namespace vll {

  //! The identity u = v does not meet the replay precondition.
  class ReplayPrecondition : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  struct ModularInstanceFacts {
    bool beta_le_alpha = false;
    //! (g v b) ^ a = (g ^ a) v b
    bool equal = false;
    //! (g ^ a) v b <= (g v b) ^ a
    bool inclusion = false;
    //! The pair the argument extracts from alpha when the law holds.
    bool conclusion_in_alpha = false;
    //! equal implies conclusion_in_alpha.
    bool inference_valid = false;
    std::size_t lhs_blocks = 0;
    std::size_t rhs_blocks = 0;
  };

  struct ProofReplayReport {
    Word                     u, v;
    Word                     x, y;
    std::vector<std::size_t> lambda;
    std::size_t              carrier_size = 0;
    std::size_t              group_order  = 0;

    bool beta_is_congruence = false;
    bool gamma_is_congruence = false;
    bool gamma_prime_is_congruence = false;

    // xuy gamma xyu, xyu beta xyv, xyv gamma xvy
    bool xuy_gamma_xyu = false;
    bool xyu_beta_xyv = false;
    bool xyv_gamma_xvy = false;
    bool xuy_xvy_in_gamma_join_beta = false;
    bool alpha_is_congruence = false;

    ModularInstanceFacts with_gamma{};        // conclusion: (xuy, xyu) in alpha
    ModularInstanceFacts with_gamma_prime{};  // conclusion: (xyu, yux) in alpha

    std::vector<std::string> trace{};

    //! Every structural fact of the argument checks out.
    bool structure_holds() const;
  };

  //! Requires u != v balanced, c(u) = {x_1..x_m} and l_1 > ... > l_m > 1;
  //! throws ReplayPrecondition otherwise.
  ProofReplayReport proof_replay(Word const& u, Word const& v);

  std::string to_json(ProofReplayReport const& r, int indent = 2);

}  // namespace vll

#endif  // VLL_REPLAY_HPP_
