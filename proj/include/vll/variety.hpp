// Word-problem criteria for the concrete semigroup varieties T, SL, LZ, RZ,
// COM, C_m, P, its mirror image, and 0-reduced varieties.

#ifndef VLL_VARIETY_HPP_
#define VLL_VARIETY_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vll/identity.hpp"
#include "vll/word.hpp"

namespace vll {

  //! Raised when a criterion is asked a question it does not characterize.
  class UnsupportedQuery : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

  class VarietyId {
   public:
    enum class Kind { T, SL, LZ, RZ, COM, C, P, Prev, ZeroReduced };

    static VarietyId trivial() {
      return VarietyId(Kind::T);
    }
    static VarietyId semilattices() {
      return VarietyId(Kind::SL);
    }
    static VarietyId left_zero() {
      return VarietyId(Kind::LZ);
    }
    static VarietyId right_zero() {
      return VarietyId(Kind::RZ);
    }
    static VarietyId commutative() {
      return VarietyId(Kind::COM);
    }
    //! var{x^m = x^(m+1), xy = yx}; C_0 = T and C_1 = SL.
    static VarietyId C(std::size_t m);
    //! var{xy = x^2 y, x^2 y^2 = y^2 x^2}
    static VarietyId P() {
      return VarietyId(Kind::P);
    }
    //! var{xy = x y^2, x^2 y^2 = y^2 x^2}
    static VarietyId P_dual() {
      return VarietyId(Kind::Prev);
    }
    //! var{w = 0 | w in patterns}; throws on an empty pattern set.
    static VarietyId zero_reduced(std::vector<Word> patterns);

    Kind kind() const noexcept {
      return _kind;
    }
    //! Exponent of C_m (only meaningful for Kind::C).
    std::size_t m() const noexcept {
      return _m;
    }
    std::vector<Word> const& patterns() const noexcept {
      return _patterns;
    }

    bool operator==(VarietyId const&) const = default;

   private:
    explicit VarietyId(Kind k) : _kind(k) {}

    Kind              _kind;
    std::size_t       _m = 0;
    std::vector<Word> _patterns;
  };

  //! Accepts T, SL, LZ, RZ, COM, C<m>, C(<m>), P, Prev. Zero-reduced
  //! varieties need their patterns and are built with zero_reduced.
  VarietyId   parse_variety(std::string_view name);
  std::string to_string(VarietyId const& v);

  //! Which clause of a criterion decided the verdict.
  enum class Clause {
    always,
    literal_equality,
    content_equal,
    content_differs,
    counts_differ,
    counts_agree,
    multiplicities_agree,
    multiplicity_mismatch,
    last_letters_agree,
    last_letters_differ,
    first_letters_agree,
    first_letters_differ,
    edge_letters_repeated,
    edge_letters_simple_and_equal,
    edge_letter_mismatch,
    both_sides_contain_instances,
    side_without_instance,
    contains_instance,
    no_instance
  };

  std::string to_string(Clause c);

  struct CheckResult {
    bool   holds;
    Clause clause;
    //! The letter that decided the verdict, when there is one.
    std::optional<Letter> witness;
  };

  //! Does the identity hold in the variety? Zero identities are only
  //! supported for zero-reduced varieties (UnsupportedQuery otherwise).
  CheckResult holds(VarietyId const& v, Identity const& id);

  //! Identities of a join are the intersection of the identity sets.
  bool holds_in_join(std::span<VarietyId const> vs, Identity const& id);

  struct ScanResult {
    bool                    ok;
    std::optional<Identity> counterexample;
    std::size_t             identities_checked = 0;
  };

  //! Exhaustively checks that every identity u = v with |u|, |v| <= max_len
  //! over at most max_letters letters that holds in C_2 v RZ also holds in P.
  ScanResult join_contains_P_scan(std::size_t   max_len,
                                  std::uint32_t max_letters);

}  // namespace vll

#endif  // VLL_VARIETY_HPP_
