// Semigroup identities u = v and zero identities w = 0.

#ifndef VLL_IDENTITY_HPP_
#define VLL_IDENTITY_HPP_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "vll/word.hpp"

namespace vll {

  class Identity {
   public:
    static Identity equation(Word u, Word v) {
      return Identity(std::move(u), std::move(v));
    }

    //! w = 0, shorthand for the pair wx = xw = w with x not in w.
    static Identity zero(Word w) {
      return Identity(std::move(w), std::nullopt);
    }

    bool is_zero() const noexcept {
      return !_rhs.has_value();
    }

    Word const& lhs() const noexcept {
      return _lhs;
    }

    //! Throws std::logic_error for a zero identity.
    Word const& rhs() const {
      if (!_rhs) {
        throw std::logic_error("a zero identity has no right-hand word");
      }
      return *_rhs;
    }

    //! u = u; nontriviality is literal word inequality.
    bool is_trivial() const noexcept {
      return _rhs && *_rhs == _lhs;
    }

    Identity reversed() const {
      return is_zero() ? *this : equation(*_rhs, _lhs);
    }

    //! Letters occurring on either side.
    std::set<Letter> letters() const;

    auto operator<=>(Identity const&) const = default;

   private:
    Identity(Word lhs, std::optional<Word> rhs)
        : _lhs(std::move(lhs)), _rhs(std::move(rhs)) {}

    Word                _lhs;
    std::optional<Word> _rhs;
  };

  //! "u = v" or "w = 0" in the word text syntax.
  Identity    parse_identity(std::string_view text);
  std::string to_string(Identity const& id);

}  // namespace vll

#endif  // VLL_IDENTITY_HPP_
