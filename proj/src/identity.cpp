#include "vll/identity.hpp"

#include <stdexcept>

namespace vll {

  std::set<Letter> Identity::letters() const {
    auto out = content(_lhs);
    if (_rhs) {
      auto more = content(*_rhs);
      out.insert(more.begin(), more.end());
    }
    return out;
  }

  namespace {
    std::string_view trim(std::string_view s) {
      auto b = s.find_first_not_of(" \t\r");
      if (b == std::string_view::npos) {
        return {};
      }
      auto e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    }
  }  // namespace

  Identity parse_identity(std::string_view text) {
    auto eq = text.find('=');
    if (eq == std::string_view::npos || text.find('=', eq + 1) != text.npos) {
      throw std::invalid_argument("expected exactly one '=' in \""
                                  + std::string(text) + "\"");
    }
    auto lhs = trim(text.substr(0, eq));
    auto rhs = trim(text.substr(eq + 1));
    if (rhs == "0") {
      return Identity::zero(parse_word(lhs));
    }
    return Identity::equation(parse_word(lhs), parse_word(rhs));
  }

  std::string to_string(Identity const& id) {
    return to_string(id.lhs()) + " = "
           + (id.is_zero() ? std::string("0") : to_string(id.rhs()));
  }

}  // namespace vll
