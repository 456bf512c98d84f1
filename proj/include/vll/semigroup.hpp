// Finite semigroups given by Cayley tables, used as refutation oracles.

#ifndef VLL_SEMIGROUP_HPP_
#define VLL_SEMIGROUP_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vll/identity.hpp"
#include "vll/word.hpp"

namespace vll {

  //! Raised by FiniteSemigroup::validate for a non-associative table.
  class NotAssociative : public std::invalid_argument {
   public:
    NotAssociative(std::size_t a, std::size_t b, std::size_t c);

    std::size_t a, b, c;
  };

  using Assignment = std::map<Letter, std::size_t>;

  class FiniteSemigroup {
   public:
    using Table = std::vector<std::vector<std::size_t>>;

    //! Checks shape, range and associativity of all order^3 triples.
    static FiniteSemigroup validate(Table table, std::string name = "");

    std::size_t order() const noexcept {
      return _order;
    }

    std::size_t product(std::size_t a, std::size_t b) const noexcept {
      return _table[a * _order + b];
    }

    std::string const& name() const noexcept {
      return _name;
    }

    //! The absorbing element, if any.
    std::optional<std::size_t> zero() const noexcept {
      return _zero;
    }

    Table table() const;

    //! Value of w under an assignment covering its letters.
    std::size_t evaluate(Word const& w, Assignment const& a) const;

   private:
    FiniteSemigroup() = default;

    std::size_t                _order = 0;
    std::vector<std::size_t>   _table;
    std::string                _name;
    std::optional<std::size_t> _zero;
  };

  struct Satisfaction {
    bool                      satisfied;
    std::optional<Assignment> witness;
  };

  //! Exhaustive over all |S|^k assignments of the k letters of id. A zero
  //! identity w = 0 holds iff S has a zero and every value of w is it.
  Satisfaction satisfies(FiniteSemigroup const& S, Identity const& id);

  FiniteSemigroup direct_product(FiniteSemigroup const& S,
                                 FiniteSemigroup const& T);

  namespace builtin {
    FiniteSemigroup left_zero2();
    FiniteSemigroup right_zero2();
    //! {0, 1} under min: 0 is the zero, 1 the identity.
    FiniteSemigroup semilattice2();
    //! Cyclic group Z_r, r >= 1.
    FiniteSemigroup cyclic_group(std::size_t r);
    //! {1, a, ..., a^m} with a^(m+1) = a^m; element k is a^k.
    FiniteSemigroup cyclic_monoid(std::size_t m);
    //! {0, a} with every product 0; element 0 is the zero.
    FiniteSemigroup nil2();
  }  // namespace builtin

  //! LZ2, RZ2, SL2, NilN2, Z<r>, Zr(<r>), CyclicMonoid(<m>), CM<m>.
  FiniteSemigroup builtin_semigroup(std::string_view name);

  std::string to_string(Assignment const& a);

}  // namespace vll

#endif  // VLL_SEMIGROUP_HPP_
