// Finite lattices, special elements, congruences and quotients.

#ifndef VLL_LATTICE_HPP_
#define VLL_LATTICE_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vll/partition.hpp"

namespace vll {

  //! The order is not a lattice order; names the offending pair.
  class NotALattice : public std::invalid_argument {
   public:
    NotALattice(std::string const& what, std::size_t a, std::size_t b)
        : std::invalid_argument(what), a(a), b(b) {}

    std::size_t a, b;
  };

  class FiniteLattice {
   public:
    using Matrix = std::vector<std::vector<bool>>;

    //! Validates a partial order and derives join/meet; throws
    //! std::invalid_argument for a non-order, NotALattice for a missing
    //! least upper or greatest lower bound.
    static FiniteLattice from_order(Matrix const&            leq,
                                    std::vector<std::string> labels = {});
    //! Reflexive-transitive closure of the cover pairs (i < j).
    static FiniteLattice from_covers(
        std::size_t                                          n,
        std::vector<std::pair<std::size_t, std::size_t>> const& covers,
        std::vector<std::string>                             labels = {});

    std::size_t size() const noexcept {
      return _n;
    }
    bool leq(std::size_t a, std::size_t b) const {
      return _leq[a * _n + b];
    }
    std::size_t join(std::size_t a, std::size_t b) const {
      return _join[a * _n + b];
    }
    std::size_t meet(std::size_t a, std::size_t b) const {
      return _meet[a * _n + b];
    }
    std::size_t bottom() const noexcept {
      return _bottom;
    }
    std::size_t top() const noexcept {
      return _top;
    }
    std::string const& label(std::size_t i) const {
      return _labels[i];
    }
    //! Element with the given label, if any.
    std::optional<std::size_t> find(std::string_view label) const;

    Matrix order() const;

   private:
    FiniteLattice() = default;

    std::size_t              _n = 0;
    std::vector<bool>        _leq;
    std::vector<std::size_t> _join;
    std::vector<std::size_t> _meet;
    std::size_t              _bottom = 0;
    std::size_t              _top    = 0;
    std::vector<std::string> _labels;
  };

  //! A pair (y, z) at which a quantified law fails.
  using LawWitness = std::pair<std::size_t, std::size_t>;

  struct ElementClassification {
    bool modular;
    bool lower_modular;
    bool upper_modular;
    bool distributive;

    std::optional<LawWitness> modular_witness;
    std::optional<LawWitness> lower_modular_witness;
    std::optional<LawWitness> upper_modular_witness;
    std::optional<LawWitness> distributive_witness;
  };

  //! modular:       y <= z  ->  (x v y) ^ z = (x ^ z) v y
  //! lower-modular: x <= y  ->  x v (y ^ z) = y ^ (x v z)
  //! upper-modular: y <= x  ->  (z ^ x) v y = (z v y) ^ x
  //! distributive:  x v (y ^ z) = (x v y) ^ (x v z)
  ElementClassification classify_element(FiniteLattice const& L,
                                         std::size_t          x);

  FiniteLattice dual(FiniteLattice const& L);

  struct Sublattice {
    FiniteLattice lattice;
    //! Index in the ambient lattice of each element.
    std::vector<std::size_t> embedding;
  };

  //! [a) = {x | x >= a}.
  Sublattice principal_coideal(FiniteLattice const& L, std::size_t a);

  //! x v a is lower-modular in [a) for every lower-modular x and every a.
  //! Returns the first violating (x, a), which would mean a bug.
  std::optional<std::pair<std::size_t, std::size_t>> check_lower_modular_lift(
      FiniteLattice const& L);

  struct Triple {
    std::size_t x, y, z;
  };

  //! x ^ z = y ^ z = 0  ->  (x v y) ^ z = 0; returns a failing triple.
  std::optional<Triple> zero_distributivity_violation(FiniteLattice const& L);
  inline bool is_zero_distributive(FiniteLattice const& L) {
    return !zero_distributivity_violation(L).has_value();
  }

  bool is_lattice_congruence(FiniteLattice const& L, Partition const& p);

  //! Refuses lattices larger than max_size with std::length_error.
  std::vector<Partition> enumerate_lattice_congruences(FiniteLattice const& L,
                                                       std::size_t max_size
                                                       = 10);

  struct Quotient {
    FiniteLattice lattice;
    //! Canonical surjection: element of L -> element of the quotient.
    std::vector<std::size_t> surjection;
  };

  //! Throws std::invalid_argument if theta is not a congruence of L.
  Quotient quotient(FiniteLattice const& L, Partition const& theta);

  struct PreservationViolation {
    Partition   theta;
    std::size_t x;
  };

  //! The image of every upper-modular element under every quotient map is
  //! upper-modular. Returns the first violation, which would mean a bug.
  std::optional<PreservationViolation> check_upper_modular_preservation(
      FiniteLattice const& L,
      std::size_t          max_size = 10);

  namespace catalog {
    FiniteLattice chain(std::size_t n);
    //! Subsets of an n-set under inclusion.
    FiniteLattice boolean(std::size_t n);
    FiniteLattice M3();
    FiniteLattice N5();
    FiniteLattice product(FiniteLattice const& a, FiniteLattice const& b);
  }  // namespace catalog

  //! chain(n), boolean(n), M3, N5, product(A,B), dual(A).
  FiniteLattice catalog_lattice(std::string_view name);

}  // namespace vll

#endif  // VLL_LATTICE_HPP_
