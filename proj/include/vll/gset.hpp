// The G-sets W_lambda of words with prescribed letter multiplicities, acted
// on by the letter permutations preserving those multiplicities, and their
// congruence lattices.

#ifndef VLL_GSET_HPP_
#define VLL_GSET_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vll/partition.hpp"
#include "vll/word.hpp"

namespace vll {

  //! A partition (l_1 >= ... >= l_m) of n into m >= 2 positive parts.
  class PartitionLambda {
   public:
    //! Throws std::invalid_argument unless parts are positive,
    //! non-increasing and at least two.
    explicit PartitionLambda(std::vector<std::size_t> parts);

    std::vector<std::size_t> const& parts() const noexcept {
      return _parts;
    }
    std::size_t m() const noexcept {
      return _parts.size();
    }
    std::size_t n() const noexcept {
      return _n;
    }

    bool operator==(PartitionLambda const&) const = default;

   private:
    std::vector<std::size_t> _parts;
    std::size_t              _n = 0;
  };

  //! "3,2,1,1"
  PartitionLambda parse_lambda(std::string_view text);
  std::string     to_string(PartitionLambda const& lambda);

  //! n! / (l_1! ... l_m!), saturating at UINT64_MAX.
  std::uint64_t multinomial(PartitionLambda const& lambda);

  class GSet {
   public:
    PartitionLambda const& lambda() const noexcept {
      return _lambda;
    }
    //! All anagrams of x_1^l_1 ... x_m^l_m, lexicographically ordered.
    std::vector<Word> const& carrier() const noexcept {
      return _carrier;
    }
    std::size_t size() const noexcept {
      return _carrier.size();
    }
    std::optional<std::size_t> find(Word const& w) const;
    //! Throws std::invalid_argument if w is not in the carrier.
    std::size_t index(Word const& w) const;

    //! S_lambda as letter permutations of x_1..x_m; element 0 is the
    //! identity.
    std::vector<LetterPermutation> const& group() const noexcept {
      return _group;
    }
    //! The same group acting on carrier indices, index-aligned with group().
    std::vector<std::vector<std::size_t>> const& actions() const noexcept {
      return _actions;
    }

   private:
    friend GSet build_wlambda(PartitionLambda const&, std::size_t);

    explicit GSet(PartitionLambda lambda) : _lambda(std::move(lambda)) {}

    PartitionLambda                       _lambda;
    std::vector<Word>                     _carrier;
    std::vector<LetterPermutation>        _group;
    std::vector<std::vector<std::size_t>> _actions;
  };

  //! Throws std::length_error if the carrier would exceed max_carrier.
  GSet build_wlambda(PartitionLambda const& lambda,
                     std::size_t            max_carrier = 1'000'000);

  //! An invariant equivalence on the carrier of a G-set.
  class GCongruence {
   public:
    //! Throws std::invalid_argument if p is not invariant under G.
    static GCongruence from_partition(GSet const& G, Partition p);
    static GCongruence discrete(GSet const& G);
    static GCongruence full(GSet const& G);

    PartitionLambda const& lambda() const noexcept {
      return _lambda;
    }
    Partition const& partition() const noexcept {
      return _partition;
    }
    bool related(std::size_t i, std::size_t j) const {
      return _partition.related(i, j);
    }
    bool operator==(GCongruence const&) const = default;

   private:
    friend GCongruence join(GCongruence const&, GCongruence const&);
    friend GCongruence meet(GCongruence const&, GCongruence const&);

    GCongruence(PartitionLambda lambda, Partition p)
        : _lambda(std::move(lambda)), _partition(std::move(p)) {}

    PartitionLambda _lambda;
    Partition       _partition;
  };

  //! Least invariant equivalence containing the pairs; throws
  //! std::invalid_argument for words outside the carrier.
  GCongruence congruence_from_pairs(
      GSet const&                                 G,
      std::span<std::pair<Word, Word> const>      pairs);

  //! Throws std::invalid_argument for congruences on different G-sets.
  GCongruence join(GCongruence const& a, GCongruence const& b);
  GCongruence meet(GCongruence const& a, GCongruence const& b);
  bool        leq(GCongruence const& a, GCongruence const& b);

  bool is_congruence(GSet const& G, Partition const& p);

  struct EnumerationLimits {
    //! Larger carriers are refused with std::length_error.
    std::size_t max_carrier = 12;
    //! Carriers up to this size are enumerated by filtering all set
    //! partitions; larger ones by closing principal congruences under join.
    std::size_t filter_threshold = 9;
  };

  //! All congruences of G, sorted by partition.
  std::vector<GCongruence> enumerate_congruences(GSet const&       G,
                                                 EnumerationLimits limits = {});
  //! The two routes, exposed for cross-checking.
  std::vector<GCongruence> enumerate_congruences_by_filter(GSet const& G);
  std::vector<GCongruence> enumerate_congruences_by_closure(GSet const& G);

  struct ModularInstance {
    Partition lhs;  // (x v y) ^ z
    Partition rhs;  // (x ^ z) v y
    bool      y_le_z;
    bool      equal;
    //! rhs <= lhs, which always holds when y <= z.
    bool inclusion;
  };

  //! Compares both sides of the modular law (x v y) ^ z = (x ^ z) v y.
  ModularInstance check_modular_instance(GCongruence const& x,
                                         GCongruence const& y,
                                         GCongruence const& z);

}  // namespace vll

#endif  // VLL_GSET_HPP_
