// Set partitions of {0, ..., n-1} in canonical restricted-growth form.

#ifndef VLL_PARTITION_HPP_
#define VLL_PARTITION_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace vll {

  class Partition {
   public:
    //! The discrete partition of n points.
    static Partition discrete(std::size_t n);
    //! The one-block partition of n points.
    static Partition full(std::size_t n);
    //! Relabels arbitrary block ids into canonical form.
    static Partition from_blocks(std::span<std::size_t const> block_of);
    //! Non-singleton classes are given explicitly; the rest are singletons.
    //! Throws std::invalid_argument if the classes overlap.
    static Partition from_classes(
        std::size_t                                   n,
        std::vector<std::vector<std::size_t>> const& classes);
    //! Least equivalence containing the pairs.
    static Partition from_pairs(
        std::size_t                                           n,
        std::span<std::pair<std::size_t, std::size_t> const> pairs);

    std::size_t size() const noexcept {
      return _block.size();
    }

    std::size_t block(std::size_t i) const {
      return _block[i];
    }

    std::size_t number_of_blocks() const noexcept {
      return _nblocks;
    }

    bool related(std::size_t i, std::size_t j) const {
      return _block[i] == _block[j];
    }

    //! Elements of each block, blocks in canonical order.
    std::vector<std::vector<std::size_t>> classes() const;

    std::span<std::uint32_t const> blocks() const noexcept {
      return _block;
    }

    //! Is every block of *this inside a block of other?
    bool refines(Partition const& other) const;

    bool operator==(Partition const&) const = default;
    auto operator<=>(Partition const&) const = default;

   private:
    std::vector<std::uint32_t> _block;
    std::size_t                _nblocks = 0;
  };

  //! Transitive closure of the union; throws std::invalid_argument on a
  //! size mismatch.
  Partition join(Partition const& a, Partition const& b);
  //! Common refinement.
  Partition meet(Partition const& a, Partition const& b);

  //! Visits every partition of n points (Bell(n) of them) in
  //! restricted-growth order.
  void for_each_partition(std::size_t                           n,
                          std::function<void(Partition const&)> f);

  //! Bell numbers, exact up to n = 25.
  std::uint64_t bell_number(std::size_t n);

}  // namespace vll

template <>
struct std::hash<vll::Partition> {
  std::size_t operator()(vll::Partition const& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto b : p.blocks()) {
      h ^= b;
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

#endif  // VLL_PARTITION_HPP_
