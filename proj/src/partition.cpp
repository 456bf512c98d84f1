#include "vll/partition.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace vll {

  namespace {
    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), 0);
      }

      std::size_t find(std::size_t i) {
        while (_parent[i] != i) {
          _parent[i] = _parent[_parent[i]];
          i          = _parent[i];
        }
        return i;
      }

      void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          _parent[std::max(a, b)] = std::min(a, b);
        }
      }

      std::vector<std::size_t> roots() {
        std::vector<std::size_t> out(_parent.size());
        for (std::size_t i = 0; i < out.size(); ++i) {
          out[i] = find(i);
        }
        return out;
      }

     private:
      std::vector<std::size_t> _parent;
    };
  }  // namespace

  Partition Partition::discrete(std::size_t n) {
    std::vector<std::size_t> b(n);
    std::iota(b.begin(), b.end(), 0);
    return from_blocks(b);
  }

  Partition Partition::full(std::size_t n) {
    std::vector<std::size_t> b(n, 0);
    return from_blocks(b);
  }

  Partition Partition::from_blocks(std::span<std::size_t const> block_of) {
    Partition p;
    p._block.resize(block_of.size());
    // block ids may be arbitrary; map them in order of first appearance
    std::vector<std::pair<std::size_t, std::uint32_t>> table;
    for (std::size_t i = 0; i < block_of.size(); ++i) {
      std::uint32_t id    = 0;
      bool          found = false;
      for (auto const& [key, val] : table) {
        if (key == block_of[i]) {
          id    = val;
          found = true;
          break;
        }
      }
      if (!found) {
        id = static_cast<std::uint32_t>(table.size());
        table.emplace_back(block_of[i], id);
      }
      p._block[i] = id;
    }
    p._nblocks = table.size();
    return p;
  }

  Partition Partition::from_classes(
      std::size_t                                   n,
      std::vector<std::vector<std::size_t>> const& classes) {
    std::vector<std::size_t> b(n);
    std::iota(b.begin(), b.end(), 0);
    std::vector<bool> used(n, false);
    for (auto const& cls : classes) {
      for (auto i : cls) {
        if (i >= n) {
          throw std::invalid_argument("class member " + std::to_string(i)
                                      + " out of range");
        }
        if (used[i]) {
          throw std::invalid_argument("element " + std::to_string(i)
                                      + " lies in two classes");
        }
        used[i] = true;
        b[i]    = n + (&cls - classes.data());
      }
    }
    return from_blocks(b);
  }

  Partition Partition::from_pairs(
      std::size_t                                           n,
      std::span<std::pair<std::size_t, std::size_t> const> pairs) {
    UnionFind uf(n);
    for (auto [a, b] : pairs) {
      if (a >= n || b >= n) {
        throw std::invalid_argument("pair member out of range");
      }
      uf.unite(a, b);
    }
    auto roots = uf.roots();
    return from_blocks(roots);
  }

  std::vector<std::vector<std::size_t>> Partition::classes() const {
    std::vector<std::vector<std::size_t>> out(_nblocks);
    for (std::size_t i = 0; i < _block.size(); ++i) {
      out[_block[i]].push_back(i);
    }
    return out;
  }

  bool Partition::refines(Partition const& other) const {
    if (other.size() != size()) {
      throw std::invalid_argument("partitions of different sets");
    }
    std::vector<std::int64_t> image(_nblocks, -1);
    for (std::size_t i = 0; i < _block.size(); ++i) {
      auto& img = image[_block[i]];
      if (img == -1) {
        img = other._block[i];
      } else if (img != other._block[i]) {
        return false;
      }
    }
    return true;
  }

  Partition join(Partition const& a, Partition const& b) {
    if (a.size() != b.size()) {
      throw std::invalid_argument("join of partitions of different sets");
    }
    std::size_t const n = a.size();
    UnionFind         uf(n);
    std::vector<std::int64_t> first_a(a.number_of_blocks(), -1);
    std::vector<std::int64_t> first_b(b.number_of_blocks(), -1);
    for (std::size_t i = 0; i < n; ++i) {
      auto& fa = first_a[a.block(i)];
      auto& fb = first_b[b.block(i)];
      if (fa < 0) {
        fa = static_cast<std::int64_t>(i);
      } else {
        uf.unite(fa, i);
      }
      if (fb < 0) {
        fb = static_cast<std::int64_t>(i);
      } else {
        uf.unite(fb, i);
      }
    }
    auto roots = uf.roots();
    return Partition::from_blocks(roots);
  }

  Partition meet(Partition const& a, Partition const& b) {
    if (a.size() != b.size()) {
      throw std::invalid_argument("meet of partitions of different sets");
    }
    std::vector<std::size_t> key(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      key[i] = a.block(i) * b.number_of_blocks() + b.block(i);
    }
    return Partition::from_blocks(key);
  }

  void for_each_partition(std::size_t                           n,
                          std::function<void(Partition const&)> f) {
    if (n == 0) {
      f(Partition::discrete(0));
      return;
    }
    // restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1])
    std::vector<std::size_t> a(n, 0), m(n, 0);
    while (true) {
      f(Partition::from_blocks(a));
      std::size_t i = n - 1;
      while (i > 0 && a[i] == m[i - 1] + 1) {
        --i;
      }
      if (i == 0) {
        return;
      }
      ++a[i];
      m[i] = std::max(m[i - 1], a[i]);
      for (std::size_t j = i + 1; j < n; ++j) {
        a[j] = 0;
        m[j] = m[i];
      }
    }
  }

  std::uint64_t bell_number(std::size_t n) {
    if (n > 25) {
      throw std::overflow_error("Bell number too large");
    }
    // Bell triangle
    std::vector<std::uint64_t> row = {1};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::uint64_t> next = {row.back()};
      for (auto x : row) {
        next.push_back(next.back() + x);
      }
      row = std::move(next);
    }
    return row.front();
  }

}  // namespace vll
