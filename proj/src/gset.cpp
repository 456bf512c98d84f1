#include "vll/gset.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace vll {

  PartitionLambda::PartitionLambda(std::vector<std::size_t> parts)
      : _parts(std::move(parts)) {
    if (_parts.size() < 2) {
      throw std::invalid_argument("a partition lambda needs at least 2 parts");
    }
    for (std::size_t i = 0; i < _parts.size(); ++i) {
      if (_parts[i] == 0) {
        throw std::invalid_argument("parts must be positive");
      }
      if (i > 0 && _parts[i] > _parts[i - 1]) {
        throw std::invalid_argument("parts must be non-increasing");
      }
      _n += _parts[i];
    }
  }

  PartitionLambda parse_lambda(std::string_view text) {
    std::vector<std::size_t> parts;
    while (!text.empty()) {
      auto        comma = text.find(',');
      auto        item  = text.substr(0, comma);
      std::size_t k     = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), k);
      if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
        throw std::invalid_argument("bad partition \"" + std::string(text)
                                    + "\"");
      }
      parts.push_back(k);
      text = comma == text.npos ? std::string_view() : text.substr(comma + 1);
    }
    return PartitionLambda(std::move(parts));
  }

  std::string to_string(PartitionLambda const& lambda) {
    std::string out;
    for (auto p : lambda.parts()) {
      out += (out.empty() ? "" : ",") + std::to_string(p);
    }
    return out;
  }

  namespace {
    __extension__ using u128 = unsigned __int128;
  }

  std::uint64_t multinomial(PartitionLambda const& lambda) {
    // product of binomials C(l_1 + ... + l_i, l_i)
    constexpr auto max   = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t  total = 1;
    std::size_t    sum   = 0;
    for (auto part : lambda.parts()) {
      std::uint64_t binom = 1;
      for (std::size_t j = 1; j <= part; ++j) {
        // binom = C(sum + j, j), exact at every step
        auto num = static_cast<u128>(binom) * (sum + j);
        num /= j;
        if (num > max) {
          return max;
        }
        binom = static_cast<std::uint64_t>(num);
      }
      sum += part;
      auto prod = static_cast<u128>(total) * binom;
      if (prod > max) {
        return max;
      }
      total = static_cast<std::uint64_t>(prod);
    }
    return total;
  }

  std::optional<std::size_t> GSet::find(Word const& w) const {
    auto it = std::lower_bound(
        _carrier.begin(), _carrier.end(), w, [](Word const& a, Word const& b) {
          return std::lexicographical_compare(a.letters().begin(),
                                              a.letters().end(),
                                              b.letters().begin(),
                                              b.letters().end());
        });
    if (it == _carrier.end() || *it != w) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _carrier.begin());
  }

  std::size_t GSet::index(Word const& w) const {
    if (auto i = find(w)) {
      return *i;
    }
    throw std::invalid_argument("word " + to_string(w) + " is not in W_("
                                + to_string(_lambda) + ")");
  }

  GSet build_wlambda(PartitionLambda const& lambda, std::size_t max_carrier) {
    auto const count = multinomial(lambda);
    if (count > max_carrier) {
      throw std::length_error("|W_(" + to_string(lambda)
                              + ")| = " + std::to_string(count)
                              + " exceeds the cap "
                              + std::to_string(max_carrier));
    }
    GSet G(lambda);
    auto const& parts = lambda.parts();

    std::vector<Letter> letters;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      letters.insert(letters.end(), parts[i], Letter(i + 1));
    }
    G._carrier.reserve(count);
    do {
      G._carrier.emplace_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));

    // S_lambda: permutations sigma of {1..m} with l_i = l_(i sigma)
    std::vector<std::uint32_t> sigma(parts.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      sigma[i] = static_cast<std::uint32_t>(i + 1);
    }
    do {
      bool preserves = true;
      for (std::size_t i = 0; i < sigma.size() && preserves; ++i) {
        preserves = parts[i] == parts[sigma[i] - 1];
      }
      if (!preserves) {
        continue;
      }
      std::map<Letter, Letter> map;
      for (std::size_t i = 0; i < sigma.size(); ++i) {
        map.emplace(Letter(i + 1), Letter(sigma[i]));
      }
      LetterPermutation        pi(std::move(map));
      std::vector<std::size_t> action(G._carrier.size());
      for (std::size_t j = 0; j < G._carrier.size(); ++j) {
        action[j] = G.index(apply_permutation(G._carrier[j], pi));
      }
      G._group.push_back(std::move(pi));
      G._actions.push_back(std::move(action));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return G;
  }

  ////////////////////////////////////////////////////////////////////////
  // Congruences
  ////////////////////////////////////////////////////////////////////////

  bool is_congruence(GSet const& G, Partition const& p) {
    if (p.size() != G.size()) {
      return false;
    }
    std::vector<std::int64_t> image(p.number_of_blocks());
    for (auto const& act : G.actions()) {
      std::fill(image.begin(), image.end(), -1);
      for (std::size_t i = 0; i < p.size(); ++i) {
        auto  target = static_cast<std::int64_t>(p.block(act[i]));
        auto& img    = image[p.block(i)];
        if (img == -1) {
          img = target;
        } else if (img != target) {
          return false;
        }
      }
    }
    return true;
  }

  GCongruence GCongruence::from_partition(GSet const& G, Partition p) {
    if (!is_congruence(G, p)) {
      throw std::invalid_argument("partition is not invariant under S_("
                                  + to_string(G.lambda()) + ")");
    }
    return GCongruence(G.lambda(), std::move(p));
  }

  GCongruence GCongruence::discrete(GSet const& G) {
    return GCongruence(G.lambda(), Partition::discrete(G.size()));
  }

  GCongruence GCongruence::full(GSet const& G) {
    return GCongruence(G.lambda(), Partition::full(G.size()));
  }

  GCongruence congruence_from_pairs(
      GSet const&                            G,
      std::span<std::pair<Word, Word> const> pairs) {
    std::vector<std::pair<std::size_t, std::size_t>> index_pairs;
    for (auto const& [a, b] : pairs) {
      auto i = G.index(a), j = G.index(b);
      for (auto const& act : G.actions()) {
        index_pairs.emplace_back(act[i], act[j]);
      }
    }
    return GCongruence::from_partition(
        G, Partition::from_pairs(G.size(), index_pairs));
  }

  namespace {
    void same_gset(GCongruence const& a, GCongruence const& b) {
      if (!(a.lambda() == b.lambda())) {
        throw std::invalid_argument("congruences on different G-sets W_("
                                    + to_string(a.lambda()) + ") and W_("
                                    + to_string(b.lambda()) + ")");
      }
    }
  }  // namespace

  GCongruence join(GCongruence const& a, GCongruence const& b) {
    same_gset(a, b);
    return GCongruence(a.lambda(), join(a.partition(), b.partition()));
  }

  GCongruence meet(GCongruence const& a, GCongruence const& b) {
    same_gset(a, b);
    return GCongruence(a.lambda(), meet(a.partition(), b.partition()));
  }

  bool leq(GCongruence const& a, GCongruence const& b) {
    same_gset(a, b);
    return a.partition().refines(b.partition());
  }

  std::vector<GCongruence> enumerate_congruences_by_filter(GSet const& G) {
    std::vector<GCongruence> out;
    for_each_partition(G.size(), [&](Partition const& p) {
      if (is_congruence(G, p)) {
        out.push_back(GCongruence::from_partition(G, p));
      }
    });
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return a.partition() < b.partition();
    });
    return out;
  }

  std::vector<GCongruence> enumerate_congruences_by_closure(GSet const& G) {
    // every congruence is a join of principal congruences
    std::vector<Partition> principal;
    {
      std::set<Partition> seen;
      for (std::size_t i = 0; i < G.size(); ++i) {
        for (std::size_t j = i + 1; j < G.size(); ++j) {
          std::pair<Word, Word> const pair[] = {{G.carrier()[i],
                                                 G.carrier()[j]}};
          auto p = congruence_from_pairs(G, pair).partition();
          if (seen.insert(p).second) {
            principal.push_back(std::move(p));
          }
        }
      }
    }
    std::unordered_set<Partition> found;
    std::vector<Partition>        queue = {Partition::discrete(G.size())};
    found.insert(queue.front());
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (auto const& p : principal) {
        if (p.refines(queue[head])) {
          continue;
        }
        auto q = join(queue[head], p);
        if (found.insert(q).second) {
          queue.push_back(std::move(q));
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    std::vector<GCongruence> out;
    out.reserve(queue.size());
    for (auto& p : queue) {
      out.push_back(GCongruence::from_partition(G, std::move(p)));
    }
    return out;
  }

  std::vector<GCongruence> enumerate_congruences(GSet const&       G,
                                                 EnumerationLimits limits) {
    if (G.size() > limits.max_carrier) {
      throw std::length_error("carrier of size " + std::to_string(G.size())
                              + " exceeds the enumeration cap "
                              + std::to_string(limits.max_carrier));
    }
    return G.size() <= limits.filter_threshold
               ? enumerate_congruences_by_filter(G)
               : enumerate_congruences_by_closure(G);
  }

  ModularInstance check_modular_instance(GCongruence const& x,
                                         GCongruence const& y,
                                         GCongruence const& z) {
    auto lhs = meet(join(x, y), z).partition();
    auto rhs = join(meet(x, z), y).partition();
    return ModularInstance{lhs,
                           rhs,
                           leq(y, z),
                           lhs == rhs,
                           rhs.refines(lhs)};
  }

}  // namespace vll
