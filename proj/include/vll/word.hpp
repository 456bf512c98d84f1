// Words over the free semigroup on a countable alphabet x1, x2, ...

#ifndef VLL_WORD_HPP_
#define VLL_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vll {

  //! A letter x_i of the alphabet, identified by its index i >= 1.
  class Letter {
   public:
    constexpr explicit Letter(std::uint32_t index) : _index(checked(index)) {}

    constexpr std::uint32_t index() const noexcept {
      return _index;
    }

    constexpr auto operator<=>(Letter const&) const = default;

   private:
    static constexpr std::uint32_t checked(std::uint32_t i) {
      if (i == 0) {
        throw std::invalid_argument("letter index must be >= 1");
      }
      return i;
    }

    std::uint32_t _index;
  };

  //! A non-empty finite sequence of letters.
  //!
  //! The empty word is not representable: every constructor rejects it.
  class Word {
   public:
    explicit Word(std::vector<Letter> letters);
    Word(std::initializer_list<std::uint32_t> indices);

    std::size_t length() const noexcept {
      return _letters.size();
    }

    std::span<Letter const> letters() const noexcept {
      return _letters;
    }

    Letter operator[](std::size_t i) const {
      return _letters[i];
    }

    Letter first() const noexcept {
      return _letters.front();
    }

    Letter last() const noexcept {
      return _letters.back();
    }

    //! Letters [pos, pos + len), which must be non-empty.
    Word factor(std::size_t pos, std::size_t len) const;

    Word operator+(Word const& other) const;
    Word power(std::size_t k) const;

    auto operator<=>(Word const&) const = default;
    bool operator==(Word const&) const  = default;

   private:
    std::vector<Letter> _letters;
  };

  //! Letter-by-letter replacement; letters outside the support map to
  //! themselves.
  class Substitution {
   public:
    Substitution() = default;

    void set(Letter x, Word image);
    Word image(Letter x) const;

    std::map<Letter, Word> const& support() const noexcept {
      return _map;
    }

    //! (t * s)(w) = t(s(w))
    Substitution then(Substitution const& t) const;

    bool operator==(Substitution const&) const = default;

   private:
    std::map<Letter, Word> _map;
  };

  //! A bijection on a finite set of letters.
  class LetterPermutation {
   public:
    LetterPermutation() = default;
    //! Throws std::invalid_argument unless the map is a bijection of its
    //! domain onto itself.
    explicit LetterPermutation(std::map<Letter, Letter> map);

    static LetterPermutation identity(std::set<Letter> const& domain);
    static LetterPermutation swap(Letter a, Letter b);

    bool in_domain(Letter x) const {
      return _map.count(x) != 0;
    }
    //! Throws std::out_of_range if x is outside the domain.
    Letter operator()(Letter x) const;

    std::map<Letter, Letter> const& map() const noexcept {
      return _map;
    }

   private:
    std::map<Letter, Letter> _map;
  };

  //! Letter multiplicities of a word.
  struct LetterCounts {
    //! Multiplicities sorted non-increasingly.
    std::vector<std::size_t>        sorted;
    std::map<Letter, std::size_t>   per_letter;

    bool operator==(LetterCounts const&) const = default;
  };

  //! Limits for the pattern-instance search.
  struct InstanceLimits {
    std::size_t max_pattern_length = 8;
    std::size_t max_word_length    = 24;
  };

  std::set<Letter> content(Word const& w);
  std::size_t      occurrences(Word const& w, Letter x);
  Letter           first_letter(Word const& w);
  Letter           last_letter(Word const& w);
  Word             apply_substitution(Word const& w, Substitution const& s);
  //! Letters outside the domain of pi are fixed.
  Word         apply_permutation(Word const& w, LetterPermutation const& pi);
  LetterCounts partition_of(Word const& w);
  bool         is_balanced(Word const& u, Word const& v);

  //! True iff some factor of w equals s(pattern) for a substitution s with
  //! non-empty images. Throws std::length_error when the inputs exceed the
  //! limits.
  bool contains_instance(Word const&    w,
                         Word const&    pattern,
                         InstanceLimits limits = {});

  //! Position and substitution of the leftmost instance, if any.
  struct InstanceMatch {
    std::size_t  position;
    std::size_t  length;
    Substitution substitution;
  };
  std::optional<InstanceMatch> find_instance(Word const&    w,
                                             Word const&    pattern,
                                             InstanceLimits limits = {});

  //! Does s(pattern) occur in w starting at position pos?
  bool matches_at(Word const&         w,
                  std::size_t         pos,
                  Word const&         pattern,
                  Substitution const& s);

  // Text syntax: 'a'..'z' are x1..x26; "[k]" is x_k for any k >= 1.
  Word        parse_word(std::string_view text);
  std::string to_string(Word const& w);
  std::string to_string(Letter x);

  //! All words of length 1..max_length over the letters x1..x_k, shortlex
  //! ordered.
  std::vector<Word> all_words(std::size_t max_length, std::uint32_t k);

}  // namespace vll

template <>
struct std::hash<vll::Word> {
  std::size_t operator()(vll::Word const& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : w.letters()) {
      h ^= x.index();
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

#endif  // VLL_WORD_HPP_
