#include "vll/word.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace vll {

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word::Word(std::vector<Letter> letters) : _letters(std::move(letters)) {
    if (_letters.empty()) {
      throw std::invalid_argument("the empty word is not a semigroup word");
    }
  }

  namespace {
    std::vector<Letter> to_letters(std::initializer_list<std::uint32_t> il) {
      std::vector<Letter> out;
      out.reserve(il.size());
      for (auto i : il) {
        out.emplace_back(i);
      }
      return out;
    }
  }  // namespace

  Word::Word(std::initializer_list<std::uint32_t> indices)
      : Word(to_letters(indices)) {}

  Word Word::factor(std::size_t pos, std::size_t len) const {
    if (len == 0 || pos + len > _letters.size()) {
      throw std::out_of_range("factor out of range");
    }
    return Word(std::vector<Letter>(_letters.begin() + pos,
                                    _letters.begin() + pos + len));
  }

  Word Word::operator+(Word const& other) const {
    std::vector<Letter> out(_letters);
    out.insert(out.end(), other._letters.begin(), other._letters.end());
    return Word(std::move(out));
  }

  Word Word::power(std::size_t k) const {
    if (k == 0) {
      throw std::invalid_argument("zeroth power is the empty word");
    }
    std::vector<Letter> out;
    out.reserve(_letters.size() * k);
    for (std::size_t i = 0; i < k; ++i) {
      out.insert(out.end(), _letters.begin(), _letters.end());
    }
    return Word(std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////
  // Substitution
  ////////////////////////////////////////////////////////////////////////

  void Substitution::set(Letter x, Word image) {
    _map.insert_or_assign(x, std::move(image));
  }

  Word Substitution::image(Letter x) const {
    auto it = _map.find(x);
    return it == _map.end() ? Word({x}) : it->second;
  }

  Substitution Substitution::then(Substitution const& t) const {
    Substitution out;
    for (auto const& [x, img] : _map) {
      out.set(x, apply_substitution(img, t));
    }
    for (auto const& [x, img] : t._map) {
      if (_map.count(x) == 0) {
        out.set(x, img);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // LetterPermutation
  ////////////////////////////////////////////////////////////////////////

  LetterPermutation::LetterPermutation(std::map<Letter, Letter> map)
      : _map(std::move(map)) {
    std::set<Letter> image;
    for (auto const& [x, y] : _map) {
      if (_map.count(y) == 0) {
        throw std::invalid_argument("permutation maps " + to_string(x)
                                    + " outside its domain");
      }
      if (!image.insert(y).second) {
        throw std::invalid_argument("permutation is not injective at "
                                    + to_string(y));
      }
    }
  }

  LetterPermutation LetterPermutation::identity(std::set<Letter> const& dom) {
    std::map<Letter, Letter> m;
    for (auto x : dom) {
      m.emplace(x, x);
    }
    return LetterPermutation(std::move(m));
  }

  LetterPermutation LetterPermutation::swap(Letter a, Letter b) {
    return LetterPermutation({{a, b}, {b, a}});
  }

  Letter LetterPermutation::operator()(Letter x) const {
    auto it = _map.find(x);
    if (it == _map.end()) {
      throw std::out_of_range("letter " + to_string(x)
                              + " is outside the permutation domain");
    }
    return it->second;
  }

  ////////////////////////////////////////////////////////////////////////
  // Invariants
  ////////////////////////////////////////////////////////////////////////

  std::set<Letter> content(Word const& w) {
    return std::set<Letter>(w.letters().begin(), w.letters().end());
  }

  std::size_t occurrences(Word const& w, Letter x) {
    return std::count(w.letters().begin(), w.letters().end(), x);
  }

  Letter first_letter(Word const& w) {
    return w.first();
  }

  Letter last_letter(Word const& w) {
    return w.last();
  }

  Word apply_substitution(Word const& w, Substitution const& s) {
    std::vector<Letter> out;
    out.reserve(w.length());
    for (auto x : w.letters()) {
      auto it = s.support().find(x);
      if (it == s.support().end()) {
        out.push_back(x);
      } else {
        auto img = it->second.letters();
        out.insert(out.end(), img.begin(), img.end());
      }
    }
    return Word(std::move(out));
  }

  Word apply_permutation(Word const& w, LetterPermutation const& pi) {
    std::vector<Letter> out;
    out.reserve(w.length());
    for (auto x : w.letters()) {
      out.push_back(pi.in_domain(x) ? pi(x) : x);
    }
    return Word(std::move(out));
  }

  LetterCounts partition_of(Word const& w) {
    LetterCounts out;
    for (auto x : w.letters()) {
      ++out.per_letter[x];
    }
    for (auto const& [x, n] : out.per_letter) {
      out.sorted.push_back(n);
    }
    std::sort(out.sorted.begin(), out.sorted.end(), std::greater<>());
    return out;
  }

  bool is_balanced(Word const& u, Word const& v) {
    return u.length() == v.length()
           && partition_of(u).per_letter == partition_of(v).per_letter;
  }

  ////////////////////////////////////////////////////////////////////////
  // Pattern instances
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Backtracking matcher: pattern letters are renumbered 0..k-1 and bound
    // to (start, length) ranges of the subject word.
    class InstanceSearch {
     public:
      InstanceSearch(Word const& w, Word const& pattern)
          : _w(w.letters()), _slots(pattern.length()) {
        std::map<Letter, std::size_t> ids;
        for (std::size_t i = 0; i < pattern.length(); ++i) {
          auto [it, fresh] = ids.emplace(pattern[i], ids.size());
          _slots[i]        = it->second;
        }
        _letters.resize(ids.size(), Letter(1));
        for (auto const& [x, id] : ids) {
          _letters[id] = x;
        }
        _bound.assign(ids.size(), {0, 0});
      }

      std::optional<InstanceMatch> run() {
        for (std::size_t start = 0; start < _w.size(); ++start) {
          if (extend(0, start)) {
            InstanceMatch m{start, _end - start, {}};
            for (std::size_t id = 0; id < _letters.size(); ++id) {
              auto [b, len] = _bound[id];
              m.substitution.set(
                  _letters[id],
                  Word(std::vector<Letter>(_w.begin() + b,
                                           _w.begin() + b + len)));
            }
            return m;
          }
        }
        return std::nullopt;
      }

     private:
      bool extend(std::size_t k, std::size_t pos) {
        if (k == _slots.size()) {
          _end = pos;
          return true;
        }
        // every remaining pattern letter consumes at least one letter
        if (_w.size() - pos < _slots.size() - k) {
          return false;
        }
        auto  id      = _slots[k];
        auto& binding = _bound[id];
        if (binding.second != 0) {
          auto [b, len] = binding;
          if (pos + len > _w.size()
              || !std::equal(_w.begin() + b,
                             _w.begin() + b + len,
                             _w.begin() + pos)) {
            return false;
          }
          return extend(k + 1, pos + len);
        }
        std::size_t max_len = _w.size() - pos - (_slots.size() - k - 1);
        for (std::size_t len = 1; len <= max_len; ++len) {
          binding = {pos, len};
          if (extend(k + 1, pos + len)) {
            return true;
          }
        }
        binding = {0, 0};
        return false;
      }

      std::span<Letter const>                          _w;
      std::vector<std::size_t>                         _slots;
      std::vector<Letter>                              _letters;
      std::vector<std::pair<std::size_t, std::size_t>> _bound;
      std::size_t                                      _end = 0;
    };

    void check_limits(Word const& w, Word const& p, InstanceLimits lim) {
      if (p.length() > lim.max_pattern_length) {
        throw std::length_error("pattern length " + std::to_string(p.length())
                                + " exceeds the limit "
                                + std::to_string(lim.max_pattern_length));
      }
      if (w.length() > lim.max_word_length) {
        throw std::length_error("word length " + std::to_string(w.length())
                                + " exceeds the limit "
                                + std::to_string(lim.max_word_length));
      }
    }
  }  // namespace

  std::optional<InstanceMatch> find_instance(Word const&    w,
                                             Word const&    pattern,
                                             InstanceLimits limits) {
    check_limits(w, pattern, limits);
    if (pattern.length() > w.length()) {
      return std::nullopt;
    }
    return InstanceSearch(w, pattern).run();
  }

  bool contains_instance(Word const&    w,
                         Word const&    pattern,
                         InstanceLimits limits) {
    return find_instance(w, pattern, limits).has_value();
  }

  bool matches_at(Word const&         w,
                  std::size_t         pos,
                  Word const&         pattern,
                  Substitution const& s) {
    auto img = apply_substitution(pattern, s);
    return pos + img.length() <= w.length()
           && std::equal(img.letters().begin(),
                         img.letters().end(),
                         w.letters().begin() + pos);
  }

  ////////////////////////////////////////////////////////////////////////
  // Text syntax
  ////////////////////////////////////////////////////////////////////////

  Word parse_word(std::string_view text) {
    std::vector<Letter> out;
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (c >= 'a' && c <= 'z') {
        out.emplace_back(static_cast<std::uint32_t>(c - 'a' + 1));
      } else if (c == '[') {
        auto close = text.find(']', i);
        if (close == std::string_view::npos) {
          throw std::invalid_argument("unterminated letter index in \""
                                      + std::string(text) + "\"");
        }
        std::uint32_t k     = 0;
        auto          first = text.data() + i + 1;
        auto          last  = text.data() + close;
        auto [ptr, ec]      = std::from_chars(first, last, k);
        if (ec != std::errc() || ptr != last || k == 0) {
          throw std::invalid_argument("bad letter index in \""
                                      + std::string(text) + "\"");
        }
        out.emplace_back(k);
        i = close;
      } else {
        throw std::invalid_argument(std::string("unexpected character '") + c
                                    + "' in word \"" + std::string(text)
                                    + "\"");
      }
    }
    if (out.empty()) {
      throw std::invalid_argument("empty word");
    }
    return Word(std::move(out));
  }

  std::string to_string(Letter x) {
    if (x.index() <= 26) {
      return std::string(1, static_cast<char>('a' + x.index() - 1));
    }
    return "[" + std::to_string(x.index()) + "]";
  }

  std::string to_string(Word const& w) {
    std::string out;
    for (auto x : w.letters()) {
      out += to_string(x);
    }
    return out;
  }

  std::vector<Word> all_words(std::size_t max_length, std::uint32_t k) {
    std::vector<Word> out;
    if (k == 0) {
      return out;
    }
    for (std::size_t len = 1; len <= max_length; ++len) {
      std::vector<std::uint32_t> digits(len, 1);
      while (true) {
        std::vector<Letter> letters;
        letters.reserve(len);
        for (auto d : digits) {
          letters.emplace_back(d);
        }
        out.emplace_back(std::move(letters));
        std::size_t i = len;
        while (i > 0 && digits[i - 1] == k) {
          digits[--i] = 1;
        }
        if (i == 0) {
          break;
        }
        ++digits[i - 1];
      }
    }
    return out;
  }

}  // namespace vll
