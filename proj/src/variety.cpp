#include "vll/variety.hpp"

#include <algorithm>
#include <charconv>

namespace vll {

  VarietyId VarietyId::C(std::size_t m) {
    if (m == 0) {
      return trivial();
    }
    if (m == 1) {
      return semilattices();
    }
    VarietyId v(Kind::C);
    v._m = m;
    return v;
  }

  VarietyId VarietyId::zero_reduced(std::vector<Word> patterns) {
    if (patterns.empty()) {
      throw std::invalid_argument("a 0-reduced variety needs >= 1 pattern");
    }
    std::sort(patterns.begin(), patterns.end());
    patterns.erase(std::unique(patterns.begin(), patterns.end()),
                   patterns.end());
    VarietyId v(Kind::ZeroReduced);
    v._patterns = std::move(patterns);
    return v;
  }

  VarietyId parse_variety(std::string_view name) {
    if (name == "T") {
      return VarietyId::trivial();
    } else if (name == "SL") {
      return VarietyId::semilattices();
    } else if (name == "LZ") {
      return VarietyId::left_zero();
    } else if (name == "RZ") {
      return VarietyId::right_zero();
    } else if (name == "COM") {
      return VarietyId::commutative();
    } else if (name == "P") {
      return VarietyId::P();
    } else if (name == "Prev") {
      return VarietyId::P_dual();
    } else if (name.size() > 1 && name[0] == 'C') {
      auto digits = name.substr(1);
      if (digits.front() == '(' && digits.back() == ')') {
        digits = digits.substr(1, digits.size() - 2);
      }
      std::size_t m  = 0;
      auto [ptr, ec] = std::from_chars(
          digits.data(), digits.data() + digits.size(), m);
      if (ec == std::errc() && ptr == digits.data() + digits.size()) {
        return VarietyId::C(m);
      }
    }
    throw std::invalid_argument("unknown variety \"" + std::string(name)
                                + "\"");
  }

  std::string to_string(VarietyId const& v) {
    using K = VarietyId::Kind;
    switch (v.kind()) {
      case K::T:
        return "T";
      case K::SL:
        return "SL";
      case K::LZ:
        return "LZ";
      case K::RZ:
        return "RZ";
      case K::COM:
        return "COM";
      case K::C:
        return "C" + std::to_string(v.m());
      case K::P:
        return "P";
      case K::Prev:
        return "Prev";
      case K::ZeroReduced: {
        std::string out = "ZR{";
        for (std::size_t i = 0; i < v.patterns().size(); ++i) {
          out += (i ? "," : "") + to_string(v.patterns()[i]);
        }
        return out + "}";
      }
    }
    return "?";
  }

  std::string to_string(Clause c) {
    switch (c) {
      case Clause::always:
        return "always";
      case Clause::literal_equality:
        return "literal equality";
      case Clause::content_equal:
        return "contents agree";
      case Clause::content_differs:
        return "contents differ";
      case Clause::counts_differ:
        return "letter counts differ";
      case Clause::counts_agree:
        return "letter counts agree";
      case Clause::multiplicities_agree:
        return "multiplicities agree up to the threshold";
      case Clause::multiplicity_mismatch:
        return "a letter has unequal multiplicities below the threshold";
      case Clause::last_letters_agree:
        return "last letters agree";
      case Clause::last_letters_differ:
        return "last letters differ";
      case Clause::first_letters_agree:
        return "first letters agree";
      case Clause::first_letters_differ:
        return "first letters differ";
      case Clause::edge_letters_repeated:
        return "edge letters occur more than once on both sides";
      case Clause::edge_letters_simple_and_equal:
        return "edge letters occur once and coincide";
      case Clause::edge_letter_mismatch:
        return "edge letter condition fails";
      case Clause::both_sides_contain_instances:
        return "both sides contain a pattern instance";
      case Clause::side_without_instance:
        return "a side contains no pattern instance";
      case Clause::contains_instance:
        return "contains a pattern instance";
      case Clause::no_instance:
        return "contains no pattern instance";
    }
    return "?";
  }

  namespace {

    // c(u) = c(v); on failure, the first letter in the symmetric difference.
    std::optional<Letter> content_mismatch(Word const& u, Word const& v) {
      auto cu = content(u), cv = content(v);
      for (auto x : cu) {
        if (!cv.count(x)) {
          return x;
        }
      }
      for (auto x : cv) {
        if (!cu.count(x)) {
          return x;
        }
      }
      return std::nullopt;
    }

    CheckResult check_C(std::size_t m, Word const& u, Word const& v) {
      auto cu = partition_of(u).per_letter;
      auto cv = partition_of(v).per_letter;
      if (auto x = content_mismatch(u, v)) {
        return {false, Clause::content_differs, x};
      }
      for (auto const& [x, n] : cu) {
        auto k = cv.at(x);
        if (n != k && (n < m || k < m)) {
          return {false, Clause::multiplicity_mismatch, x};
        }
      }
      return {true, Clause::multiplicities_agree, std::nullopt};
    }

    // Criterion for P; `edge` picks the last (P) or first (dual)
    // letter.
    template <typename Edge>
    CheckResult check_P(Word const& u, Word const& v, Edge edge) {
      if (auto x = content_mismatch(u, v)) {
        return {false, Clause::content_differs, x};
      }
      auto tu = edge(u), tv = edge(v);
      auto nu = occurrences(u, tu), nv = occurrences(v, tv);
      if (nu > 1 && nv > 1) {
        return {true, Clause::edge_letters_repeated, std::nullopt};
      }
      if (nu == 1 && nv == 1 && tu == tv) {
        return {true, Clause::edge_letters_simple_and_equal, tu};
      }
      return {false, Clause::edge_letter_mismatch, tu};
    }

    bool has_instance(Word const& w, std::vector<Word> const& patterns) {
      return std::any_of(patterns.begin(), patterns.end(), [&](auto const& p) {
        return contains_instance(w, p);
      });
    }

  }  // namespace

  CheckResult holds(VarietyId const& var, Identity const& id) {
    using K = VarietyId::Kind;
    if (id.is_zero()) {
      if (var.kind() != K::ZeroReduced) {
        throw UnsupportedQuery("zero identities are only decided for 0-reduced "
                               "varieties, not "
                               + to_string(var));
      }
      return has_instance(id.lhs(), var.patterns())
                 ? CheckResult{true, Clause::contains_instance, std::nullopt}
                 : CheckResult{false, Clause::no_instance, std::nullopt};
    }
    auto const& u = id.lhs();
    auto const& v = id.rhs();
    switch (var.kind()) {
      case K::T:
        return {true, Clause::always, std::nullopt};
      case K::SL:
        if (auto x = content_mismatch(u, v)) {
          return {false, Clause::content_differs, x};
        }
        return {true, Clause::content_equal, std::nullopt};
      case K::COM: {
        auto cu = partition_of(u).per_letter;
        auto cv = partition_of(v).per_letter;
        for (auto const& [x, n] : cu) {
          auto it = cv.find(x);
          if (it == cv.end() || it->second != n) {
            return {false, Clause::counts_differ, x};
          }
        }
        for (auto const& [x, n] : cv) {
          if (!cu.count(x)) {
            return {false, Clause::counts_differ, x};
          }
        }
        return {true, Clause::counts_agree, std::nullopt};
      }
      case K::RZ:
        if (u.last() == v.last()) {
          return {true, Clause::last_letters_agree, u.last()};
        }
        return {false, Clause::last_letters_differ, u.last()};
      case K::LZ:
        if (u.first() == v.first()) {
          return {true, Clause::first_letters_agree, u.first()};
        }
        return {false, Clause::first_letters_differ, u.first()};
      case K::C:
        return check_C(var.m(), u, v);
      case K::P:
        return check_P(u, v, [](Word const& w) { return w.last(); });
      case K::Prev:
        return check_P(u, v, [](Word const& w) { return w.first(); });
      case K::ZeroReduced:
        if (u == v) {
          return {true, Clause::literal_equality, std::nullopt};
        }
        if (has_instance(u, var.patterns()) && has_instance(v, var.patterns())) {
          return {true, Clause::both_sides_contain_instances, std::nullopt};
        }
        return {false, Clause::side_without_instance, std::nullopt};
    }
    throw std::logic_error("unreachable");
  }

  bool holds_in_join(std::span<VarietyId const> vs, Identity const& id) {
    return std::all_of(vs.begin(), vs.end(), [&](VarietyId const& v) {
      return holds(v, id).holds;
    });
  }

  ScanResult join_contains_P_scan(std::size_t   max_len,
                                  std::uint32_t max_letters) {
    if (max_len == 0 || max_letters == 0) {
      throw std::invalid_argument("scan bounds must be >= 1");
    }
    VarietyId const join[] = {VarietyId::C(2), VarietyId::right_zero()};
    auto const      P      = VarietyId::P();
    auto const      words  = all_words(max_len, max_letters);
    ScanResult      result{true, std::nullopt, 0};
    for (auto const& u : words) {
      for (auto const& v : words) {
        auto id = Identity::equation(u, v);
        ++result.identities_checked;
        if (holds_in_join(join, id) && !holds(P, id).holds) {
          result.ok             = false;
          result.counterexample = id;
          return result;
        }
      }
    }
    return result;
  }

}  // namespace vll
