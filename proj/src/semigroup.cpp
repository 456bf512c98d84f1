#include "vll/semigroup.hpp"

#include <algorithm>
#include <charconv>

namespace vll {

  NotAssociative::NotAssociative(std::size_t a_, std::size_t b_, std::size_t c_)
      : std::invalid_argument("table is not associative at ("
                              + std::to_string(a_) + ", " + std::to_string(b_)
                              + ", " + std::to_string(c_) + ")"),
        a(a_),
        b(b_),
        c(c_) {}

  FiniteSemigroup FiniteSemigroup::validate(Table table, std::string name) {
    std::size_t const n = table.size();
    if (n == 0) {
      throw std::invalid_argument("a semigroup has at least one element");
    }
    FiniteSemigroup S;
    S._order = n;
    S._name  = std::move(name);
    S._table.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) {
        throw std::invalid_argument("row " + std::to_string(i) + " has "
                                    + std::to_string(table[i].size())
                                    + " entries, expected "
                                    + std::to_string(n));
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (table[i][j] >= n) {
          throw std::invalid_argument(
              "entry (" + std::to_string(i) + ", " + std::to_string(j)
              + ") = " + std::to_string(table[i][j]) + " is out of range");
        }
        S._table.push_back(table[i][j]);
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto ab = S.product(a, b);
        for (std::size_t c = 0; c < n; ++c) {
          if (S.product(ab, c) != S.product(a, S.product(b, c))) {
            throw NotAssociative(a, b, c);
          }
        }
      }
    }
    for (std::size_t z = 0; z < n && !S._zero; ++z) {
      bool absorbing = true;
      for (std::size_t x = 0; x < n && absorbing; ++x) {
        absorbing = S.product(z, x) == z && S.product(x, z) == z;
      }
      if (absorbing) {
        S._zero = z;
      }
    }
    return S;
  }

  FiniteSemigroup::Table FiniteSemigroup::table() const {
    Table out(_order, std::vector<std::size_t>(_order));
    for (std::size_t i = 0; i < _order; ++i) {
      for (std::size_t j = 0; j < _order; ++j) {
        out[i][j] = product(i, j);
      }
    }
    return out;
  }

  std::size_t FiniteSemigroup::evaluate(Word const& w,
                                        Assignment const& a) const {
    auto        letters = w.letters();
    std::size_t value   = a.at(letters[0]);
    for (std::size_t i = 1; i < letters.size(); ++i) {
      value = product(value, a.at(letters[i]));
    }
    return value;
  }

  Satisfaction satisfies(FiniteSemigroup const& S, Identity const& id) {
    auto const          letters = id.letters();
    std::vector<Letter> vars(letters.begin(), letters.end());
    std::vector<std::size_t> values(vars.size(), 0);
    Assignment               a;
    if (id.is_zero() && !S.zero()) {
      // without a zero element no value of w is zero
      for (auto x : vars) {
        a.emplace(x, 0);
      }
      return {false, a};
    }
    while (true) {
      for (std::size_t i = 0; i < vars.size(); ++i) {
        a.insert_or_assign(vars[i], values[i]);
      }
      auto lhs = S.evaluate(id.lhs(), a);
      auto rhs = id.is_zero() ? *S.zero() : S.evaluate(id.rhs(), a);
      if (lhs != rhs) {
        return {false, a};
      }
      // odometer, first letter most significant
      std::size_t i = vars.size();
      while (i > 0 && values[i - 1] + 1 == S.order()) {
        values[--i] = 0;
      }
      if (i == 0) {
        return {true, std::nullopt};
      }
      ++values[i - 1];
    }
  }

  FiniteSemigroup direct_product(FiniteSemigroup const& S,
                                 FiniteSemigroup const& T) {
    std::size_t const      m = T.order();
    FiniteSemigroup::Table table(S.order() * m,
                                 std::vector<std::size_t>(S.order() * m));
    for (std::size_t a = 0; a < S.order() * m; ++a) {
      for (std::size_t b = 0; b < S.order() * m; ++b) {
        table[a][b] = S.product(a / m, b / m) * m + T.product(a % m, b % m);
      }
    }
    return FiniteSemigroup::validate(std::move(table),
                                     S.name() + "x" + T.name());
  }

  namespace builtin {
    FiniteSemigroup left_zero2() {
      return FiniteSemigroup::validate({{0, 0}, {1, 1}}, "LZ2");
    }

    FiniteSemigroup right_zero2() {
      return FiniteSemigroup::validate({{0, 1}, {0, 1}}, "RZ2");
    }

    FiniteSemigroup semilattice2() {
      return FiniteSemigroup::validate({{0, 0}, {0, 1}}, "SL2");
    }

    FiniteSemigroup cyclic_group(std::size_t r) {
      if (r == 0) {
        throw std::invalid_argument("Z_r needs r >= 1");
      }
      FiniteSemigroup::Table t(r, std::vector<std::size_t>(r));
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
          t[i][j] = (i + j) % r;
        }
      }
      return FiniteSemigroup::validate(std::move(t), "Z" + std::to_string(r));
    }

    FiniteSemigroup cyclic_monoid(std::size_t m) {
      FiniteSemigroup::Table t(m + 1, std::vector<std::size_t>(m + 1));
      for (std::size_t i = 0; i <= m; ++i) {
        for (std::size_t j = 0; j <= m; ++j) {
          t[i][j] = std::min(i + j, m);
        }
      }
      return FiniteSemigroup::validate(
          std::move(t), "CyclicMonoid(" + std::to_string(m) + ")");
    }

    FiniteSemigroup nil2() {
      return FiniteSemigroup::validate({{0, 0}, {0, 0}}, "NilN2");
    }
  }  // namespace builtin

  namespace {
    std::optional<std::size_t> parse_arg(std::string_view name,
                                         std::string_view prefix,
                                         bool             parens) {
      if (name.substr(0, prefix.size()) != prefix) {
        return std::nullopt;
      }
      auto rest = name.substr(prefix.size());
      if (parens) {
        if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')') {
          return std::nullopt;
        }
        rest = rest.substr(1, rest.size() - 2);
      }
      std::size_t k  = 0;
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
      if (rest.empty() || ec != std::errc() || ptr != rest.data() + rest.size()) {
        return std::nullopt;
      }
      return k;
    }
  }  // namespace

  FiniteSemigroup builtin_semigroup(std::string_view name) {
    if (name == "LZ2") {
      return builtin::left_zero2();
    } else if (name == "RZ2") {
      return builtin::right_zero2();
    } else if (name == "SL2") {
      return builtin::semilattice2();
    } else if (name == "NilN2") {
      return builtin::nil2();
    } else if (auto r = parse_arg(name, "Zr", true)) {
      return builtin::cyclic_group(*r);
    } else if (auto m = parse_arg(name, "CyclicMonoid", true)) {
      return builtin::cyclic_monoid(*m);
    } else if (auto m2 = parse_arg(name, "CM", false)) {
      return builtin::cyclic_monoid(*m2);
    } else if (auto r2 = parse_arg(name, "Z", false)) {
      return builtin::cyclic_group(*r2);
    }
    throw std::invalid_argument("unknown builtin semigroup \""
                                + std::string(name) + "\"");
  }

  std::string to_string(Assignment const& a) {
    std::string out;
    for (auto const& [x, v] : a) {
      out += (out.empty() ? "" : ", ") + to_string(x) + "=" + std::to_string(v);
    }
    return out;
  }

}  // namespace vll
