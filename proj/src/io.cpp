#include "vll/io.hpp"

#include <fstream>
#include <sstream>

namespace vll {

  namespace {
    // Strips comments and surrounding blanks.
    std::string clean(std::string line) {
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) {
        return "";
      }
      auto last = line.find_last_not_of(" \t\r");
      return line.substr(first, last - first + 1);
    }

    template <typename F>
    void for_each_line(std::istream& in, F&& f) {
      std::string line;
      std::size_t number = 0;
      while (std::getline(in, line)) {
        ++number;
        auto text = clean(line);
        if (text.empty()) {
          continue;
        }
        try {
          f(text, number);
        } catch (ParseError const&) {
          throw;
        } catch (std::exception const& e) {
          throw ParseError(number, e.what());
        }
      }
    }

    std::size_t parse_index(std::istringstream& is, std::size_t line) {
      long long k;
      if (!(is >> k) || k < 0) {
        throw ParseError(line, "expected a non-negative integer");
      }
      return static_cast<std::size_t>(k);
    }

    void expect_end(std::istringstream& is, std::size_t line) {
      std::string rest;
      if (is >> rest) {
        throw ParseError(line, "unexpected \"" + rest + "\"");
      }
    }
  }  // namespace

  std::vector<Identity> read_identities(std::istream& in) {
    std::vector<Identity> out;
    for_each_line(in, [&](std::string const& text, std::size_t) {
      out.push_back(parse_identity(text));
    });
    return out;
  }

  IdentitySystem read_identity_system(std::istream& in) {
    IdentitySystem sigma;
    bool           seen_identity = false;
    for_each_line(in, [&](std::string const& text, std::size_t line) {
      if (text.rfind("label:", 0) == 0) {
        if (seen_identity || !sigma.label.empty()) {
          throw ParseError(line, "the label must come first and only once");
        }
        sigma.label = clean(text.substr(6));
        return;
      }
      seen_identity = true;
      sigma.add(parse_identity(text));
    });
    return sigma;
  }

  FiniteSemigroup read_cayley_table(std::istream& in, std::string name) {
    std::vector<std::string> lines;
    std::vector<std::size_t> numbers;
    for_each_line(in, [&](std::string const& text, std::size_t line) {
      lines.push_back(text);
      numbers.push_back(line);
    });
    if (lines.empty()) {
      throw ParseError(1, "empty Cayley table");
    }
    std::istringstream head(lines[0]);
    auto const         n = parse_index(head, numbers[0]);
    expect_end(head, numbers[0]);
    if (n == 0) {
      throw ParseError(numbers[0], "a semigroup has at least one element");
    }
    if (lines.size() < n + 1) {
      throw ParseError(numbers.back(),
                       "expected " + std::to_string(n) + " table rows");
    }
    FiniteSemigroup::Table table(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      std::istringstream row(lines[i + 1]);
      for (std::size_t j = 0; j < n; ++j) {
        table[i][j] = parse_index(row, numbers[i + 1]);
        if (table[i][j] >= n) {
          throw ParseError(numbers[i + 1],
                           "entry " + std::to_string(table[i][j])
                               + " out of range");
        }
      }
      expect_end(row, numbers[i + 1]);
    }
    std::optional<std::size_t> declared_zero;
    for (std::size_t i = n + 1; i < lines.size(); ++i) {
      if (lines[i].rfind("zero:", 0) != 0 || declared_zero) {
        throw ParseError(numbers[i], "unexpected \"" + lines[i] + "\"");
      }
      std::istringstream is(lines[i].substr(5));
      declared_zero = parse_index(is, numbers[i]);
      expect_end(is, numbers[i]);
    }
    auto S = FiniteSemigroup::validate(std::move(table), std::move(name));
    if (declared_zero && S.zero() != declared_zero) {
      throw ParseError(numbers.back(),
                       "element " + std::to_string(*declared_zero)
                           + " is not a zero");
    }
    return S;
  }

  FiniteLattice read_lattice(std::istream& in) {
    std::optional<std::size_t>                       n;
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for_each_line(in, [&](std::string const& text, std::size_t line) {
      std::istringstream is(text);
      if (!n) {
        std::string tag;
        is >> tag;
        if (tag != "n") {
          throw ParseError(line, "expected \"n <size>\"");
        }
        n = parse_index(is, line);
        expect_end(is, line);
        return;
      }
      auto        a = parse_index(is, line);
      std::string lt;
      if (!(is >> lt) || lt != "<") {
        throw ParseError(line, "expected \"i < j\"");
      }
      auto b = parse_index(is, line);
      expect_end(is, line);
      if (a >= *n || b >= *n) {
        throw ParseError(line, "element out of range");
      }
      covers.emplace_back(a, b);
    });
    if (!n) {
      throw ParseError(1, "missing \"n <size>\" line");
    }
    return FiniteLattice::from_covers(*n, covers);
  }

  std::ifstream open_input(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw std::runtime_error("cannot open " + path);
    }
    return in;
  }

}  // namespace vll
