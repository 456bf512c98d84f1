#include "vll/lattice.hpp"

#include <algorithm>
#include <charconv>

namespace vll {

  FiniteLattice FiniteLattice::from_order(Matrix const&            leq,
                                          std::vector<std::string> labels) {
    std::size_t const n = leq.size();
    if (n == 0) {
      throw std::invalid_argument("a lattice has at least one element");
    }
    for (auto const& row : leq) {
      if (row.size() != n) {
        throw std::invalid_argument("order matrix is not square");
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (!leq[a][a]) {
        throw std::invalid_argument("order is not reflexive at "
                                    + std::to_string(a));
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b && leq[a][b] && leq[b][a]) {
          throw std::invalid_argument("order is not antisymmetric at ("
                                      + std::to_string(a) + ", "
                                      + std::to_string(b) + ")");
        }
        for (std::size_t c = 0; c < n; ++c) {
          if (leq[a][b] && leq[b][c] && !leq[a][c]) {
            throw std::invalid_argument(
                "order is not transitive at (" + std::to_string(a) + ", "
                + std::to_string(b) + ", " + std::to_string(c) + ")");
          }
        }
      }
    }
    FiniteLattice L;
    L._n = n;
    L._leq.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        L._leq[a * n + b] = leq[a][b];
      }
    }
    L._join.resize(n * n);
    L._meet.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::optional<std::size_t> lub, glb;
        for (std::size_t c = 0; c < n; ++c) {
          if (leq[a][c] && leq[b][c]) {
            bool least = true;
            for (std::size_t d = 0; d < n && least; ++d) {
              least = !(leq[a][d] && leq[b][d]) || leq[c][d];
            }
            if (least) {
              lub = c;
            }
          }
          if (leq[c][a] && leq[c][b]) {
            bool greatest = true;
            for (std::size_t d = 0; d < n && greatest; ++d) {
              greatest = !(leq[d][a] && leq[d][b]) || leq[d][c];
            }
            if (greatest) {
              glb = c;
            }
          }
        }
        if (!lub) {
          throw NotALattice("elements " + std::to_string(a) + " and "
                                + std::to_string(b)
                                + " have no least upper bound",
                            a,
                            b);
        }
        if (!glb) {
          throw NotALattice("elements " + std::to_string(a) + " and "
                                + std::to_string(b)
                                + " have no greatest lower bound",
                            a,
                            b);
        }
        L._join[a * n + b] = *lub;
        L._meet[a * n + b] = *glb;
      }
    }
    L._bottom = 0;
    L._top    = 0;
    for (std::size_t a = 1; a < n; ++a) {
      L._bottom = L.meet(L._bottom, a);
      L._top    = L.join(L._top, a);
    }
    if (labels.empty()) {
      for (std::size_t a = 0; a < n; ++a) {
        labels.push_back(std::to_string(a));
      }
    } else if (labels.size() != n) {
      throw std::invalid_argument("expected " + std::to_string(n)
                                  + " labels");
    }
    L._labels = std::move(labels);
    return L;
  }

  FiniteLattice FiniteLattice::from_covers(
      std::size_t                                             n,
      std::vector<std::pair<std::size_t, std::size_t>> const& covers,
      std::vector<std::string>                                labels) {
    Matrix leq(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a) {
      leq[a][a] = true;
    }
    for (auto [a, b] : covers) {
      if (a >= n || b >= n) {
        throw std::invalid_argument("cover " + std::to_string(a) + " < "
                                    + std::to_string(b) + " out of range");
      }
      leq[a][b] = true;
    }
    // Warshall
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t a = 0; a < n; ++a) {
        if (!leq[a][k]) {
          continue;
        }
        for (std::size_t b = 0; b < n; ++b) {
          if (leq[k][b]) {
            leq[a][b] = true;
          }
        }
      }
    }
    return from_order(leq, std::move(labels));
  }

  std::optional<std::size_t> FiniteLattice::find(std::string_view label) const {
    for (std::size_t i = 0; i < _n; ++i) {
      if (_labels[i] == label) {
        return i;
      }
    }
    return std::nullopt;
  }

  FiniteLattice::Matrix FiniteLattice::order() const {
    Matrix m(_n, std::vector<bool>(_n));
    for (std::size_t a = 0; a < _n; ++a) {
      for (std::size_t b = 0; b < _n; ++b) {
        m[a][b] = leq(a, b);
      }
    }
    return m;
  }

  ElementClassification classify_element(FiniteLattice const& L,
                                          std::size_t          x) {
    if (x >= L.size()) {
      throw std::out_of_range("element out of range");
    }
    ElementClassification c{true, true, true, true, {}, {}, {}, {}};
    for (std::size_t y = 0; y < L.size(); ++y) {
      for (std::size_t z = 0; z < L.size(); ++z) {
        if (c.modular && L.leq(y, z)
            && L.meet(L.join(x, y), z) != L.join(L.meet(x, z), y)) {
          c.modular         = false;
          c.modular_witness = LawWitness{y, z};
        }
        if (c.lower_modular && L.leq(x, y)
            && L.join(x, L.meet(y, z)) != L.meet(y, L.join(x, z))) {
          c.lower_modular         = false;
          c.lower_modular_witness = LawWitness{y, z};
        }
        if (c.upper_modular && L.leq(y, x)
            && L.join(L.meet(z, x), y) != L.meet(L.join(z, y), x)) {
          c.upper_modular         = false;
          c.upper_modular_witness = LawWitness{y, z};
        }
        if (c.distributive
            && L.join(x, L.meet(y, z))
                   != L.meet(L.join(x, y), L.join(x, z))) {
          c.distributive         = false;
          c.distributive_witness = LawWitness{y, z};
        }
      }
    }
    return c;
  }

  FiniteLattice dual(FiniteLattice const& L) {
    auto m = L.order();
    for (std::size_t a = 0; a < L.size(); ++a) {
      for (std::size_t b = 0; b < L.size(); ++b) {
        m[a][b] = L.leq(b, a);
      }
    }
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < L.size(); ++a) {
      labels.push_back(L.label(a));
    }
    return FiniteLattice::from_order(m, std::move(labels));
  }

  namespace {
    Sublattice induced(FiniteLattice const&     L,
                       std::vector<std::size_t> elements) {
      FiniteLattice::Matrix    m(elements.size(),
                              std::vector<bool>(elements.size()));
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < elements.size(); ++i) {
        labels.push_back(L.label(elements[i]));
        for (std::size_t j = 0; j < elements.size(); ++j) {
          m[i][j] = L.leq(elements[i], elements[j]);
        }
      }
      return {FiniteLattice::from_order(m, std::move(labels)),
              std::move(elements)};
    }
  }  // namespace

  Sublattice principal_coideal(FiniteLattice const& L, std::size_t a) {
    std::vector<std::size_t> up;
    for (std::size_t x = 0; x < L.size(); ++x) {
      if (L.leq(a, x)) {
        up.push_back(x);
      }
    }
    return induced(L, std::move(up));
  }

  std::optional<std::pair<std::size_t, std::size_t>> check_lower_modular_lift(
      FiniteLattice const& L) {
    std::vector<bool> lmod(L.size());
    for (std::size_t x = 0; x < L.size(); ++x) {
      lmod[x] = classify_element(L, x).lower_modular;
    }
    for (std::size_t a = 0; a < L.size(); ++a) {
      auto const up = principal_coideal(L, a);
      for (std::size_t x = 0; x < L.size(); ++x) {
        if (!lmod[x]) {
          continue;
        }
        auto target = L.join(x, a);
        auto it     = std::find(up.embedding.begin(), up.embedding.end(), target);
        auto local  = static_cast<std::size_t>(it - up.embedding.begin());
        if (!classify_element(up.lattice, local).lower_modular) {
          return std::pair{x, a};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Triple> zero_distributivity_violation(FiniteLattice const& L) {
    auto const zero = L.bottom();
    for (std::size_t x = 0; x < L.size(); ++x) {
      for (std::size_t y = 0; y < L.size(); ++y) {
        for (std::size_t z = 0; z < L.size(); ++z) {
          if (L.meet(x, z) == zero && L.meet(y, z) == zero
              && L.meet(L.join(x, y), z) != zero) {
            return Triple{x, y, z};
          }
        }
      }
    }
    return std::nullopt;
  }

  bool is_lattice_congruence(FiniteLattice const& L, Partition const& p) {
    if (p.size() != L.size()) {
      return false;
    }
    // a ~ b  ->  a v c ~ b v c  and  a ^ c ~ b ^ c; checking consecutive
    // members of each class suffices by transitivity
    for (auto const& cls : p.classes()) {
      for (std::size_t i = 1; i < cls.size(); ++i) {
        auto a = cls[0], b = cls[i];
        for (std::size_t c = 0; c < L.size(); ++c) {
          if (!p.related(L.join(a, c), L.join(b, c))
              || !p.related(L.meet(a, c), L.meet(b, c))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::vector<Partition> enumerate_lattice_congruences(FiniteLattice const& L,
                                                       std::size_t max_size) {
    if (L.size() > max_size) {
      throw std::length_error("lattice of size " + std::to_string(L.size())
                              + " exceeds the congruence enumeration cap "
                              + std::to_string(max_size));
    }
    std::vector<Partition> out;
    for_each_partition(L.size(), [&](Partition const& p) {
      if (is_lattice_congruence(L, p)) {
        out.push_back(p);
      }
    });
    return out;
  }

  Quotient quotient(FiniteLattice const& L, Partition const& theta) {
    if (!is_lattice_congruence(L, theta)) {
      throw std::invalid_argument("not a lattice congruence");
    }
    auto const            classes = theta.classes();
    std::size_t const     k       = classes.size();
    FiniteLattice::Matrix m(k, std::vector<bool>(k));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < k; ++i) {
      std::string label;
      for (auto e : classes[i]) {
        label += (label.empty() ? "" : "|") + L.label(e);
      }
      labels.push_back("[" + label + "]");
      for (std::size_t j = 0; j < k; ++j) {
        // [a] <= [b]  iff  [a v b] = [b]
        m[i][j] = theta.block(L.join(classes[i][0], classes[j][0])) == j;
      }
    }
    std::vector<std::size_t> surjection(L.size());
    for (std::size_t a = 0; a < L.size(); ++a) {
      surjection[a] = theta.block(a);
    }
    return {FiniteLattice::from_order(m, std::move(labels)),
            std::move(surjection)};
  }

  std::optional<PreservationViolation> check_upper_modular_preservation(
      FiniteLattice const& L,
      std::size_t          max_size) {
    std::vector<std::size_t> umod;
    for (std::size_t x = 0; x < L.size(); ++x) {
      if (classify_element(L, x).upper_modular) {
        umod.push_back(x);
      }
    }
    for (auto const& theta : enumerate_lattice_congruences(L, max_size)) {
      auto const q = quotient(L, theta);
      for (auto x : umod) {
        if (!classify_element(q.lattice, q.surjection[x]).upper_modular) {
          return PreservationViolation{theta, x};
        }
      }
    }
    return std::nullopt;
  }

  namespace catalog {
    FiniteLattice chain(std::size_t n) {
      if (n == 0) {
        throw std::invalid_argument("chain(0) is empty");
      }
      std::vector<std::pair<std::size_t, std::size_t>> covers;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        covers.emplace_back(i, i + 1);
      }
      return FiniteLattice::from_covers(n, covers);
    }

    FiniteLattice boolean(std::size_t n) {
      if (n > 6) {
        throw std::invalid_argument("boolean(n) is limited to n <= 6");
      }
      std::size_t const     size = std::size_t(1) << n;
      FiniteLattice::Matrix m(size, std::vector<bool>(size));
      for (std::size_t a = 0; a < size; ++a) {
        for (std::size_t b = 0; b < size; ++b) {
          m[a][b] = (a & b) == a;
        }
      }
      return FiniteLattice::from_order(m);
    }

    FiniteLattice M3() {
      return FiniteLattice::from_covers(
          5,
          {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}},
          {"0", "a", "b", "c", "1"});
    }

    FiniteLattice N5() {
      return FiniteLattice::from_covers(5,
                                        {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}},
                                        {"0", "a", "b", "c", "1"});
    }

    FiniteLattice product(FiniteLattice const& a, FiniteLattice const& b) {
      std::size_t const        n = a.size() * b.size();
      FiniteLattice::Matrix    m(n, std::vector<bool>(n));
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < n; ++i) {
        labels.push_back("(" + a.label(i / b.size()) + ","
                         + b.label(i % b.size()) + ")");
        for (std::size_t j = 0; j < n; ++j) {
          m[i][j] = a.leq(i / b.size(), j / b.size())
                    && b.leq(i % b.size(), j % b.size());
        }
      }
      return FiniteLattice::from_order(m, std::move(labels));
    }
  }  // namespace catalog

  namespace {
    class CatalogParser {
     public:
      explicit CatalogParser(std::string_view text) : _text(text) {}

      FiniteLattice parse() {
        auto L = expr();
        if (_pos != _text.size()) {
          fail();
        }
        return L;
      }

     private:
      FiniteLattice expr() {
        auto name = identifier();
        if (name == "M3") {
          return catalog::M3();
        } else if (name == "N5") {
          return catalog::N5();
        }
        expect('(');
        if (name == "chain" || name == "boolean") {
          auto n = number();
          expect(')');
          return name == "chain" ? catalog::chain(n) : catalog::boolean(n);
        } else if (name == "product") {
          auto a = expr();
          expect(',');
          auto b = expr();
          expect(')');
          return catalog::product(a, b);
        } else if (name == "dual") {
          auto a = expr();
          expect(')');
          return dual(a);
        }
        fail();
      }

      std::string_view identifier() {
        auto start = _pos;
        while (_pos < _text.size()
               && std::isalnum(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
        return _text.substr(start, _pos - start);
      }

      std::size_t number() {
        std::size_t n  = 0;
        auto [ptr, ec] = std::from_chars(
            _text.data() + _pos, _text.data() + _text.size(), n);
        if (ec != std::errc()) {
          fail();
        }
        _pos = ptr - _text.data();
        return n;
      }

      void expect(char c) {
        while (_pos < _text.size() && _text[_pos] == ' ') {
          ++_pos;
        }
        if (_pos >= _text.size() || _text[_pos] != c) {
          fail();
        }
        ++_pos;
        while (_pos < _text.size() && _text[_pos] == ' ') {
          ++_pos;
        }
      }

      [[noreturn]] void fail() const {
        throw std::invalid_argument("unknown catalog lattice \""
                                    + std::string(_text) + "\"");
      }

      std::string_view _text;
      std::size_t      _pos = 0;
    };
  }  // namespace

  FiniteLattice catalog_lattice(std::string_view name) {
    return CatalogParser(name).parse();
  }

}  // namespace vll
