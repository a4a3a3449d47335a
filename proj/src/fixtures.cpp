#include "sgkit/fixtures.hpp"

#include <algorithm>

namespace sgkit::fixtures {

  namespace {

    template <class F>
    Semigroup tabulate(std::size_t n, F&& f, std::vector<std::string> labels) {
      std::vector<index_t> table(n * n);
      for (index_t i = 0; i < n; ++i) {
        for (index_t j = 0; j < n; ++j) {
          table[i * n + j] = static_cast<index_t>(f(i, j));
        }
      }
      return Semigroup::from_table(n, std::move(table), std::move(labels));
    }

    std::vector<std::string> letters(std::size_t n) {
      std::vector<std::string> out;
      for (std::size_t k = 0; k < n; ++k) {
        out.emplace_back(1, static_cast<char>('a' + k));
      }
      return out;
    }

  }  // namespace

  Semigroup trivial() {
    return tabulate(1, [](index_t, index_t) { return 0; }, {"e"});
  }

  Semigroup u1() {
    return tabulate(
        2, [](index_t i, index_t j) { return std::max(i, j); }, {"1", "0"});
  }

  Semigroup chain(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < n; ++k) {
      labels.push_back(std::to_string(k));
    }
    return tabulate(
        n, [](index_t i, index_t j) { return std::min(i, j); }, labels);
  }

  Semigroup left_zero(std::size_t n) {
    return tabulate(n, [](index_t i, index_t) { return i; }, letters(n));
  }

  Semigroup right_zero(std::size_t n) {
    return tabulate(n, [](index_t, index_t j) { return j; }, letters(n));
  }

  Semigroup cyclic_group(std::size_t n) {
    std::vector<std::string> labels{"e"};
    for (std::size_t k = 1; k < n; ++k) {
      labels.push_back(k == 1 ? "g" : "g" + std::to_string(k));
    }
    return tabulate(
        n, [n](index_t i, index_t j) { return (i + j) % n; }, labels);
  }

  Semigroup klein4() {
    return tabulate(
        4, [](index_t i, index_t j) { return i ^ j; }, {"e", "a", "b", "c"});
  }

  Semigroup monogenic(std::size_t m, std::size_t r) {
    std::size_t const        n = m + r - 1;
    std::vector<std::string> labels;
    for (std::size_t k = 1; k <= n; ++k) {
      labels.push_back(k == 1 ? "x" : "x" + std::to_string(k));
    }
    // Exponent arithmetic: k >= m reduces modulo r into [m, m + r).
    auto reduce = [m, r](std::size_t k) {
      return k < m ? k : m + (k - m) % r;
    };
    return tabulate(
        n,
        [&](index_t i, index_t j) { return reduce(i + 1 + j + 1) - 1; },
        labels);
  }

  Semigroup full_transformations2() {
    // Maps [f(0) f(1)] composed left to right: id, sw, c0, c1.
    std::vector<std::vector<index_t>> maps{{0, 1}, {1, 0}, {0, 0}, {1, 1}};
    auto find = [&](std::vector<index_t> const& m) {
      return std::find(maps.begin(), maps.end(), m) - maps.begin();
    };
    return tabulate(
        4,
        [&](index_t i, index_t j) {
          std::vector<index_t> comp{maps[j][maps[i][0]], maps[j][maps[i][1]]};
          return find(comp);
        },
        {"id", "sw", "c0", "c1"});
  }

  Semigroup null3() {
    return tabulate(3, [](index_t, index_t) { return 2; }, {"a", "b", "z"});
  }

  std::vector<Named> corpus() {
    return {
        {"trivial", trivial()},
        {"U1", u1()},
        {"chain2", chain(2)},
        {"chain3", chain(3)},
        {"LZ2", left_zero(2)},
        {"RZ2", right_zero(2)},
        {"Z2", cyclic_group(2)},
        {"Z3", cyclic_group(3)},
        {"Z4", cyclic_group(4)},
        {"K4", klein4()},
        {"C21", monogenic(2, 1)},
        {"C22", monogenic(2, 2)},
        {"C32", monogenic(3, 2)},
        {"T2", full_transformations2()},
        {"null3", null3()},
    };
  }

}  // namespace sgkit::fixtures
