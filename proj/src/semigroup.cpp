#include "sgkit/semigroup.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <string>

namespace sgkit {

  bool canonical_less(Subset const& a, Subset const& b) {
    auto ca = a.count(), cb = b.count();
    if (ca != cb) {
      return ca < cb;
    }
    auto ea = a.elements(), eb = b.elements();
    return ea < eb;
  }

  namespace {

    constexpr std::size_t exhaustive_associativity_limit = 512;

    void check_entries(std::size_t                     n,
                       std::vector<index_t> const&     table,
                       std::vector<std::string> const& labels) {
      if (n == 0) {
        throw PreconditionError("sgcore: a semigroup needs at least one "
                                "element");
      }
      if (table.size() != n * n) {
        throw PreconditionError("sgcore: Cayley table has "
                                + std::to_string(table.size())
                                + " entries, expected "
                                + std::to_string(n * n));
      }
      for (std::size_t k = 0; k < table.size(); ++k) {
        if (table[k] >= n) {
          throw PreconditionError(
              "sgcore: table entry (" + std::to_string(k / n) + ","
              + std::to_string(k % n) + ") = " + std::to_string(table[k])
              + " out of range");
        }
      }
      if (!labels.empty()) {
        if (labels.size() != n) {
          throw PreconditionError("sgcore: expected " + std::to_string(n)
                                  + " labels, got "
                                  + std::to_string(labels.size()));
        }
        std::set<std::string> seen(labels.begin(), labels.end());
        if (seen.size() != n) {
          throw PreconditionError("sgcore: labels are not pairwise distinct");
        }
      }
    }

    [[noreturn]] void associativity_failure(index_t i, index_t j, index_t k) {
      throw PreconditionError("sgcore: table is not associative at ("
                              + std::to_string(i) + "," + std::to_string(j)
                              + "," + std::to_string(k) + ")");
    }

    void check_associative_exhaustive(std::size_t                 n,
                                      std::vector<index_t> const& t) {
      for (index_t i = 0; i < n; ++i) {
        for (index_t j = 0; j < n; ++j) {
          index_t ij = t[i * n + j];
          for (index_t k = 0; k < n; ++k) {
            if (t[ij * n + k] != t[i * n + t[j * n + k]]) {
              associativity_failure(i, j, k);
            }
          }
        }
      }
    }

    // Light's test: (x a) y = x (a y) for all x, y and generators a.
    void check_associative_light(std::size_t                 n,
                                 std::vector<index_t> const& t,
                                 std::span<index_t const>    gens) {
      for (index_t a : gens) {
        for (index_t x = 0; x < n; ++x) {
          index_t xa = t[x * n + a];
          for (index_t y = 0; y < n; ++y) {
            if (t[xa * n + y] != t[x * n + t[a * n + y]]) {
              associativity_failure(x, a, y);
            }
          }
        }
      }
    }

    // Elements reachable from gens by right multiplication by gens.
    std::vector<bool> right_closure(std::size_t                 n,
                                    std::vector<index_t> const& t,
                                    std::vector<index_t> const& gens) {
      std::vector<bool>    seen(n, false);
      std::vector<index_t> queue;
      for (auto g : gens) {
        if (!seen[g]) {
          seen[g] = true;
          queue.push_back(g);
        }
      }
      for (std::size_t q = 0; q < queue.size(); ++q) {
        for (auto g : gens) {
          index_t y = t[queue[q] * n + g];
          if (!seen[y]) {
            seen[y] = true;
            queue.push_back(y);
          }
        }
      }
      return seen;
    }

    std::vector<index_t> greedy_generators(std::size_t                 n,
                                           std::vector<index_t> const& t) {
      std::vector<index_t> gens;
      std::vector<bool>    covered(n, false);
      for (index_t x = 0; x < n; ++x) {
        if (!covered[x]) {
          gens.push_back(x);
          covered = right_closure(n, t, gens);
        }
      }
      return gens;
    }

  }  // namespace

  Semigroup Semigroup::from_table(std::size_t              n,
                                  std::vector<index_t>     table,
                                  std::vector<std::string> labels) {
    check_entries(n, table, labels);
    if (n <= exhaustive_associativity_limit) {
      check_associative_exhaustive(n, table);
    } else {
      auto gens = greedy_generators(n, table);
      check_associative_light(n, table, gens);
    }
    return Semigroup(n, std::move(table), std::move(labels));
  }

  Semigroup Semigroup::from_generated_table(std::size_t              n,
                                            std::vector<index_t>     table,
                                            std::span<index_t const> gens,
                                            std::vector<std::string> labels) {
    check_entries(n, table, labels);
    std::vector<index_t> g(gens.begin(), gens.end());
    for (auto x : g) {
      if (x >= n) {
        throw PreconditionError("sgcore: generator index out of range");
      }
    }
    auto reach = right_closure(n, table, g);
    if (std::find(reach.begin(), reach.end(), false) != reach.end()) {
      throw PreconditionError("sgcore: generators do not generate the table");
    }
    check_associative_light(n, table, gens);
    return Semigroup(n, std::move(table), std::move(labels));
  }

  std::string Semigroup::label(index_t i) const {
    return labels_.empty() ? std::to_string(i) : labels_[i];
  }

  index_t Semigroup::product(std::span<index_t const> factors) const {
    if (factors.empty()) {
      throw PreconditionError("sgcore: empty product in a semigroup");
    }
    index_t acc = factors[0];
    for (std::size_t k = 1; k < factors.size(); ++k) {
      acc = product(acc, factors[k]);
    }
    return acc;
  }

  Semigroup Semigroup::with_labels(std::vector<std::string> labels) const {
    check_entries(n_, table_, labels);
    return Semigroup(n_, table_, std::move(labels));
  }

  ////////////////////////////////////////////////////////////////////////
  // SgHom / FreeHom
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::pair<index_t, index_t>> SgHom::hom_violation() const {
    if (map.size() != dom.size()) {
      return std::pair<index_t, index_t>{0, 0};
    }
    for (index_t x : map) {
      if (x >= cod.size()) {
        return std::pair<index_t, index_t>{0, 0};
      }
    }
    for (index_t x = 0; x < dom.size(); ++x) {
      for (index_t y = 0; y < dom.size(); ++y) {
        if (map[dom.product(x, y)] != cod.product(map[x], map[y])) {
          return std::pair{x, y};
        }
      }
    }
    return std::nullopt;
  }

  bool SgHom::is_injective() const {
    std::vector<index_t> m = map;
    std::sort(m.begin(), m.end());
    return std::adjacent_find(m.begin(), m.end()) == m.end();
  }

  bool SgHom::is_surjective() const {
    std::vector<bool> hit(cod.size(), false);
    for (auto x : map) {
      if (x < cod.size()) {
        hit[x] = true;
      }
    }
    return std::find(hit.begin(), hit.end(), false) == hit.end();
  }

  index_t FreeHom::operator()(std::span<letter_t const> word) const {
    if (word.empty()) {
      throw PreconditionError("sgcore: free-semigroup homomorphism applied "
                              "to the empty word");
    }
    index_t acc = gen_map.at(word[0]);
    for (std::size_t k = 1; k < word.size(); ++k) {
      acc = cod.product(acc, gen_map.at(word[k]));
    }
    return acc;
  }

  ////////////////////////////////////////////////////////////////////////
  // Closure helpers
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct VectorHash {
      std::size_t operator()(std::vector<index_t> const& v) const noexcept {
        std::size_t h = v.size();
        for (auto x : v) {
          h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
      }
    };
  }  // namespace

  Closure<std::vector<index_t>>
  transformation_closure(std::vector<std::vector<index_t>> const& gens,
                         std::size_t                              cap) {
    if (gens.empty()) {
      throw PreconditionError("sgcore: no transformations given");
    }
    std::size_t const degree = gens[0].size();
    for (auto const& g : gens) {
      if (g.size() != degree) {
        throw PreconditionError("sgcore: transformations of different "
                                "degrees");
      }
      for (auto x : g) {
        if (x >= degree) {
          throw PreconditionError("sgcore: transformation image "
                                  + std::to_string(x) + " out of range");
        }
      }
    }
    auto compose = [](std::vector<index_t> const& x,
                      std::vector<index_t> const& y) {
      std::vector<index_t> z(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        z[i] = y[x[i]];
      }
      return z;
    };
    return closure(gens, compose, cap, VectorHash{});
  }

  ////////////////////////////////////////////////////////////////////////
  // Element-level properties
  ////////////////////////////////////////////////////////////////////////

  bool is_idempotent(Semigroup const& s, index_t x) {
    return s.product(x, x) == x;
  }

  std::pair<std::size_t, std::size_t> index_period(Semigroup const& s,
                                                   index_t          x) {
    // position[p] = exponent at which p first appears
    std::vector<std::size_t> position(s.size(), 0);
    index_t                  p = x;
    for (std::size_t k = 1;; ++k) {
      if (position[p] != 0) {
        return {position[p], k - position[p]};
      }
      position[p] = k;
      p           = s.product(p, x);
    }
  }

  index_t idempotent_power(Semigroup const& s, index_t x) {
    index_t p = x;
    while (!is_idempotent(s, p)) {
      p = s.product(p, x);
    }
    return p;
  }

  bool is_aperiodic(Semigroup const& s) {
    for (index_t x = 0; x < s.size(); ++x) {
      index_t e = idempotent_power(s, x);
      if (s.product(e, x) != e) {
        return false;
      }
    }
    return true;
  }

  bool is_commutative(Semigroup const& s) {
    for (index_t x = 0; x < s.size(); ++x) {
      for (index_t y = x + 1; y < s.size(); ++y) {
        if (s.product(x, y) != s.product(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_band(Semigroup const& s) {
    for (index_t x = 0; x < s.size(); ++x) {
      if (!is_idempotent(s, x)) {
        return false;
      }
    }
    return true;
  }

  bool is_semilattice(Semigroup const& s) {
    return is_band(s) && is_commutative(s);
  }

  std::optional<index_t> identity_of(Semigroup const& s) {
    for (index_t e = 0; e < s.size(); ++e) {
      bool ok = true;
      for (index_t x = 0; x < s.size() && ok; ++x) {
        ok = s.product(e, x) == x && s.product(x, e) == x;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  std::optional<index_t> zero_of(Semigroup const& s) {
    for (index_t z = 0; z < s.size(); ++z) {
      bool ok = true;
      for (index_t x = 0; x < s.size() && ok; ++x) {
        ok = s.product(z, x) == z && s.product(x, z) == z;
      }
      if (ok) {
        return z;
      }
    }
    return std::nullopt;
  }

  bool is_monoid(Semigroup const& s) {
    return identity_of(s).has_value();
  }

  bool is_group(Semigroup const& s) {
    auto e = identity_of(s);
    if (!e) {
      return false;
    }
    for (index_t x = 0; x < s.size(); ++x) {
      auto row = s.row(x);
      if (std::find(row.begin(), row.end(), *e) == row.end()) {
        return false;
      }
    }
    return true;
  }

  bool is_right_simple(Semigroup const& s) {
    for (index_t x = 0; x < s.size(); ++x) {
      std::vector<bool> hit(s.size(), false);
      for (auto y : s.row(x)) {
        hit[y] = true;
      }
      if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
        return false;
      }
    }
    return true;
  }

  std::optional<index_t> cyclic_generator(Semigroup const& s) {
    for (index_t x = 0; x < s.size(); ++x) {
      auto [m, r] = index_period(s, x);
      if (m + r - 1 == s.size()) {
        return x;
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subsets and subsemigroups
  ////////////////////////////////////////////////////////////////////////

  Subset generated_subset(Semigroup const& s, Subset const& gens) {
    auto g    = gens.elements();
    auto seen = right_closure(s.size(), s.table(), g);
    Subset out(s.size());
    for (index_t x = 0; x < s.size(); ++x) {
      if (seen[x]) {
        out.insert(x);
      }
    }
    return out;
  }

  bool is_closed(Semigroup const& s, Subset const& sub) {
    bool ok = true;
    sub.for_each([&](index_t x) {
      sub.for_each([&](index_t y) {
        if (!sub.contains(s.product(x, y))) {
          ok = false;
        }
      });
    });
    return ok;
  }

  Subsemigroup subsemigroup(Semigroup const& s, Subset const& sub) {
    if (sub.universe() != s.size()) {
      throw PreconditionError("sgcore: subset belongs to another semigroup");
    }
    if (sub.empty()) {
      throw PreconditionError("sgcore: empty subsemigroup");
    }
    if (!is_closed(s, sub)) {
      throw PreconditionError("sgcore: subset is not closed under the "
                              "product");
    }
    auto                 to_parent = sub.elements();
    std::vector<index_t> local(s.size(), 0);
    for (index_t k = 0; k < to_parent.size(); ++k) {
      local[to_parent[k]] = k;
    }
    std::size_t const        m = to_parent.size();
    std::vector<index_t>     table(m * m);
    std::vector<std::string> labels;
    for (index_t i = 0; i < m; ++i) {
      for (index_t j = 0; j < m; ++j) {
        table[i * m + j] = local[s.product(to_parent[i], to_parent[j])];
      }
      if (s.has_labels()) {
        labels.push_back(s.labels()[to_parent[i]]);
      }
    }
    return {Semigroup::from_table(m, std::move(table), std::move(labels)),
            std::move(to_parent)};
  }

  Subset minimal_ideal(Semigroup const& s) {
    std::size_t const n = s.size();
    Subset            best(n);
    std::size_t       best_count = n + 1;
    for (index_t x = 0; x < n; ++x) {
      // S^1 x S^1
      Subset ideal(n);
      ideal.insert(x);
      for (index_t a = 0; a < n; ++a) {
        index_t ax = s.product(a, x);
        ideal.insert(ax);
        ideal.insert(s.product(x, a));
        for (index_t b = 0; b < n; ++b) {
          ideal.insert(s.product(ax, b));
        }
      }
      auto c = ideal.count();
      if (c < best_count) {
        best_count = c;
        best       = std::move(ideal);
      }
    }
    return best;
  }

  Subsemigroup local_group(Semigroup const& s, index_t e) {
    if (e >= s.size() || !is_idempotent(s, e)) {
      throw PreconditionError("sgcore: local_group needs an idempotent");
    }
    Subset ses(s.size());
    for (index_t x = 0; x < s.size(); ++x) {
      ses.insert(s.product(s.product(e, x), e));
    }
    auto sub = subsemigroup(s, ses);
    if (!is_group(sub.semigroup)) {
      throw PreconditionError("sgcore: eSe is not a group; the idempotent "
                              + s.label(e)
                              + " does not lie in the minimal ideal");
    }
    return sub;
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  PointedSemigroup adjoin(Semigroup const& s, Adjoined kind) {
    std::size_t const    n = s.size(), m = n + 1;
    std::vector<index_t> table(m * m);
    for (index_t i = 0; i < m; ++i) {
      for (index_t j = 0; j < m; ++j) {
        index_t v;
        if (i == 0 || j == 0) {
          if (kind == Adjoined::Zero) {
            v = 0;
          } else {
            v = (i == 0) ? j : i;
          }
        } else {
          v = s.product(i - 1, j - 1) + 1;
        }
        table[i * m + j] = v;
      }
    }
    std::vector<std::string> labels;
    if (s.has_labels()) {
      std::string name = kind == Adjoined::Zero ? "0" : "I";
      while (std::find(s.labels().begin(), s.labels().end(), name)
             != s.labels().end()) {
        name += "'";
      }
      labels.push_back(name);
      labels.insert(labels.end(), s.labels().begin(), s.labels().end());
    }
    return {Semigroup::from_table(m, std::move(table), std::move(labels)),
            kind};
  }

  Semigroup opposite(Semigroup const& s) {
    std::size_t const    n = s.size();
    std::vector<index_t> table(n * n);
    for (index_t i = 0; i < n; ++i) {
      for (index_t j = 0; j < n; ++j) {
        table[i * n + j] = s.product(j, i);
      }
    }
    return Semigroup::from_table(n, std::move(table), s.labels());
  }

  Semigroup direct_product(Semigroup const& a, Semigroup const& b) {
    std::size_t const        na = a.size(), nb = b.size(), n = na * nb;
    std::vector<index_t>     table(n * n);
    std::vector<std::string> labels;
    for (index_t x = 0; x < n; ++x) {
      for (index_t y = 0; y < n; ++y) {
        table[x * n + y] = a.product(x / nb, y / nb) * nb
                           + b.product(x % nb, y % nb);
      }
      labels.push_back("(" + a.label(x / nb) + "," + b.label(x % nb) + ")");
    }
    return Semigroup::from_table(n, std::move(table), std::move(labels));
  }

  SgHom zero_adjunction_witness(Semigroup const& t) {
    // U1 = {1, 0} with 1 the identity.
    auto u1 = Semigroup::from_table(2, {0, 1, 1, 1}, {"1", "0"});
    auto prod = direct_product(t, u1);
    auto t0   = adjoin(t, Adjoined::Zero).base;
    std::vector<index_t> map(prod.size());
    for (index_t x = 0; x < prod.size(); ++x) {
      index_t tx = x / 2, ux = x % 2;
      map[x]     = ux == 0 ? PointedSemigroup::lift(tx)
                           : PointedSemigroup::adjoined;
    }
    SgHom h{std::move(prod), std::move(t0), std::move(map)};
    if (!h.is_hom() || !h.is_surjective()) {
      throw VerificationError("sgcore: T x U1 -> T^0 is not a surjective "
                              "homomorphism");
    }
    return h;
  }

  std::string table_id(Semigroup const& s) {
    std::uint64_t h = 1469598103934665603ULL;
    auto          mix = [&h](std::uint64_t v) {
      for (int b = 0; b < 4; ++b) {
        h ^= (v >> (8 * b)) & 0xff;
        h *= 1099511628211ULL;
      }
    };
    mix(s.size());
    for (auto x : s.table()) {
      mix(x);
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%08x",
                  static_cast<unsigned>((h >> 32) ^ h));
    return "n" + std::to_string(s.size()) + ":" + buf;
  }

}  // namespace sgkit
