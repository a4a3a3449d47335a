#ifndef SGKIT_SEMIGROUP_HPP_
#define SGKIT_SEMIGROUP_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sgkit/error.hpp"
#include "sgkit/subset.hpp"
#include "sgkit/types.hpp"

namespace sgkit {

  // A finite semigroup given by its Cayley table.  Instances are immutable
  // and always associative: every factory validates the table.
  class Semigroup {
   public:
    // Validates index ranges, label uniqueness and associativity.  Small
    // tables are checked exhaustively; large ones by Light's test against a
    // greedily computed generating set.
    static Semigroup from_table(std::size_t              n,
                                std::vector<index_t>     table,
                                std::vector<std::string> labels = {});

    // As from_table, but associativity is checked by Light's test with the
    // given generators, which must generate the table by right
    // multiplication.
    static Semigroup from_generated_table(std::size_t                n,
                                          std::vector<index_t>       table,
                                          std::span<index_t const>   gens,
                                          std::vector<std::string>   labels
                                          = {});

    std::size_t size() const noexcept {
      return n_;
    }

    index_t product(index_t i, index_t j) const noexcept {
      return table_[i * n_ + j];
    }

    std::span<index_t const> row(index_t i) const noexcept {
      return {table_.data() + i * n_, n_};
    }

    std::vector<index_t> const& table() const noexcept {
      return table_;
    }

    bool has_labels() const noexcept {
      return !labels_.empty();
    }

    std::vector<std::string> const& labels() const noexcept {
      return labels_;
    }

    // The label of i, or its decimal index when unlabelled.
    std::string label(index_t i) const;

    // Product of a nonempty sequence of elements, left to right.
    index_t product(std::span<index_t const> factors) const;

    Semigroup with_labels(std::vector<std::string> labels) const;

    friend bool operator==(Semigroup const&, Semigroup const&) = default;

   private:
    Semigroup(std::size_t              n,
              std::vector<index_t>     table,
              std::vector<std::string> labels)
        : n_(n), table_(std::move(table)), labels_(std::move(labels)) {}

    std::size_t              n_ = 0;
    std::vector<index_t>     table_;
    std::vector<std::string> labels_;
  };

  // Homomorphism between finite semigroups, stored as an element map.
  struct SgHom {
    Semigroup            dom;
    Semigroup            cod;
    std::vector<index_t> map;

    // First pair (x, y) with map(xy) != map(x)map(y), if any.
    std::optional<std::pair<index_t, index_t>> hom_violation() const;
    bool is_hom() const {
      return !hom_violation().has_value();
    }
    bool is_injective() const;
    bool is_surjective() const;
  };

  // Homomorphism from a free semigroup A+, given on the generators.
  struct FreeHom {
    std::vector<std::string> alphabet;
    Semigroup                cod;
    std::vector<index_t>     gen_map;

    // Image of a nonempty word.
    index_t operator()(std::span<letter_t const> word) const;
  };

  enum class Adjoined { Identity, Zero };

  // A semigroup with an adjoined identity or zero at index 0; the element
  // with index i in the original semigroup has index i + 1.
  struct PointedSemigroup {
    Semigroup base;
    Adjoined  kind;

    static constexpr index_t adjoined = 0;
    static index_t           lift(index_t i) noexcept {
      return i + 1;
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Closure
  ////////////////////////////////////////////////////////////////////////

  template <class T>
  struct Closure {
    std::vector<T>       elements;
    Semigroup            semigroup;
    std::vector<index_t> gen_indices;  // element index of each generator
    std::vector<index_t> parent;       // left factor; self for generators
    std::vector<index_t> last;         // generator completing the word
  };

  // Shortest word over the generators that evaluates to element i.
  template <class T>
  Word word_of(Closure<T> const& c, index_t i) {
    Word w;
    while (true) {
      w.push_back(c.last[i]);
      if (c.parent[i] == i) {
        break;
      }
      i = c.parent[i];
    }
    return Word(w.rbegin(), w.rend());
  }

  // The subsemigroup generated by `gens` under `product`, with its Cayley
  // table.  Elements are ordered breadth-first by word length; within a
  // length, by the index of the last generator, then by the index of the
  // left factor.  `product` must be associative on the closure; this is
  // confirmed by Light's test on the resulting table.
  template <class T, class Product, class Hash = std::hash<T>>
  Closure<T> closure(std::vector<T> const& gens,
                     Product&&             product,
                     std::size_t           cap,
                     Hash                  hash = Hash{}) {
    if (gens.empty()) {
      throw PreconditionError("sgcore: closure needs at least one generator");
    }
    std::vector<T>                        elements;
    std::vector<index_t>                  parent, last;
    std::unordered_map<T, index_t, Hash>  index(64, hash);
    std::vector<index_t>                  gen_indices;
    std::size_t const                     k = gens.size();

    auto add = [&](T value, index_t par, index_t gen, bool is_gen) {
      auto it = index.find(value);
      if (it != index.end()) {
        return std::pair{it->second, false};
      }
      if (elements.size() >= cap) {
        throw ResourceError("sgcore: closure exceeds size cap "
                            + std::to_string(cap));
      }
      index_t id = static_cast<index_t>(elements.size());
      index.emplace(value, id);
      elements.push_back(std::move(value));
      parent.push_back(is_gen ? id : par);
      last.push_back(gen);
      return std::pair{id, true};
    };

    for (index_t g = 0; g < k; ++g) {
      gen_indices.push_back(add(gens[g], 0, g, true).first);
    }
    // right[x * k + g] = x * gens[g]
    std::vector<index_t> right;
    std::size_t          level_begin = 0, level_end = elements.size();
    while (level_begin < level_end) {
      right.resize(level_end * k);
      for (index_t g = 0; g < k; ++g) {
        for (std::size_t x = level_begin; x < level_end; ++x) {
          T y                  = product(elements[x], gens[g]);
          right[x * k + g] = add(std::move(y), static_cast<index_t>(x), g,
                                 false).first;
        }
      }
      level_begin = level_end;
      level_end   = elements.size();
    }

    std::size_t const    n = elements.size();
    std::vector<index_t> table(n * n);
    for (index_t j = 0; j < n; ++j) {
      bool const is_gen = parent[j] == j;
      for (index_t i = 0; i < n; ++i) {
        index_t left = is_gen ? i : table[i * n + parent[j]];
        table[i * n + j] = right[left * k + last[j]];
      }
    }
    std::vector<index_t> unique_gens = gen_indices;
    std::sort(unique_gens.begin(), unique_gens.end());
    unique_gens.erase(std::unique(unique_gens.begin(), unique_gens.end()),
                      unique_gens.end());
    return Closure<T>{std::move(elements),
                      Semigroup::from_generated_table(n, std::move(table),
                                                      unique_gens),
                      std::move(gen_indices),
                      std::move(parent),
                      std::move(last)};
  }

  // Closure of transformations of {0, ..., degree-1} under composition,
  // where the product xy applies x first.
  Closure<std::vector<index_t>>
  transformation_closure(std::vector<std::vector<index_t>> const& gens,
                         std::size_t                              cap);

  ////////////////////////////////////////////////////////////////////////
  // Element-level properties
  ////////////////////////////////////////////////////////////////////////

  bool    is_idempotent(Semigroup const& s, index_t x);
  index_t idempotent_power(Semigroup const& s, index_t x);
  // Index m >= 1 and period r >= 1 of x: x^(m+r) = x^m, both minimal.
  std::pair<std::size_t, std::size_t> index_period(Semigroup const& s,
                                                   index_t          x);

  bool                   is_aperiodic(Semigroup const& s);
  bool                   is_commutative(Semigroup const& s);
  bool                   is_band(Semigroup const& s);
  bool                   is_semilattice(Semigroup const& s);
  std::optional<index_t> identity_of(Semigroup const& s);
  std::optional<index_t> zero_of(Semigroup const& s);
  bool                   is_monoid(Semigroup const& s);
  bool                   is_group(Semigroup const& s);
  // xS = S for every x.
  bool is_right_simple(Semigroup const& s);
  // Least element generating s as a monogenic semigroup, if any.
  std::optional<index_t> cyclic_generator(Semigroup const& s);

  ////////////////////////////////////////////////////////////////////////
  // Subsets and subsemigroups
  ////////////////////////////////////////////////////////////////////////

  // Left-to-right product closure of gens inside s.
  Subset generated_subset(Semigroup const& s, Subset const& gens);
  bool   is_closed(Semigroup const& s, Subset const& sub);

  struct Subsemigroup {
    Semigroup            semigroup;
    std::vector<index_t> to_parent;  // increasing
  };

  // Induced semigroup on a closed subset; labels are inherited.
  Subsemigroup subsemigroup(Semigroup const& s, Subset const& sub);

  // Least two-sided ideal.
  Subset minimal_ideal(Semigroup const& s);

  // eSe for an idempotent e of the minimal ideal, verified to be a group
  // with identity e.
  Subsemigroup local_group(Semigroup const& s, index_t e);

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  PointedSemigroup adjoin(Semigroup const& s, Adjoined kind);
  Semigroup        opposite(Semigroup const& s);
  // Pairs (a, b) at index a * |B| + b.
  Semigroup direct_product(Semigroup const& a, Semigroup const& b);

  // Surjection T x U1 -> T^0, (t, 1) -> t and (t, 0) -> 0, verified.
  SgHom zero_adjunction_witness(Semigroup const& t);

  // Short identifier of a semigroup's table for reports: "n<size>:<hash>".
  std::string table_id(Semigroup const& s);

}  // namespace sgkit

#endif  // SGKIT_SEMIGROUP_HPP_
