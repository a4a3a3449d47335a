#ifndef SGKIT_PSAT_HPP_
#define SGKIT_PSAT_HPP_

#include <string>
#include <vector>

#include "sgkit/semigroup.hpp"

namespace sgkit {

  // Arithmetic in the power semigroup 2^S.  Subsets must have universe |S|;
  // the empty set is never produced by the operations below.

  Subset subset_product(Semigroup const& s, Subset const& x, Subset const& y);
  // X^n for n >= 1.
  Subset subset_power(Semigroup const& s, Subset const& x, std::size_t n);
  // The idempotent power X^w of X in 2^S.
  Subset omega_power(Semigroup const& s, Subset const& x);
  // X^(w+*) = union over n >= 0 of X^w X^n.
  Subset omega_star(Semigroup const& s, Subset const& x);

  // A family of nonempty subsets in canonical order (by size, then by the
  // increasing element lists), without duplicates.
  using Family = std::vector<Subset>;

  Family normalize(std::vector<Subset> members);
  bool   family_contains(Family const& f, Subset const& x);
  Family singletons(Semigroup const& s);
  // All nonempty subsets of members.
  Family downward_closure(Semigroup const&   s,
                          Family const&      f,
                          std::size_t        cap = Limits{}.family);

  enum class Rule { Seed, Product, OmegaStar, Down };

  // How member `result` was first obtained: Product(a, b) is
  // members[a] * members[b], OmegaStar(a) is members[a]^(w+*), Down(a) is a
  // subset of members[a].  Operands always precede the result.
  struct Derivation {
    Rule    rule;
    index_t a = 0;
    index_t b = 0;
  };

  struct Saturation {
    std::vector<Subset>     members;  // discovery order
    std::vector<Derivation> trace;    // parallel to members
    Family                  family;   // canonical order
  };

  // Least family containing f that is closed under products, nonempty
  // subsets and X -> X^(w+*).  The result is re-checked with is_saturated.
  Saturation saturate(Semigroup const&           s,
                      std::vector<Subset> const& f,
                      std::size_t                cap = Limits{}.family);

  // The same closure without the subset rule.  Products and X^(w+*) are
  // monotone, so saturate(s, f) is the downward closure of this family.
  Saturation saturate_upward(Semigroup const&           s,
                             std::vector<Subset> const& f,
                             std::size_t                cap = Limits{}.family);

  bool is_saturated(Semigroup const& s, Family const& f);

  // Re-derives every member from the seeds; empty string when valid,
  // otherwise a description of the first bad step.
  std::string replay(Semigroup const&           s,
                     std::vector<Subset> const& seeds,
                     Saturation const&          sat);

  Family henckell_pointlikes(Semigroup const& s,
                             std::size_t      cap = Limits{}.family);

  // Union of a subgroup G of 2^S, derived as the product of the unions of
  // its cyclic subgroups, each obtained as X^(w+*) of a generator.
  struct SubgroupUnion {
    bool                ok = false;
    Subset              union_of_group;
    std::vector<Subset> generators;      // one per cyclic subgroup
    std::vector<Subset> cyclic_unions;   // omega_star of each generator
    Subset              product;         // product of cyclic_unions
    std::string         detail;
  };

  // Throws PreconditionError unless g is a group under subset product.
  SubgroupUnion subgroup_union_check(Semigroup const&           s,
                                     std::vector<Subset> const& g);

  // "{e,g}" using the labels of s.
  std::string format_subset(Semigroup const& s, Subset const& x);
  // One subset per line, in the given order.
  std::string format_family(Semigroup const& s, Family const& f);

}  // namespace sgkit

#endif  // SGKIT_PSAT_HPP_
