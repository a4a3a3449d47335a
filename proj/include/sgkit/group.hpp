#ifndef SGKIT_GROUP_HPP_
#define SGKIT_GROUP_HPP_

#include <vector>

#include "sgkit/construct.hpp"
#include "sgkit/semigroup.hpp"

namespace sgkit {

  // Group utilities at desk scale.  Searches are exhaustive; every entry
  // point rejects groups larger than `cap`.

  // All distinct <g>, in order of the least generating element.
  std::vector<Subset> cyclic_subgroups(Semigroup const& g, index_t identity);

  // All subgroups, ordered by size then canonically.
  std::vector<Subset> subgroups(Semigroup const& g,
                                std::size_t      cap = Limits{}.group);

  bool is_normal(Semigroup const& g, Subset const& n);
  std::vector<Subset> normal_subgroups(Semigroup const& g,
                                       std::size_t      cap = Limits{}.group);
  // Nontrivial and without proper nontrivial normal subgroups.
  bool is_simple_group(Semigroup const& g, std::size_t cap = Limits{}.group);

  struct Quotient {
    Semigroup            group;
    std::vector<index_t> coset_of;        // element -> coset index
    std::vector<index_t> representative;  // least element of each coset
  };
  Quotient quotient_group(Semigroup const& g, Subset const& n);

  struct CompositionSeries {
    std::vector<Subset>    chain;    // G = G_0 > G_1 > ... > {e}, in G
    std::vector<Semigroup> factors;  // G_i / G_(i+1), each simple
  };
  CompositionSeries composition_factors(Semigroup const& g,
                                        std::size_t cap = Limits{}.group);

  // Kaloujnine-Krasner embedding of G into N wr (G/N) with transversal
  // given by least coset elements; verified injective homomorphism into
  // the full tabulated wreath product.
  struct KrasnerEmbedding {
    Subsemigroup     normal;
    Quotient         quotient;
    WreathArithmetic arithmetic;
    SgHom            hom;
  };
  KrasnerEmbedding kk_embed(Semigroup const& g,
                            Subset const&    n,
                            std::size_t      cap = Limits{}.wreath);

  bool are_isomorphic_groups(Semigroup const& a, Semigroup const& b);

  // Whether group h divides semigroup s: h is a quotient of a subgroup of
  // some maximal subgroup of s.
  bool group_divides(Semigroup const& h,
                     Semigroup const& s,
                     std::size_t      cap = Limits{}.group);

}  // namespace sgkit

#endif  // SGKIT_GROUP_HPP_
