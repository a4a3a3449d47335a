#ifndef SGKIT_KRD_HPP_
#define SGKIT_KRD_HPP_

#include <optional>
#include <string>
#include <vector>

#include "sgkit/division.hpp"
#include "sgkit/merge.hpp"
#include "sgkit/semigroup.hpp"

namespace sgkit {

  enum class NodeKind { Semilattice, SimpleGroup, Wreath, Triple, Dual };

  char const* to_string(NodeKind k) noexcept;

  // Certificate tree.  Every node carries a division of its target into
  // the node's construction:
  //   Semilattice, SimpleGroup: the identity division.
  //   Wreath {fiber, top}: host is a subsemigroup of fiber.target wr
  //     top.target, its elements listed by code in wreath_codes.
  //   Triple {right, mid, left}: host is the generated part of the merge
  //     semigroup built from merge_input, whose T2, T0, T1 are the
  //     children's targets.
  //   Dual {child}: child decomposes opposite(target); host is the opposite
  //     of the child's host.
  struct DecompTree {
    NodeKind                  kind;
    Semigroup                 target;
    DivisionWitness           witness;
    std::size_t               depth = 0;
    std::vector<DecompTree>   children;
    std::vector<std::size_t>  wreath_codes;
    std::optional<MergeInput> merge_input;
    std::string               note;
  };

  // Irredundant generating set: all elements, dropping from the last to
  // the first any element generated by the others that remain.
  std::vector<index_t> minimal_generating_set(Semigroup const& s);

  DecompTree kr_decompose(Semigroup const& s, Limits const& limits = {});
  DecompTree decompose_group(Semigroup const& g, Limits const& limits = {});
  // s must be monogenic.
  DecompTree decompose_cyclic(Semigroup const& s, Limits const& limits = {});

  // Blind search for a division of a monogenic semigroup with index m and
  // period r into M wr C (M the threshold monoid used by decompose_cyclic),
  // trying at most `budget` wreath elements as generators.  For
  // cross-checking the constructive encoding at tiny sizes.
  std::optional<DivisionWitness> search_cyclic_division(Semigroup const& s,
                                                        std::size_t budget
                                                        = 10'000);

  struct NodeReport {
    std::string path;  // "0", "0.1", ...
    NodeKind    kind;
    std::string target_id;
    std::size_t depth;
    std::string status;  // "ok" or the first failure
  };

  struct TreeReport {
    bool                     ok = true;
    std::vector<NodeReport>  nodes;  // preorder
    std::size_t              semilattice_leaves = 0;
    std::size_t              group_leaves       = 0;
    std::vector<std::string> group_leaf_ids;
    std::size_t              height = 0;
    std::size_t              depth  = 0;
  };

  TreeReport verify_tree(DecompTree const& t, Limits const& limits = {});

  // One line per node in preorder, children indented by two spaces.
  std::string format_certificate(DecompTree const& t, TreeReport const& r);

}  // namespace sgkit

#endif  // SGKIT_KRD_HPP_
