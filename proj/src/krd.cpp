#include "sgkit/krd.hpp"

#include <algorithm>

#include "sgkit/fixtures.hpp"
#include "sgkit/group.hpp"

namespace sgkit {

  char const* to_string(NodeKind k) noexcept {
    switch (k) {
      case NodeKind::Semilattice:
        return "semilattice";
      case NodeKind::SimpleGroup:
        return "group";
      case NodeKind::Wreath:
        return "wreath";
      case NodeKind::Triple:
        return "triple";
      case NodeKind::Dual:
        return "dual";
    }
    return "?";
  }

  std::vector<index_t> minimal_generating_set(Semigroup const& s) {
    Subset current = Subset::full(s.size());
    for (index_t x = static_cast<index_t>(s.size()); x-- > 0;) {
      Subset rest = current;
      rest.erase(x);
      if (!rest.empty() && generated_subset(s, rest).contains(x)) {
        current = std::move(rest);
      }
    }
    return current.elements();
  }

  namespace {

    DecompTree leaf(NodeKind kind, Semigroup const& s, std::string note = {}) {
      return {kind,
              s,
              identity_witness(s),
              kind == NodeKind::Semilattice ? std::size_t(1) : std::size_t(0),
              {},
              {},
              std::nullopt,
              std::move(note)};
    }

    // Checks everything about a node that does not involve its ancestors;
    // `root`, when given, is used for the group-leaf divisibility check.
    std::string node_status(DecompTree const& t,
                            Semigroup const*  root,
                            Limits const&     limits) {
      if (auto c = is_division_witness(t.target, t.witness); !c) {
        return to_string(c.reason);
      }
      auto const& ch = t.children;
      switch (t.kind) {
        case NodeKind::Semilattice:
          if (!ch.empty() || !is_semilattice(t.target)) {
            return "NotSemilattice";
          }
          if (t.depth != 1) {
            return "DepthMismatch";
          }
          break;
        case NodeKind::SimpleGroup:
          if (!ch.empty() || !is_simple_group(t.target, limits.group)) {
            return "NotSimpleGroup";
          }
          if (root != nullptr && !group_divides(t.target, *root, limits.group)) {
            return "NotDivisor";
          }
          if (t.depth != 0) {
            return "DepthMismatch";
          }
          break;
        case NodeKind::Wreath: {
          if (ch.size() != 2 || !is_monoid(ch[0].target)
              || t.wreath_codes.size() != t.witness.host.size()) {
            return "BadLink";
          }
          WreathArithmetic arith(ch[0].target, ch[1].target);
          auto const       order = arith.order();
          std::vector<WreathArithmetic::Element> els;
          for (auto c : t.wreath_codes) {
            if (order && c >= *order) {
              return "BadLink";
            }
            els.push_back(arith.decode(c));
          }
          auto const& host = t.witness.host;
          for (index_t i = 0; i < host.size(); ++i) {
            for (index_t j = 0; j < host.size(); ++j) {
              if (arith.multiply(els[i], els[j]) != els[host.product(i, j)]) {
                return "BadLink";
              }
            }
          }
          if (t.depth != ch[0].depth + ch[1].depth) {
            return "DepthMismatch";
          }
          break;
        }
        case NodeKind::Triple: {
          if (ch.size() != 3 || !t.merge_input) {
            return "BadLink";
          }
          auto const& in = *t.merge_input;
          if (!(in.t2 == ch[0].target) || !(in.t0 == ch[1].target)
              || !(in.t1 == ch[2].target)) {
            return "BadLink";
          }
          auto rebuilt = build_merge(in, limits.closure);
          if (!(rebuilt.generated.semigroup.table() == t.witness.host.table())) {
            return "BadLink";
          }
          if (t.depth
              != ch[1].depth + std::max(ch[0].depth, ch[2].depth) + 1) {
            return "DepthMismatch";
          }
          break;
        }
        case NodeKind::Dual:
          if (ch.size() != 1 || !(ch[0].target == opposite(t.target))
              || !(t.witness.host.table()
                   == opposite(ch[0].witness.host).table())) {
            return "BadLink";
          }
          if (t.depth != ch[0].depth) {
            return "DepthMismatch";
          }
          break;
      }
      return "ok";
    }

    void seal(DecompTree const& t, Limits const& limits) {
      if (auto s = node_status(t, nullptr, limits); s != "ok") {
        throw VerificationError("krd: " + std::string(to_string(t.kind))
                                + " node for " + table_id(t.target)
                                + " fails verification (" + s + ")");
      }
    }

    template <class Elements, class Arith>
    std::vector<std::size_t> codes_of(Elements const& els, Arith const& a) {
      std::vector<std::size_t> out;
      for (auto const& e : els) {
        out.push_back(a.encode(e));
      }
      return out;
    }

    // Threshold monoids M_0 = U1 and M_j = <e_j, y_j> in M_(j-1) wr U1, where
    // y_j = (f, 0) with f(1) = 1 and f(0) = y_(j-1).  y_j has index j + 1
    // and period 1.
    struct Tower {
      std::vector<Semigroup>  monoid;
      std::vector<index_t>    y, one;
      std::vector<DecompTree> nodes;
    };

    Tower build_tower(std::size_t levels, Limits const& limits) {
      Tower      t;
      auto const u1 = fixtures::u1();  // "1" at 0, "0" at 1
      t.monoid.push_back(u1);
      t.y.push_back(1);
      t.one.push_back(0);
      t.nodes.push_back(leaf(NodeKind::Semilattice, u1));
      for (std::size_t j = 1; j < levels; ++j) {
        WreathArithmetic          arith(t.monoid[j - 1], u1);
        WreathArithmetic::Element e{{t.one[j - 1], t.one[j - 1]}, 0};
        WreathArithmetic::Element y{{t.one[j - 1], t.y[j - 1]}, 1};
        auto cl = closure(
            std::vector{e, y},
            [&arith](auto const& a, auto const& b) {
              return arith.multiply(a, b);
            },
            limits.closure,
            ElementHash{});
        DecompTree node{NodeKind::Wreath,
                        cl.semigroup,
                        identity_witness(cl.semigroup),
                        t.nodes[j - 1].depth + 1,
                        {t.nodes[j - 1], leaf(NodeKind::Semilattice, u1)},
                        codes_of(cl.elements, arith),
                        std::nullopt,
                        "threshold " + std::to_string(j + 1)};
        seal(node, limits);
        t.monoid.push_back(cl.semigroup);
        t.one.push_back(cl.gen_indices[0]);
        t.y.push_back(cl.gen_indices[1]);
        t.nodes.push_back(std::move(node));
      }
      return t;
    }

    // Fiber tower, top semigroup and the generator of the host for a
    // monogenic semigroup of index m >= 2 or period r >= 2.
    struct CyclicSetup {
      Tower                     tower;
      std::size_t               level;  // fiber is tower.monoid[level]
      Semigroup                 top;
      DecompTree                top_node;
      index_t                   top_generator;
      std::vector<index_t>      powers;  // powers[k] = x^(k+1) in S
    };

    CyclicSetup cyclic_setup(Semigroup const& s, Limits const& limits) {
      auto const x = cyclic_generator(s);
      if (!x) {
        throw PreconditionError("krd: decompose_cyclic needs a monogenic "
                                "semigroup");
      }
      auto const [m, r] = index_period(s, *x);
      std::vector<index_t> powers{*x};
      while (powers.size() < s.size()) {
        powers.push_back(s.product(powers.back(), *x));
      }
      if (r == 1) {
        // The host is <y_(m-1)> in M_(m-2) wr U1.
        auto tower = build_tower(m - 1, limits);
        auto u1    = fixtures::u1();
        return {std::move(tower), m - 2, u1, leaf(NodeKind::Semilattice, u1),
                1, std::move(powers)};
      }
      // The host is <(c_y, g)> in M_(m-1) wr K, K the maximal subgroup.
      Subset k(s.size());
      for (std::size_t e = m; e < m + r; ++e) {
        k.insert(powers[e - 1]);
      }
      auto        ksub  = subsemigroup(s, k);
      std::size_t gexp  = m + ((1 + r - m % r) % r);  // gexp = 1 mod r
      index_t     g     = static_cast<index_t>(
          std::find(ksub.to_parent.begin(), ksub.to_parent.end(),
                    powers[gexp - 1])
          - ksub.to_parent.begin());
      auto top_node = decompose_group(ksub.semigroup, limits);
      return {build_tower(m, limits), m - 1, ksub.semigroup,
              std::move(top_node), g, std::move(powers)};
    }

    DecompTree decompose(Semigroup const& s, Limits const& limits,
                         std::size_t level);

    DecompTree decompose_split(Semigroup const& s, Limits const& limits,
                               std::size_t level) {
      if (is_right_simple(s)) {
        auto       child = decompose(opposite(s), limits, level + 1);
        DecompTree node{NodeKind::Dual,
                        s,
                        {opposite(child.witness.host), child.witness.sub,
                         child.witness.map},
                        child.depth,
                        {},
                        {},
                        std::nullopt,
                        "right simple"};
        node.children.push_back(std::move(child));
        seal(node, limits);
        return node;
      }
      auto const gens = minimal_generating_set(s);
      if (gens.size() < 2) {
        throw VerificationError("krd: split case reached with a monogenic "
                                "semigroup");
      }
      index_t a     = gens.front();
      bool    found = false;
      for (auto g : gens) {
        Subset gs(s.size());
        for (index_t y = 0; y < s.size(); ++y) {
          gs.insert(s.product(g, y));
        }
        if (gs.count() < s.size()) {
          a     = g;
          found = true;
          break;
        }
      }
      if (!found) {
        throw VerificationError("krd: no generator a with aS != S");
      }
      Subset t1 = generated_subset(s, Subset::singleton(s.size(), a));
      Subset rest(s.size());
      for (auto g : gens) {
        if (g != a) {
          rest.insert(g);
        }
      }
      Subset t2    = generated_subset(s, rest);
      auto   cover = division_from_cover(s, t1, t2, limits.closure);
      auto const& in = cover.cover.input;
      if (in.t1.size() >= s.size() || in.t2.size() >= s.size()
          || in.t0.size() >= s.size()) {
        throw VerificationError("krd: split does not decrease |S|");
      }
      auto right = decompose(in.t2, limits, level + 1);
      auto mid   = decompose(in.t0, limits, level + 1);
      auto left  = decompose(in.t1, limits, level + 1);
      std::size_t depth = mid.depth + std::max(right.depth, left.depth) + 1;
      DecompTree  node{NodeKind::Triple,
                      s,
                      std::move(cover.witness),
                      depth,
                      {},
                      {},
                      in,
                      "a=" + s.label(a)};
      node.children.push_back(std::move(right));
      node.children.push_back(std::move(mid));
      node.children.push_back(std::move(left));
      seal(node, limits);
      return node;
    }

    DecompTree decompose(Semigroup const& s, Limits const& limits,
                         std::size_t level) {
      if (level > limits.depth) {
        throw ResourceError("krd: recursion depth exceeds cap "
                            + std::to_string(limits.depth));
      }
      if (is_semilattice(s)) {
        return leaf(NodeKind::Semilattice, s);
      }
      if (is_group(s)) {
        return decompose_group(s, limits);
      }
      if (cyclic_generator(s)) {
        return decompose_cyclic(s, limits);
      }
      return decompose_split(s, limits, level);
    }

  }  // namespace

  DecompTree kr_decompose(Semigroup const& s, Limits const& limits) {
    return decompose(s, limits, 0);
  }

  DecompTree decompose_group(Semigroup const& g, Limits const& limits) {
    if (!is_group(g)) {
      throw PreconditionError("krd: decompose_group needs a group");
    }
    if (g.size() == 1) {
      return leaf(NodeKind::Semilattice, g);
    }
    if (is_simple_group(g, limits.group)) {
      return leaf(NodeKind::SimpleGroup, g);
    }
    // A largest proper nontrivial normal subgroup; the quotient is simple.
    Subset best;
    for (auto const& n : normal_subgroups(g, limits.group)) {
      if (n.count() > 1 && n.count() < g.size()
          && (best.universe() == 0 || n.count() > best.count())) {
        best = n;
      }
    }
    auto       kk    = kk_embed(g, best, limits.wreath);
    auto       fiber = decompose_group(kk.normal.semigroup, limits);
    auto       top   = leaf(NodeKind::SimpleGroup, kk.quotient.group);
    std::vector<std::size_t> codes(kk.hom.cod.size());
    for (std::size_t c = 0; c < codes.size(); ++c) {
      codes[c] = c;
    }
    std::size_t depth = fiber.depth + top.depth;
    DecompTree  node{NodeKind::Wreath,
                    g,
                    witness_from_embedding(kk.hom),
                    depth,
                    {std::move(fiber), std::move(top)},
                    std::move(codes),
                    std::nullopt,
                    "normal subgroup of order " + std::to_string(best.count())};
    seal(node, limits);
    return node;
  }

  DecompTree decompose_cyclic(Semigroup const& s, Limits const& limits) {
    if (s.size() == 1) {
      return leaf(NodeKind::Semilattice, s);
    }
    if (is_group(s)) {
      return decompose_group(s, limits);
    }
    auto setup = cyclic_setup(s, limits);
    auto const& fiber = setup.tower.monoid[setup.level];
    WreathArithmetic          arith(fiber, setup.top);
    WreathArithmetic::Element w{
        std::vector<index_t>(setup.top.size(), setup.tower.y[setup.level]),
        setup.top_generator};
    if (setup.top.size() == 2 && is_semilattice(setup.top)) {
      // Over U1 the generator is (f, 0) with f(1) = 1, f(0) = y.
      w.f[0] = setup.tower.one[setup.level];
    }
    auto cl = closure(
        std::vector{w},
        [&arith](auto const& a, auto const& b) { return arith.multiply(a, b); },
        limits.closure,
        ElementHash{});
    if (cl.elements.size() != s.size()) {
      throw VerificationError("krd: cyclic host has the wrong order");
    }
    std::vector<index_t> map(cl.elements.size());
    for (index_t k = 0; k < map.size(); ++k) {
      map[k] = setup.powers[k];
    }
    auto const [m, r] = index_period(s, setup.powers[0]);
    std::size_t depth = setup.tower.nodes[setup.level].depth
                        + setup.top_node.depth;
    DecompTree  node{NodeKind::Wreath,
                    s,
                    {cl.semigroup, Subset::full(cl.semigroup.size()),
                     std::move(map)},
                    depth,
                    {setup.tower.nodes[setup.level], std::move(setup.top_node)},
                    codes_of(cl.elements, arith),
                    std::nullopt,
                    "index " + std::to_string(m) + " period "
                        + std::to_string(r)};
    seal(node, limits);
    return node;
  }

  std::optional<DivisionWitness> search_cyclic_division(Semigroup const& s,
                                                        std::size_t budget) {
    if (s.size() == 1 || is_group(s)) {
      throw PreconditionError("krd: cyclic search needs a non-group "
                              "monogenic semigroup");
    }
    auto setup = cyclic_setup(s, Limits{});
    WreathArithmetic arith(setup.tower.monoid[setup.level], setup.top);
    auto const [m, r] = index_period(s, setup.powers[0]);
    auto const order  = arith.order();
    std::size_t const limit = order ? std::min(*order, budget) : budget;
    for (std::size_t code = 0; code < limit; ++code) {
      auto w = arith.decode(code);
      std::vector<WreathArithmetic::Element> pw{w};
      std::size_t                            repeat = 0;
      while (true) {
        auto next = arith.multiply(pw.back(), w);
        auto it   = std::find(pw.begin(), pw.end(), next);
        if (it != pw.end()) {
          repeat = static_cast<std::size_t>(it - pw.begin());
          break;
        }
        if (pw.size() > s.size()) {
          break;
        }
        pw.push_back(std::move(next));
      }
      // pw = w, ..., w^n with w^(n+1) = w^(repeat+1): index repeat + 1.
      if (pw.size() != s.size() || repeat + 1 != m
          || pw.size() - repeat != r) {
        continue;
      }
      auto cl = closure(
          std::vector{w},
          [&arith](auto const& a, auto const& b) {
            return arith.multiply(a, b);
          },
          s.size() + 1,
          ElementHash{});
      std::vector<index_t> map(setup.powers.begin(), setup.powers.end());
      DivisionWitness      wit{cl.semigroup, Subset::full(cl.semigroup.size()),
                          std::move(map)};
      if (is_division_witness(s, wit)) {
        return wit;
      }
    }
    return std::nullopt;
  }

  TreeReport verify_tree(DecompTree const& t, Limits const& limits) {
    TreeReport report;
    report.depth = t.depth;
    auto walk = [&](auto&& self, DecompTree const& n, std::string path,
                    std::size_t height) -> void {
      report.height = std::max(report.height, height);
      std::string status = node_status(n, &t.target, limits);
      report.ok          = report.ok && status == "ok";
      report.nodes.push_back(
          {path, n.kind, table_id(n.target), n.depth, std::move(status)});
      if (n.kind == NodeKind::Semilattice) {
        ++report.semilattice_leaves;
      } else if (n.kind == NodeKind::SimpleGroup) {
        ++report.group_leaves;
        report.group_leaf_ids.push_back(table_id(n.target));
      }
      for (std::size_t k = 0; k < n.children.size(); ++k) {
        self(self, n.children[k], path + "." + std::to_string(k), height + 1);
      }
    };
    walk(walk, t, "0", 1);
    return report;
  }

  std::string format_certificate(DecompTree const& t, TreeReport const& r) {
    std::string out;
    std::size_t k    = 0;
    auto        walk = [&](auto&& self, DecompTree const& n,
                    std::size_t indent) -> void {
      auto const& nr = r.nodes.at(k++);
      out += std::string(indent, ' ') + '(' + to_string(n.kind)
             + " target=" + nr.target_id
             + " depth=" + std::to_string(n.depth)
             + " witness=" + nr.status;
      if (n.kind != NodeKind::Semilattice && n.kind != NodeKind::SimpleGroup) {
        out += " host=" + table_id(n.witness.host);
      }
      if (!n.note.empty()) {
        out += " ; " + n.note;
      }
      out += ")\n";
      for (auto const& c : n.children) {
        self(self, c, indent + 2);
      }
    };
    walk(walk, t, 0);
    return out;
  }

}  // namespace sgkit
