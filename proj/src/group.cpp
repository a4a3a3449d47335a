#include "sgkit/group.hpp"

#include <algorithm>
#include <string>

namespace sgkit {

  namespace {

    void check_group(Semigroup const& g, std::size_t cap, char const* what) {
      if (!is_group(g)) {
        throw PreconditionError(std::string("sgcore: ") + what
                                + " needs a group");
      }
      if (g.size() > cap) {
        throw ResourceError(std::string("sgcore: ") + what
                            + " exceeds group size cap "
                            + std::to_string(cap));
      }
    }

    index_t inverse(Semigroup const& g, index_t e, index_t x) {
      for (index_t y = 0; y < g.size(); ++y) {
        if (g.product(x, y) == e) {
          return y;
        }
      }
      throw PreconditionError("sgcore: element without inverse");
    }

    Subset powers(Semigroup const& g, index_t x) {
      Subset  out(g.size());
      index_t p = x;
      while (!out.contains(p)) {
        out.insert(p);
        p = g.product(p, x);
      }
      return out;
    }

  }  // namespace

  std::vector<Subset> cyclic_subgroups(Semigroup const& g, index_t identity) {
    if (!is_group(g) || identity_of(g) != identity) {
      throw PreconditionError("sgcore: cyclic_subgroups needs a group and "
                              "its identity");
    }
    std::vector<Subset> out;
    for (index_t x = 0; x < g.size(); ++x) {
      Subset c = powers(g, x);
      if (std::find(out.begin(), out.end(), c) == out.end()) {
        out.push_back(std::move(c));
      }
    }
    return out;
  }

  std::vector<Subset> subgroups(Semigroup const& g, std::size_t cap) {
    check_group(g, cap, "subgroups");
    auto                e      = *identity_of(g);
    auto                cyclic = cyclic_subgroups(g, e);
    std::vector<Subset> all    = cyclic;
    for (std::size_t k = 0; k < all.size(); ++k) {
      for (auto const& c : cyclic) {
        if (c.is_subset_of(all[k])) {
          continue;
        }
        Subset joined = generated_subset(g, all[k] | c);
        if (std::find(all.begin(), all.end(), joined) == all.end()) {
          all.push_back(std::move(joined));
        }
      }
    }
    std::sort(all.begin(), all.end(), canonical_less);
    return all;
  }

  bool is_normal(Semigroup const& g, Subset const& n) {
    auto e = identity_of(g);
    if (!e) {
      return false;
    }
    for (index_t x = 0; x < g.size(); ++x) {
      index_t xi = inverse(g, *e, x);
      bool    ok = true;
      n.for_each([&](index_t h) {
        if (!n.contains(g.product(g.product(x, h), xi))) {
          ok = false;
        }
      });
      if (!ok) {
        return false;
      }
    }
    return true;
  }

  std::vector<Subset> normal_subgroups(Semigroup const& g, std::size_t cap) {
    std::vector<Subset> out;
    for (auto& h : subgroups(g, cap)) {
      if (is_normal(g, h)) {
        out.push_back(std::move(h));
      }
    }
    return out;
  }

  bool is_simple_group(Semigroup const& g, std::size_t cap) {
    if (!is_group(g) || g.size() < 2) {
      return false;
    }
    for (auto const& n : normal_subgroups(g, cap)) {
      if (n.count() != 1 && n.count() != g.size()) {
        return false;
      }
    }
    return true;
  }

  Quotient quotient_group(Semigroup const& g, Subset const& n) {
    if (!is_group(g) || !is_closed(g, n) || n.empty() || !is_normal(g, n)) {
      throw PreconditionError("sgcore: quotient needs a normal subgroup");
    }
    std::size_t const    size = g.size();
    std::vector<index_t> coset_of(size, static_cast<index_t>(-1));
    std::vector<index_t> representative;
    for (index_t x = 0; x < size; ++x) {
      if (coset_of[x] != static_cast<index_t>(-1)) {
        continue;
      }
      index_t c = static_cast<index_t>(representative.size());
      representative.push_back(x);
      n.for_each([&](index_t h) { coset_of[g.product(x, h)] = c; });
    }
    std::size_t const    q = representative.size();
    std::vector<index_t> table(q * q);
    for (index_t a = 0; a < q; ++a) {
      for (index_t b = 0; b < q; ++b) {
        table[a * q + b]
            = coset_of[g.product(representative[a], representative[b])];
      }
    }
    std::vector<std::string> labels;
    if (g.has_labels()) {
      for (auto r : representative) {
        labels.push_back(g.label(r) + "N");
      }
    }
    return {Semigroup::from_table(q, std::move(table), std::move(labels)),
            std::move(coset_of),
            std::move(representative)};
  }

  CompositionSeries composition_factors(Semigroup const& g, std::size_t cap) {
    check_group(g, cap, "composition_factors");
    CompositionSeries out;
    Subset            current = Subset::full(g.size());
    out.chain.push_back(current);
    while (current.count() > 1) {
      auto sub = subsemigroup(g, current);
      // A proper normal subgroup of largest order is maximal among proper
      // normal subgroups, so the quotient is simple.
      Subset best;
      for (auto const& n : normal_subgroups(sub.semigroup, cap)) {
        if (n.count() < sub.semigroup.size()
            && (best.universe() == 0 || n.count() > best.count())) {
          best = n;
        }
      }
      auto factor = quotient_group(sub.semigroup, best).group;
      if (!is_simple_group(factor, cap)) {
        throw VerificationError("sgcore: composition factor is not simple");
      }
      out.factors.push_back(std::move(factor));
      Subset next(g.size());
      best.for_each([&](index_t x) { next.insert(sub.to_parent[x]); });
      current = std::move(next);
      out.chain.push_back(current);
    }
    return out;
  }

  KrasnerEmbedding kk_embed(Semigroup const& g,
                            Subset const&    n,
                            std::size_t      cap) {
    if (!is_group(g)) {
      throw PreconditionError("sgcore: kk_embed needs a group");
    }
    if (n.universe() != g.size() || n.empty() || !is_closed(g, n)
        || !is_normal(g, n)) {
      throw PreconditionError("sgcore: kk_embed needs a normal subgroup");
    }
    auto const e      = *identity_of(g);
    auto       normal = subsemigroup(g, n);
    auto       quot   = quotient_group(g, n);
    std::vector<index_t> local(g.size(), 0);
    for (index_t k = 0; k < normal.to_parent.size(); ++k) {
      local[normal.to_parent[k]] = k;
    }
    WreathArithmetic arith(normal.semigroup, quot.group);
    auto             wreath = wreath_product(normal.semigroup, quot.group, cap);

    std::size_t const    q = quot.representative.size();
    std::vector<index_t> map(g.size());
    for (index_t x = 0; x < g.size(); ++x) {
      WreathArithmetic::Element el{std::vector<index_t>(q), quot.coset_of[x]};
      for (index_t c = 0; c < q; ++c) {
        // f_x(c) = r(c) x r(c [x])^-1, an element of N.
        index_t rc   = quot.representative[c];
        index_t next = quot.group.product(c, quot.coset_of[x]);
        index_t v    = g.product(g.product(rc, x),
                              inverse(g, e, quot.representative[next]));
        if (!n.contains(v)) {
          throw VerificationError("sgcore: Krasner coordinate outside N");
        }
        el.f[c] = local[v];
      }
      map[x] = static_cast<index_t>(arith.encode(el));
    }
    SgHom hom{g, std::move(wreath), std::move(map)};
    if (!hom.is_hom() || !hom.is_injective()) {
      throw VerificationError("sgcore: Krasner map is not an injective "
                              "homomorphism");
    }
    return {std::move(normal), std::move(quot), std::move(arith),
            std::move(hom)};
  }

  bool are_isomorphic_groups(Semigroup const& a, Semigroup const& b) {
    if (a.size() != b.size() || !is_group(a) || !is_group(b)) {
      return false;
    }
    // Greedy generating set of a, then try every image assignment.
    std::vector<index_t> gens;
    Subset               covered(a.size());
    for (index_t x = 0; x < a.size(); ++x) {
      if (!covered.contains(x)) {
        gens.push_back(x);
        covered = generated_subset(a, Subset::of(a.size(), gens));
      }
    }
    std::vector<index_t> images(gens.size(), 0);
    while (true) {
      // Extend along right multiplication by generators.
      std::vector<index_t> map(a.size(), static_cast<index_t>(-1));
      std::vector<index_t> queue;
      bool                 consistent = true;
      for (std::size_t k = 0; k < gens.size() && consistent; ++k) {
        if (map[gens[k]] == static_cast<index_t>(-1)) {
          map[gens[k]] = images[k];
          queue.push_back(gens[k]);
        } else if (map[gens[k]] != images[k]) {
          consistent = false;
        }
      }
      for (std::size_t q = 0; q < queue.size() && consistent; ++q) {
        for (std::size_t k = 0; k < gens.size(); ++k) {
          index_t y  = a.product(queue[q], gens[k]);
          index_t iy = b.product(map[queue[q]], images[k]);
          if (map[y] == static_cast<index_t>(-1)) {
            map[y] = iy;
            queue.push_back(y);
          } else if (map[y] != iy) {
            consistent = false;
            break;
          }
        }
      }
      if (consistent) {
        SgHom h{a, b, map};
        if (h.is_hom() && h.is_injective()) {
          return true;
        }
      }
      std::size_t k = 0;
      while (k < images.size() && ++images[k] == b.size()) {
        images[k++] = 0;
      }
      if (k == images.size()) {
        return false;
      }
    }
  }

  bool group_divides(Semigroup const& h, Semigroup const& s, std::size_t cap) {
    for (index_t e = 0; e < s.size(); ++e) {
      if (!is_idempotent(s, e)) {
        continue;
      }
      // Group of units of eSe, the maximal subgroup at e.
      Subset units(s.size());
      for (index_t x = 0; x < s.size(); ++x) {
        index_t exe = s.product(s.product(e, x), e);
        for (index_t y = 0; y < s.size(); ++y) {
          index_t eye = s.product(s.product(e, y), e);
          if (s.product(exe, eye) == e && s.product(eye, exe) == e) {
            units.insert(exe);
            break;
          }
        }
      }
      if (units.count() % h.size() != 0) {
        continue;
      }
      auto maximal = subsemigroup(s, units);
      for (auto const& k : subgroups(maximal.semigroup, cap)) {
        if (k.count() % h.size() != 0) {
          continue;
        }
        auto ksub = subsemigroup(maximal.semigroup, k);
        for (auto const& n : normal_subgroups(ksub.semigroup, cap)) {
          if (ksub.semigroup.size() == n.count() * h.size()
              && are_isomorphic_groups(
                  quotient_group(ksub.semigroup, n).group, h)) {
            return true;
          }
        }
      }
    }
    return false;
  }

}  // namespace sgkit
