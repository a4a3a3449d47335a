#include "sgkit/psat.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace sgkit {

  namespace {

    void check_host(Semigroup const& s, Subset const& x) {
      if (x.universe() != s.size()) {
        throw PreconditionError("psat: subset of a different semigroup");
      }
    }

    void check_nonempty(Subset const& x, char const* what) {
      if (x.empty()) {
        throw PreconditionError(std::string("psat: ") + what
                                + " of the empty set");
      }
    }

    // Member registry shared by saturate and its helpers.
    class Registry {
     public:
      explicit Registry(std::size_t cap) : cap_(cap) {}

      bool add(Subset x, Derivation d) {
        if (index_.contains(x)) {
          return false;
        }
        if (members_.size() >= cap_) {
          throw ResourceError("psat: family exceeds size cap "
                              + std::to_string(cap_));
        }
        index_.emplace(x, static_cast<index_t>(members_.size()));
        members_.push_back(std::move(x));
        trace_.push_back(d);
        return true;
      }

      std::vector<Subset>&     members() noexcept { return members_; }
      std::vector<Derivation>& trace() noexcept { return trace_; }

     private:
      std::size_t                                  cap_;
      std::vector<Subset>                          members_;
      std::vector<Derivation>                      trace_;
      std::unordered_map<Subset, index_t, SubsetHash> index_;
    };

  }  // namespace

  Subset subset_product(Semigroup const& s, Subset const& x, Subset const& y) {
    check_host(s, x);
    check_host(s, y);
    Subset out(s.size());
    auto   ys = y.elements();
    x.for_each([&](index_t a) {
      auto row = s.row(a);
      for (auto b : ys) {
        out.insert(row[b]);
      }
    });
    return out;
  }

  Subset subset_power(Semigroup const& s, Subset const& x, std::size_t n) {
    if (n == 0) {
      throw PreconditionError("psat: subset power needs n >= 1");
    }
    Subset p = x;
    for (std::size_t k = 1; k < n; ++k) {
      p = subset_product(s, p, x);
    }
    return p;
  }

  Subset omega_power(Semigroup const& s, Subset const& x) {
    check_host(s, x);
    check_nonempty(x, "idempotent power");
    Subset p = x;
    while (true) {
      Subset pp = subset_product(s, p, p);
      if (pp == p) {
        return p;
      }
      p = subset_product(s, p, x);
    }
  }

  Subset omega_star(Semigroup const& s, Subset const& x) {
    Subset const e   = omega_power(s, x);
    Subset       out = e;
    Subset       cur = subset_product(s, e, x);
    // e x^n runs through the maximal group of <x> and returns to e.
    while (cur != e) {
      out |= cur;
      cur = subset_product(s, cur, x);
    }
    return out;
  }

  Family normalize(std::vector<Subset> members) {
    std::sort(members.begin(), members.end(), canonical_less);
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
  }

  bool family_contains(Family const& f, Subset const& x) {
    return std::binary_search(f.begin(), f.end(), x, canonical_less);
  }

  Family singletons(Semigroup const& s) {
    Family out;
    for (index_t x = 0; x < s.size(); ++x) {
      out.push_back(Subset::singleton(s.size(), x));
    }
    return out;
  }

  Family downward_closure(Semigroup const& s, Family const& f,
                          std::size_t cap) {
    std::unordered_set<Subset, SubsetHash> seen;
    for (auto const& x : f) {
      check_host(s, x);
      auto const elems = x.elements();
      if (elems.size() >= 63
          || (std::uint64_t(1) << elems.size()) - 1 > cap) {
        throw ResourceError("psat: downward closure exceeds size cap "
                            + std::to_string(cap));
      }
      std::uint64_t const full = (std::uint64_t(1) << elems.size()) - 1;
      for (std::uint64_t mask = full; mask != 0; mask = (mask - 1) & full) {
        Subset y(s.size());
        for (std::size_t k = 0; k < elems.size(); ++k) {
          if ((mask >> k) & 1U) {
            y.insert(elems[k]);
          }
        }
        seen.insert(std::move(y));
        if (seen.size() > cap) {
          throw ResourceError("psat: downward closure exceeds size cap "
                              + std::to_string(cap));
        }
      }
    }
    return normalize({seen.begin(), seen.end()});
  }

  namespace {

    Registry close_family(Semigroup const&           s,
                          std::vector<Subset> const& f,
                          std::size_t                cap,
                          bool                       down) {
      Registry reg(cap);
      for (auto const& x : f) {
        check_host(s, x);
        check_nonempty(x, "saturation");
        reg.add(x, {Rule::Seed});
      }
      // Semi-naive: when member i is processed, every pair with max index i
      // is multiplied, so each pair is handled exactly once.
      for (index_t i = 0; i < reg.members().size(); ++i) {
        for (index_t j = 0; j <= i; ++j) {
          Subset const& xi = reg.members()[i];
          Subset const& xj = reg.members()[j];
          Subset        ij = subset_product(s, xi, xj);
          Subset        ji = subset_product(s, xj, xi);
          reg.add(std::move(ij), {Rule::Product, i, j});
          reg.add(std::move(ji), {Rule::Product, j, i});
        }
        reg.add(omega_star(s, reg.members()[i]), {Rule::OmegaStar, i});
        auto const elems = reg.members()[i].elements();
        if (down && elems.size() > 1) {
          for (auto x : elems) {
            Subset y = reg.members()[i];
            y.erase(x);
            reg.add(std::move(y), {Rule::Down, i});
          }
        }
      }
      return reg;
    }

    Saturation finish(Registry reg) {
      Saturation out;
      out.family  = normalize(reg.members());
      out.members = std::move(reg.members());
      out.trace   = std::move(reg.trace());
      return out;
    }

  }  // namespace

  Saturation saturate(Semigroup const&           s,
                      std::vector<Subset> const& f,
                      std::size_t                cap) {
    auto out = finish(close_family(s, f, cap, true));
    if (!is_saturated(s, out.family)) {
      throw VerificationError("psat: saturation fails the saturated check");
    }
    return out;
  }

  Saturation saturate_upward(Semigroup const&           s,
                             std::vector<Subset> const& f,
                             std::size_t                cap) {
    auto out = finish(close_family(s, f, cap, false));
    for (auto const& x : out.family) {
      bool ok = family_contains(out.family, omega_star(s, x));
      for (auto const& y : out.family) {
        ok = ok && family_contains(out.family, subset_product(s, x, y));
      }
      if (!ok) {
        throw VerificationError("psat: upward saturation is not closed");
      }
    }
    return out;
  }

  bool is_saturated(Semigroup const& s, Family const& f) {
    for (auto const& x : f) {
      if (x.empty() || !family_contains(f, omega_star(s, x))) {
        return false;
      }
      for (auto const& y : f) {
        if (!family_contains(f, subset_product(s, x, y))) {
          return false;
        }
      }
      if (x.count() > 1) {
        bool ok = true;
        x.for_each([&](index_t e) {
          Subset y = x;
          y.erase(e);
          ok = ok && family_contains(f, y);
        });
        if (!ok) {
          return false;
        }
      }
    }
    return true;
  }

  std::string replay(Semigroup const&           s,
                     std::vector<Subset> const& seeds,
                     Saturation const&          sat) {
    if (sat.members.size() != sat.trace.size()) {
      return "trace length differs from member count";
    }
    for (index_t k = 0; k < sat.members.size(); ++k) {
      auto const& d   = sat.trace[k];
      auto const& m   = sat.members[k];
      std::string at  = "member " + std::to_string(k) + ": ";
      if (d.rule != Rule::Seed && (d.a >= k || d.b >= k)) {
        return at + "operand does not precede the result";
      }
      switch (d.rule) {
        case Rule::Seed:
          if (std::find(seeds.begin(), seeds.end(), m) == seeds.end()) {
            return at + "seed not in the input family";
          }
          break;
        case Rule::Product:
          if (subset_product(s, sat.members[d.a], sat.members[d.b]) != m) {
            return at + "product does not match";
          }
          break;
        case Rule::OmegaStar:
          if (omega_star(s, sat.members[d.a]) != m) {
            return at + "omega-star does not match";
          }
          break;
        case Rule::Down:
          if (m.empty() || !m.is_subset_of(sat.members[d.a])) {
            return at + "not a nonempty subset of its source";
          }
          break;
      }
    }
    return {};
  }

  Family henckell_pointlikes(Semigroup const& s, std::size_t cap) {
    return saturate(s, singletons(s), cap).family;
  }

  SubgroupUnion subgroup_union_check(Semigroup const&           s,
                                     std::vector<Subset> const& g) {
    Family members = normalize(g);
    if (members.empty()) {
      throw PreconditionError("psat: empty subgroup of 2^S");
    }
    std::size_t const    n = members.size();
    std::vector<index_t> table(n * n);
    for (index_t i = 0; i < n; ++i) {
      for (index_t j = 0; j < n; ++j) {
        Subset p  = subset_product(s, members[i], members[j]);
        auto   it = std::lower_bound(members.begin(), members.end(), p,
                                     canonical_less);
        if (it == members.end() || *it != p) {
          throw PreconditionError("psat: family is not closed under "
                                  "subset product");
        }
        table[i * n + j] = static_cast<index_t>(it - members.begin());
      }
    }
    auto const table_sg = Semigroup::from_table(n, std::move(table));
    if (!is_group(table_sg)) {
      throw PreconditionError("psat: family is not a group under subset "
                              "product");
    }
    SubgroupUnion out;
    out.union_of_group = Subset(s.size());
    for (auto const& x : members) {
      out.union_of_group |= x;
    }
    // Cyclic subgroups <X>, one per distinct subgroup, least X first.
    std::vector<Subset> seen;
    for (index_t x = 0; x < n; ++x) {
      Subset  cyc(n);
      index_t p = x;
      while (!cyc.contains(p)) {
        cyc.insert(p);
        p = table_sg.product(p, x);
      }
      if (std::find(seen.begin(), seen.end(), cyc) != seen.end()) {
        continue;
      }
      seen.push_back(cyc);
      Subset cyc_union(s.size());
      cyc.for_each([&](index_t k) { cyc_union |= members[k]; });
      Subset star = omega_star(s, members[x]);
      if (star != cyc_union) {
        out.detail = "omega-star of " + format_subset(s, members[x])
                     + " differs from the union of its cyclic subgroup";
        return out;
      }
      out.generators.push_back(members[x]);
      out.cyclic_unions.push_back(std::move(star));
    }
    out.product = out.cyclic_unions.front();
    for (std::size_t k = 1; k < out.cyclic_unions.size(); ++k) {
      out.product = subset_product(s, out.product, out.cyclic_unions[k]);
    }
    out.ok = out.product == out.union_of_group;
    if (!out.ok) {
      out.detail = "product of cyclic unions is "
                   + format_subset(s, out.product) + ", union is "
                   + format_subset(s, out.union_of_group);
    }
    return out;
  }

  std::string format_subset(Semigroup const& s, Subset const& x) {
    std::string out = "{";
    bool        first = true;
    x.for_each([&](index_t e) {
      out += (first ? "" : ",") + s.label(e);
      first = false;
    });
    return out + "}";
  }

  std::string format_family(Semigroup const& s, Family const& f) {
    std::string out;
    for (auto const& x : f) {
      out += format_subset(s, x) + '\n';
    }
    return out;
  }

}  // namespace sgkit
