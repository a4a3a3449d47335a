#include "sgkit/witness.hpp"

#include <algorithm>

#include "sgkit/fixtures.hpp"
#include "sgkit/krd.hpp"
#include "sgkit/merge.hpp"

namespace sgkit {

  void PhiHom::validate() const {
    if (alphabet.empty() || images.size() != alphabet.size()) {
      throw PreconditionError("witness: phi needs one image per letter");
    }
    for (auto const& x : images) {
      if (x.universe() != host.size() || x.empty()) {
        throw PreconditionError("witness: letter images must be nonempty "
                                "subsets of the host");
      }
    }
  }

  Closure<Subset> u_phi(PhiHom const& phi, std::size_t cap) {
    phi.validate();
    return closure(
        phi.images,
        [&phi](Subset const& x, Subset const& y) {
          return subset_product(phi.host, x, y);
        },
        cap,
        SubsetHash{});
  }

  Subset s_phi(PhiHom const& phi, std::size_t cap) {
    Subset out(phi.host.size());
    for (auto const& x : u_phi(phi, cap).elements) {
      out |= x;
    }
    return out;
  }

  std::size_t image_count(PhiHom const& phi) {
    return normalize(phi.images).size();
  }

  BigInt k_formula(std::size_t c, std::size_t s) {
    BigInt const pairs = BigInt(s) * (s == 0 ? 0 : s - 1) / 2;
    BigInt       out   = BigInt(1) << static_cast<unsigned>(pairs);
    out *= BigInt(c) - 1;
    out += (BigInt(1) << static_cast<unsigned>(s)) - 1;
    return out;
  }

  BigInt k_bound(PhiHom const& phi) {
    return k_formula(image_count(phi), s_phi(phi).count());
  }

  BigInt k_alphabet_variant(std::size_t alphabet, std::size_t s) {
    BigInt const pairs = BigInt(s) * (s == 0 ? 0 : s - 1) / 2;
    return (BigInt(alphabet) - 1) * (BigInt(1) << static_cast<unsigned>(pairs))
           + (BigInt(1) << static_cast<unsigned>(alphabet)) - 1;
  }

  namespace {

    struct PairElement {
      index_t t;
      Subset  x;
      friend bool operator==(PairElement const&, PairElement const&) = default;
    };

    struct PairHash {
      std::size_t operator()(PairElement const& p) const noexcept {
        return p.x.hash() ^ (std::size_t(p.t) * 0x9e3779b97f4a7c15ULL);
      }
    };

  }  // namespace

  std::vector<Subset> preimage_union_map(FreeHom const& psi,
                                         PhiHom const&  phi,
                                         std::size_t    cap) {
    phi.validate();
    if (psi.alphabet.size() != phi.alphabet.size()) {
      throw PreconditionError("witness: psi and phi need the same alphabet");
    }
    std::vector<PairElement> gens;
    for (std::size_t a = 0; a < phi.alphabet.size(); ++a) {
      gens.push_back({psi.gen_map[a], phi.images[a]});
    }
    auto cl = closure(
        gens,
        [&](PairElement const& p, PairElement const& q) {
          return PairElement{psi.cod.product(p.t, q.t),
                             subset_product(phi.host, p.x, q.x)};
        },
        cap,
        PairHash{});
    std::vector<Subset> out(psi.cod.size(), Subset(phi.host.size()));
    for (auto const& p : cl.elements) {
      out[p.t] |= p.x;
    }
    return out;
  }

  CaseSplit case_split(PhiHom const& phi) {
    Subset const sp = s_phi(phi);
    auto const&  s  = phi.host;
    bool         one = true;
    for (auto const& x : phi.images) {
      one = one && subset_product(s, x, sp) == sp
            && subset_product(s, sp, x) == sp;
    }
    if (one) {
      return {CaseTag::One};
    }
    if (image_count(phi) == 1) {
      return {CaseTag::Two};
    }
    for (letter_t a = 0; a < phi.alphabet.size(); ++a) {
      if (subset_product(s, phi.images[a], sp) != sp) {
        return {CaseTag::Three, a, Split::Left};
      }
    }
    for (letter_t a = 0; a < phi.alphabet.size(); ++a) {
      if (subset_product(s, sp, phi.images[a]) != sp) {
        return {CaseTag::Three, a, Split::Right};
      }
    }
    throw VerificationError("witness: no case applies");
  }

  bool bound_check_phi0(PhiHom const& phi, PhiHom const& phi0,
                        PhiHom const& phi1, PhiHom const& phi2) {
    std::size_t const m   = s_phi(phi).count();
    BigInt const      k0  = k_bound(phi0);
    BigInt const      cap = (BigInt(1) << static_cast<unsigned>(m * (m - 1) / 2))
                       - 1;
    return k0 <= cap
           && k0 + std::max(k_bound(phi1), k_bound(phi2)) + 1 <= k_bound(phi);
  }

  bool RelMorphism::is_full() const {
    Subset all(s.size());
    for (auto const& f : fibers) {
      all |= f;
    }
    return all.count() == s.size();
  }

  bool RelMorphism::is_multiplicative() const {
    for (index_t a = 0; a < t.size(); ++a) {
      for (index_t b = 0; b < t.size(); ++b) {
        if (!subset_product(s, fibers[a], fibers[b])
                 .is_subset_of(fibers[t.product(a, b)])) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {

    using Measure = std::pair<std::size_t, std::size_t>;

    Measure measure(PhiHom const& phi) {
      return {s_phi(phi).count(), image_count(phi)};
    }

    [[noreturn]] void fail(std::string const& msg) {
      throw VerificationError("witness: " + msg);
    }

    void verify_result(PhiHom const& phi, WitnessResult const& r,
                       WitnessOptions const& opts) {
      auto const& t = r.t;
      if (generated_subset(t, Subset::of(t.size(), r.psi.gen_map)).count()
          != t.size()) {
        fail("psi is not surjective");
      }
      if (!is_aperiodic(t)) {
        fail("witness semigroup is not aperiodic");
      }
      if (BigInt(r.depth) > k_bound(phi)) {
        fail("depth exceeds k(phi)");
      }
      auto const u   = u_phi(phi, opts.limits.closure);
      auto const sat = saturate(phi.host, u.elements, opts.limits.family).family;
      for (auto const& p : r.p) {
        if (p.empty() || !family_contains(sat, p)) {
          fail("a preimage union lies outside Sat(U_phi)");
        }
      }
      // Words up to sample_len, depth first, within the budget.
      std::size_t budget = opts.sample_budget;
      std::size_t const k = phi.alphabet.size();
      auto visit = [&](auto&& self, index_t tv, Subset const& xv,
                       std::size_t len) -> void {
        if (budget == 0) {
          return;
        }
        --budget;
        if (!xv.is_subset_of(r.p[tv])) {
          fail("P(psi(w)) does not contain phi(w)");
        }
        if (len == opts.sample_len) {
          return;
        }
        for (letter_t a = 0; a < k && budget > 0; ++a) {
          self(self, t.product(tv, r.psi.gen_map[a]),
               subset_product(phi.host, xv, phi.images[a]), len + 1);
        }
      };
      for (letter_t a = 0; a < k; ++a) {
        visit(visit, r.psi.gen_map[a], phi.images[a], 1);
      }
    }

    WitnessResult construct(PhiHom const& phi, WitnessOptions const& opts,
                            std::size_t level);

    WitnessResult case_one(PhiHom const& phi, WitnessOptions const& opts) {
      auto const u  = u_phi(phi, opts.limits.closure);
      auto const sp = s_phi(phi, opts.limits.closure);
      auto const mi = minimal_ideal(u.semigroup);
      index_t    e  = 0;
      bool       found = false;
      mi.for_each([&](index_t x) {
        if (!found && is_idempotent(u.semigroup, x)) {
          e     = x;
          found = true;
        }
      });
      if (!found) {
        fail("no idempotent in the minimal ideal of U_phi");
      }
      auto const          g = local_group(u.semigroup, e);
      std::vector<Subset> members;
      for (auto k : g.to_parent) {
        members.push_back(u.elements[k]);
      }
      auto lemma = subgroup_union_check(phi.host, members);
      if (!lemma.ok || lemma.union_of_group != sp) {
        fail("union of eU_phi e differs from S_phi");
      }
      auto          t = fixtures::trivial();
      WitnessResult r{t, FreeHom{phi.alphabet, t,
                                 std::vector<index_t>(phi.alphabet.size(), 0)},
                      1, {}, {}};
      r.p = preimage_union_map(r.psi, phi, opts.limits.closure);
      r.trace.tag = CaseTag::One;
      r.trace.lemma.push_back(std::move(lemma));
      return r;
    }

    WitnessResult case_two(PhiHom const& phi, WitnessOptions const& opts) {
      auto const& s = phi.host;
      auto const& x = phi.images[0];
      std::vector<Subset> powers{x};
      while (subset_product(s, powers.back(), powers.back()) != powers.back()) {
        powers.push_back(subset_product(s, powers.back(), x));
      }
      std::size_t const m = powers.size();
      auto              t = fixtures::monogenic(m, 1);
      WitnessResult     r{t, FreeHom{phi.alphabet, t,
                                 std::vector<index_t>(phi.alphabet.size(), 0)},
                      m, {}, {}};
      r.p = preimage_union_map(r.psi, phi, opts.limits.closure);
      for (std::size_t i = 0; i + 1 < m; ++i) {
        if (r.p[i] != powers[i]) {
          fail("P(x^i) differs from X^i");
        }
      }
      if (r.p[m - 1] != omega_star(s, x)) {
        fail("P(x^m) differs from X^(w+*)");
      }
      r.trace.tag = CaseTag::Two;
      return r;
    }

    PhiHom restrict(PhiHom const& phi, std::vector<letter_t> const& letters) {
      PhiHom out{{}, phi.host, {}};
      for (auto a : letters) {
        out.alphabet.push_back(phi.alphabet[a]);
        out.images.push_back(phi.images[a]);
      }
      return out;
    }

    WitnessResult case_three_left(PhiHom const& phi, letter_t a0,
                                  WitnessOptions const& opts,
                                  std::size_t level) {
      auto const& s = phi.host;
      std::vector<letter_t> a1, a2;
      std::vector<index_t>  local(phi.alphabet.size());
      for (letter_t a = 0; a < phi.alphabet.size(); ++a) {
        auto& part = phi.images[a] == phi.images[a0] ? a1 : a2;
        local[a]   = static_cast<index_t>(part.size());
        part.push_back(a);
      }
      PhiHom const  phi1 = restrict(phi, a1);
      PhiHom const  phi2 = restrict(phi, a2);
      Measure const mu   = measure(phi);
      if (!(measure(phi1) < mu) || !(measure(phi2) < mu)) {
        fail("recursion measure does not decrease for phi1, phi2");
      }
      auto r1 = construct(phi1, opts, level + 1);
      auto r2 = construct(phi2, opts, level + 1);

      PhiHom phi0{{}, s, {}};
      for (index_t t1 = 0; t1 < r1.t.size(); ++t1) {
        for (index_t t2 = 0; t2 < r2.t.size(); ++t2) {
          phi0.alphabet.push_back("(" + std::to_string(t1) + ","
                                  + std::to_string(t2) + ")");
          phi0.images.push_back(subset_product(s, r1.p[t1], r2.p[t2]));
        }
      }
      Subset const sp  = s_phi(phi, opts.limits.closure);
      Subset const sp0 = s_phi(phi0, opts.limits.closure);
      if (!sp0.is_subset_of(subset_product(s, phi.images[a0], sp))
          || !(measure(phi0) < mu) || sp0.count() >= sp.count()) {
        fail("S_phi0 is not strictly inside phi(a0) S_phi");
      }
      auto r0 = construct(phi0, opts, level + 1);

      MergeInput in{phi.alphabet, {}, {}, r1.t, r2.t, r0.t, r0.psi.gen_map};
      for (letter_t a = 0; a < phi.alphabet.size(); ++a) {
        bool const one = phi.images[a] == phi.images[a0];
        in.part.push_back(one ? Part::One : Part::Two);
        in.letter_image.push_back(one ? r1.psi.gen_map[local[a]]
                                      : r2.psi.gen_map[local[a]]);
      }
      auto merge = build_merge(std::move(in), opts.limits.closure);
      auto t     = merge.generated.semigroup;
      WitnessResult r{t, merge.psi_m(),
                      r0.depth + std::max(r1.depth, r2.depth) + 1, {}, {}};
      r.p                 = preimage_union_map(r.psi, phi, opts.limits.closure);
      r.trace.tag         = CaseTag::Three;
      r.trace.side        = Split::Left;
      r.trace.a0          = phi.alphabet[a0];
      r.trace.bound_ok    = bound_check_phi0(phi, phi0, phi1, phi2);
      r.trace.children    = {std::move(r1.trace), std::move(r2.trace),
                          std::move(r0.trace)};
      if (!r.trace.bound_ok) {
        fail("k(phi0) inequality fails");
      }
      return r;
    }

    WitnessResult construct(PhiHom const& phi, WitnessOptions const& opts,
                            std::size_t level) {
      phi.validate();
      if (level > opts.limits.depth) {
        throw ResourceError("witness: recursion depth exceeds cap "
                            + std::to_string(opts.limits.depth));
      }
      auto const    split = case_split(phi);
      WitnessResult r     = [&] {
        switch (split.tag) {
          case CaseTag::One:
            return case_one(phi, opts);
          case CaseTag::Two:
            return case_two(phi, opts);
          case CaseTag::Three:
            break;
        }
        if (split.side == Split::Left) {
          return case_three_left(phi, split.a0, opts, level);
        }
        // Mirror: the right condition in S is the left one in S^op.
        PhiHom mirrored{phi.alphabet, opposite(phi.host), phi.images};
        auto   inner = construct(mirrored, opts, level + 1);
        auto   t     = opposite(inner.t);
        WitnessResult out{t, FreeHom{phi.alphabet, t, inner.psi.gen_map},
                          inner.depth, inner.p, {}};
        out.trace.tag  = CaseTag::Three;
        out.trace.side = Split::Right;
        out.trace.a0   = phi.alphabet[split.a0];
        out.trace.children.push_back(std::move(inner.trace));
        return out;
      }();
      r.trace.t_size = r.t.size();
      r.trace.depth  = r.depth;
      auto const [sp, c] = measure(phi);
      r.trace.s_phi  = sp;
      r.trace.images = c;
      r.trace.k      = k_formula(c, sp);
      verify_result(phi, r, opts);
      return r;
    }

  }  // namespace

  WitnessResult construct_witness(PhiHom const&         phi,
                                  WitnessOptions const& opts) {
    return construct(phi, opts, 0);
  }

  PointlikeCertificate pointlikes_with_certificate(Semigroup const&      s,
                                                   WitnessOptions const& opts) {
    auto   gens = minimal_generating_set(s);
    PhiHom phi{{}, s, {}};
    for (auto g : gens) {
      phi.alphabet.push_back(s.label(g));
      phi.images.push_back(Subset::singleton(s.size(), g));
    }
    auto           res = construct_witness(phi, opts);
    RelMorphism    rho{s, res.t, res.p};
    Family const   sat = henckell_pointlikes(s, opts.limits.family);
    PointlikeCertificate out{gens, {}, rho, std::move(res), k_bound(phi),
                             k_alphabet_variant(gens.size(), s.size())};
    out.full_and_multiplicative = rho.is_full() && rho.is_multiplicative();
    out.fibers_saturated        = std::all_of(
        rho.fibers.begin(), rho.fibers.end(),
        [&](Subset const& f) { return family_contains(sat, f); });
    out.maximal_covered = true;
    for (auto const& x : sat) {
      bool maximal = std::none_of(sat.begin(), sat.end(), [&](Subset const& y) {
        return y != x && x.is_subset_of(y);
      });
      if (maximal
          && std::none_of(rho.fibers.begin(), rho.fibers.end(),
                          [&](Subset const& f) { return x.is_subset_of(f); })) {
        out.maximal_covered = false;
      }
    }
    out.depth_within_bound = BigInt(out.witness.depth) <= out.k_proof;
    out.family           = downward_closure(s, normalize(rho.fibers),
                                            opts.limits.family);
    out.matches_fixpoint = out.family == sat;
    return out;
  }

  std::string format_trace(Semigroup const& host, WitnessTrace const& t) {
    std::string out;
    auto walk = [&](auto&& self, WitnessTrace const& n,
                    std::size_t indent) -> void {
      out += std::string(indent, ' ');
      switch (n.tag) {
        case CaseTag::One:
          out += "case1";
          break;
        case CaseTag::Two:
          out += "case2";
          break;
        case CaseTag::Three:
          out += std::string("case3 ")
                 + (n.side == Split::Left ? "left" : "right") + " a0=" + n.a0;
          break;
      }
      out += " |T|=" + std::to_string(n.t_size)
             + " depth=" + std::to_string(n.depth) + " k=" + n.k.str()
             + " |S_phi|=" + std::to_string(n.s_phi)
             + " |phi(A)|=" + std::to_string(n.images);
      if (n.tag == CaseTag::Three && n.side == Split::Left) {
        out += std::string(" bound=") + (n.bound_ok ? "ok" : "FAIL");
      }
      for (auto const& l : n.lemma) {
        out += " union=" + format_subset(host, l.union_of_group)
               + (l.ok ? " lemma=ok" : " lemma=FAIL");
      }
      out += '\n';
      for (auto const& c : n.children) {
        self(self, c, indent + 2);
      }
    };
    walk(walk, t, 0);
    return out;
  }

}  // namespace sgkit
