#include "sgkit/acceptance.hpp"

#include <map>
#include <random>

#include "sgkit/construct.hpp"
#include "sgkit/division.hpp"
#include "sgkit/group.hpp"
#include "sgkit/krd.hpp"
#include "sgkit/merge.hpp"
#include "sgkit/psat.hpp"
#include "sgkit/witness.hpp"

namespace sgkit {

  namespace {

    constexpr std::string_view kEven = R"(# (aa)+
states 3
alphabet a
init 0
final 2
trans 0 a 1
trans 1 a 2
trans 2 a 1
)";

    constexpr std::string_view kOdd = R"(# a(aa)*
states 3
alphabet a
init 0
final 1
trans 0 a 1
trans 1 a 2
trans 2 a 1
)";

    constexpr std::string_view kAFirst = R"(# a(a+b)*
states 3
alphabet a b
init 0
final 1
trans 0 a 1
trans 0 b 2
trans 1 a 1
trans 1 b 1
trans 2 a 2
trans 2 b 2
)";

    constexpr std::string_view kBFirst = R"(# b(a+b)*
states 3
alphabet a b
init 0
final 1
trans 0 a 2
trans 0 b 1
trans 1 a 1
trans 1 b 1
trans 2 a 2
trans 2 b 2
)";

    constexpr std::string_view kAPlus = R"(# a+
states 2
alphabet a
init 0
final 1
trans 0 a 1
trans 1 a 1
)";

    std::string yes(bool b) {
      return b ? "ok" : "FAIL";
    }

    std::vector<Subset> subsemigroups(Semigroup const& s) {
      std::vector<Subset> out;
      std::size_t const   n = s.size();
      for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << n); ++mask) {
        Subset x(n);
        for (index_t i = 0; i < n; ++i) {
          if (mask >> i & 1) {
            x.insert(i);
          }
        }
        if (is_closed(s, x)) {
          out.push_back(std::move(x));
        }
      }
      return out;
    }

    void collect_group_leaves(DecompTree const& t,
                              std::vector<Semigroup>& out) {
      if (t.kind == NodeKind::SimpleGroup) {
        out.push_back(t.target);
      }
      for (auto const& c : t.children) {
        collect_group_leaves(c, out);
      }
    }

    void walk_trace(WitnessTrace const& t, std::size_t& case3,
                    std::size_t& bound_ok, std::vector<SubgroupUnion>& lemmas) {
      if (t.tag == CaseTag::Three && t.side == Split::Left) {
        ++case3;
        bound_ok += t.bound_ok ? 1 : 0;
      }
      lemmas.insert(lemmas.end(), t.lemma.begin(), t.lemma.end());
      for (auto const& c : t.children) {
        walk_trace(c, case3, bound_ok, lemmas);
      }
    }

    // The group of units of eSe.
    Subsemigroup maximal_subgroup(Semigroup const& s, index_t e) {
      Subset units(s.size());
      for (index_t x = 0; x < s.size(); ++x) {
        if (s.product(s.product(e, x), e) != x) {
          continue;
        }
        for (index_t y = 0; y < s.size(); ++y) {
          if (s.product(x, y) == e && s.product(y, x) == e) {
            units.insert(x);
            break;
          }
        }
      }
      return subsemigroup(s, units);
    }

    PhiHom generator_phi(Semigroup const& s) {
      PhiHom phi{{}, s, {}};
      for (auto g : minimal_generating_set(s)) {
        phi.alphabet.push_back(s.label(g));
        phi.images.push_back(Subset::singleton(s.size(), g));
      }
      return phi;
    }

    WitnessOptions witness_options(AcceptanceOptions const& opts) {
      WitnessOptions w;
      w.limits = opts.limits;
      return w;
    }

    CriterionResult merge_words(AcceptanceOptions const& opts) {
      CriterionResult r{1, "merge: f(psi_M(w)) = tau(w) for |w| <= "
                               + std::to_string(opts.merge_len), true, {}};
      auto check = [&](MergeInput in) {
        auto m   = build_merge(std::move(in), opts.limits.closure);
        auto rep = verify_merge(m, opts.merge_len);
        r.pass   = r.pass && rep.counterexamples.empty();
        return rep;
      };
      for (auto const& [name, s, t1, t2] :
           {std::tuple{std::string("LZ2"), fixtures::left_zero(2), 0U, 1U},
            std::tuple{std::string("U1"), fixtures::u1(), 0U, 1U}}) {
        auto cover = cover_input(s, Subset::singleton(2, t1),
                                 Subset::singleton(2, t2));
        auto rep   = check(cover.input);
        r.details.push_back(name + ": |im psi_M|=" + std::to_string(rep.generated_size)
                            + " words=" + std::to_string(rep.words_checked)
                            + " counterexamples="
                            + std::to_string(rep.counterexamples.size()));
      }
      std::mt19937_64 rng(opts.seed);
      std::size_t     words = 0, bad = 0, largest = 0;
      for (std::size_t k = 0; k < opts.random_merges; ++k) {
        auto m   = build_merge(random_merge_input(rng, 3), opts.limits.closure);
        auto rep = verify_merge(m, opts.merge_len);
        words += rep.words_checked;
        bad += rep.counterexamples.size();
        largest = std::max(largest, rep.generated_size);
      }
      r.pass = r.pass && bad == 0;
      r.details.push_back("random: inputs=" + std::to_string(opts.random_merges)
                          + " words=" + std::to_string(words)
                          + " counterexamples=" + std::to_string(bad)
                          + " max |im psi_M|=" + std::to_string(largest));
      return r;
    }

    CriterionResult cover_divisions(AcceptanceOptions const& opts) {
      CriterionResult r{2, "merge: division_from_cover over generating pairs",
                        true, {}};
      for (auto const& [name, s] : acceptance_corpus()) {
        if (s.size() > 4) {
          continue;
        }
        auto const  subs = subsemigroups(s);
        std::size_t pairs = 0, good = 0;
        for (auto const& t1 : subs) {
          for (auto const& t2 : subs) {
            if (generated_subset(s, t1 | t2).count() != s.size()) {
              continue;
            }
            ++pairs;
            auto div = division_from_cover(s, t1, t2, opts.limits.closure);
            if (is_division_witness(s, div.witness)) {
              ++good;
            }
          }
        }
        r.pass = r.pass && good == pairs;
        r.details.push_back(name + ": pairs=" + std::to_string(pairs)
                            + " verified=" + std::to_string(good));
      }
      return r;
    }

    CriterionResult decompositions(AcceptanceOptions const& opts) {
      CriterionResult r{3, "krd: verified decompositions", true, {}};
      for (auto const& [name, s] : acceptance_corpus()) {
        auto tree = kr_decompose(s, opts.limits);
        auto rep  = verify_tree(tree, opts.limits);
        std::vector<Semigroup> leaves;
        collect_group_leaves(tree, leaves);
        bool ok = rep.ok && leaves.size() == rep.group_leaves;
        if (is_aperiodic(s)) {
          ok = ok && rep.group_leaves == 0;
        }
        if (name == "Z4") {
          ok = ok && leaves.size() == 2;
          for (auto const& g : leaves) {
            ok = ok && are_isomorphic_groups(g, fixtures::cyclic_group(2));
          }
        }
        r.pass = r.pass && ok;
        r.details.push_back(name + ": " + yes(ok) + " nodes="
                            + std::to_string(rep.nodes.size()) + " depth="
                            + std::to_string(rep.depth) + " U1-leaves="
                            + std::to_string(rep.semilattice_leaves)
                            + " group-leaves="
                            + std::to_string(rep.group_leaves));
      }
      return r;
    }

    CriterionResult pointlike_equality(AcceptanceOptions const& opts) {
      CriterionResult r{4, "witness: certified family equals the fixpoint",
                        true, {}};
      for (auto const& [name, s] : acceptance_corpus()) {
        auto cert = pointlikes_with_certificate(s, witness_options(opts));
        bool ok   = cert.ok();
        if (is_aperiodic(s)) {
          ok = ok && cert.family == singletons(s);
        }
        if (is_group(s)) {
          ok = ok && cert.family.size() == (std::size_t(1) << s.size()) - 1;
        }
        r.pass = r.pass && ok;
        r.details.push_back(name + ": " + yes(ok) + " |PL|="
                            + std::to_string(cert.family.size())
                            + " |T|=" + std::to_string(cert.witness.t.size()));
      }
      return r;
    }

    CriterionResult depth_bound(AcceptanceOptions const& opts) {
      CriterionResult r{5, "witness: depth <= k(phi) and phi0 bounds", true,
                        {}};
      bool const formula = k_formula(2, 3) == 15;
      r.pass             = formula;
      r.details.push_back("k(2 images, |S_phi|=3) = " + k_formula(2, 3).str());
      for (auto const& [name, s] : acceptance_corpus()) {
        auto        cert = pointlikes_with_certificate(s, witness_options(opts));
        std::size_t case3 = 0, bound_ok = 0;
        std::vector<SubgroupUnion> lemmas;
        walk_trace(cert.witness.trace, case3, bound_ok, lemmas);
        bool ok = cert.depth_within_bound && case3 == bound_ok;
        if (name == "null3") {
          ok = ok && cert.k_proof == 15;
        }
        r.pass = r.pass && ok;
        r.details.push_back(name + ": " + yes(ok) + " depth="
                            + std::to_string(cert.witness.depth)
                            + " k=" + cert.k_proof.str() + " k(alphabet)="
                            + cert.k_alphabet.str() + " case3-bounds="
                            + std::to_string(bound_ok) + "/"
                            + std::to_string(case3));
      }
      return r;
    }

    CriterionResult subgroup_unions(AcceptanceOptions const& opts) {
      CriterionResult r{6, "psat: unions of subgroups of U_phi", true, {}};
      for (auto const& [name, s] : acceptance_corpus()) {
        auto const phi = generator_phi(s);
        auto const u   = u_phi(phi, opts.limits.closure);
        std::size_t checked = 0, passed = 0, nontrivial = 0;
        std::vector<std::vector<Subset>> seen;
        for (index_t e = 0; e < u.semigroup.size(); ++e) {
          if (!is_idempotent(u.semigroup, e)) {
            continue;
          }
          auto const h = maximal_subgroup(u.semigroup, e);
          for (auto const& sub : subgroups(h.semigroup, opts.limits.group)) {
            std::vector<Subset> members;
            sub.for_each([&](index_t k) {
              members.push_back(u.elements[h.to_parent[k]]);
            });
            std::sort(members.begin(), members.end(), canonical_less);
            if (std::find(seen.begin(), seen.end(), members) != seen.end()) {
              continue;
            }
            seen.push_back(members);
            ++checked;
            nontrivial += members.size() > 1 ? 1 : 0;
            passed += subgroup_union_check(s, members).ok ? 1 : 0;
          }
        }
        auto cert = pointlikes_with_certificate(s, witness_options(opts));
        std::size_t case3 = 0, bound_ok = 0;
        std::vector<SubgroupUnion> lemmas;
        walk_trace(cert.witness.trace, case3, bound_ok, lemmas);
        std::size_t lemma_ok = 0;
        for (auto const& l : lemmas) {
          lemma_ok += l.ok ? 1 : 0;
        }
        bool ok = passed == checked && lemma_ok == lemmas.size();
        if (name == "Z2" || name == "Z3" || name == "Z4") {
          ok = ok && nontrivial > 0;
        }
        r.pass = r.pass && ok;
        r.details.push_back(name + ": " + yes(ok) + " subgroups="
                            + std::to_string(passed) + "/"
                            + std::to_string(checked) + " nontrivial="
                            + std::to_string(nontrivial) + " trace-lemmas="
                            + std::to_string(lemma_ok) + "/"
                            + std::to_string(lemmas.size()));
      }
      return r;
    }

    CriterionResult constructions(AcceptanceOptions const& opts) {
      CriterionResult r{7, "sgcore: zero adjunction, flat embedding, triple "
                           "product",
                        true, {}};
      for (auto const& [name, s] : acceptance_corpus()) {
        auto const zero = zero_adjunction_witness(s);
        bool const z    = zero.is_hom() && zero.is_surjective();
        auto const flat = flat_embed(s, fixtures::chain(s.size() + 1),
                                     opts.limits.closure);
        bool const f    = flat.hom.is_hom() && flat.hom.is_injective()
                       && flat.quotient.is_hom() && flat.quotient.is_surjective()
                       && is_division_witness(flat.quotient.cod, flat.division);
        bool       t    = true;
        for (auto const& act : {trivial_actions(s), zero_actions(s)}) {
          t = t && !act.violation().has_value()
              && triple_product(act).size()
                     == act.right_actor.size() * act.carrier.size()
                            * act.left_actor.size();
        }
        auto const ts = triple_product(trivial_actions(s));
        t             = t && ts.table() == s.table();
        bool const ok = z && f && t;
        r.pass        = r.pass && ok;
        r.details.push_back(name + ": zero=" + yes(z) + " flat=" + yes(f)
                            + " (|Tb|=" + std::to_string(flat.quotient.cod.size())
                            + " formal=" + std::to_string(flat.formal.size())
                            + " |cod|=" + std::to_string(flat.hom.cod.size())
                            + (flat.embeds() ? " embeds" : " divides")
                            + ") triple=" + yes(t));
      }
      return r;
    }

    CriterionResult separation(AcceptanceOptions const& opts) {
      CriterionResult r{8, "langsep: separation verdicts", true, {}};
      struct Case {
        char const* l1;
        char const* l2;
        bool        separable;
      };
      for (auto const& c : {Case{"even", "odd", false},
                            Case{"a_first", "b_first", true}}) {
        auto const d1  = dfa_fixture(c.l1);
        auto const d2  = dfa_fixture(c.l2);
        auto const rec = build_recognizer(d1, d2, opts.limits.closure);
        bool const sound = !recognizer_mismatch(d1, d2, rec, 6).has_value();
        auto const v     = decide_fo_separability(d1, d2, opts.limits);
        bool       ok    = sound && v.separable == c.separable;
        if (!c.separable) {
          ok = ok && v.pair && v.pair->first != v.pair->second;
        }
        r.pass = r.pass && ok;
        r.details.push_back(std::string(c.l1) + " vs " + c.l2 + ": "
                            + format_verdict(d1.alphabet, v) + " |S|="
                            + std::to_string(rec.s.size()) + " recognizer="
                            + yes(sound));
      }
      return r;
    }

  }  // namespace

  std::string_view dfa_text(std::string_view name) {
    static std::map<std::string_view, std::string_view> const texts{
        {"even", kEven},
        {"odd", kOdd},
        {"a_first", kAFirst},
        {"b_first", kBFirst},
        {"a_plus", kAPlus}};
    auto it = texts.find(name);
    if (it == texts.end()) {
      throw PreconditionError("langsep: unknown DFA fixture '"
                              + std::string(name) + "'");
    }
    return it->second;
  }

  Dfa dfa_fixture(std::string_view name) {
    return parse_dfa(dfa_text(name));
  }

  std::vector<fixtures::Named> acceptance_corpus() {
    auto out = fixtures::corpus();
    for (auto const& [a, b] : {std::pair{"even", "odd"},
                               std::pair{"a_first", "b_first"}}) {
      out.push_back({std::string("TS(") + a + "," + b + ")",
                     build_recognizer(dfa_fixture(a), dfa_fixture(b)).s});
    }
    return out;
  }

  CriterionResult run_criterion(int id, AcceptanceOptions const& opts) {
    switch (id) {
      case 1:
        return merge_words(opts);
      case 2:
        return cover_divisions(opts);
      case 3:
        return decompositions(opts);
      case 4:
        return pointlike_equality(opts);
      case 5:
        return depth_bound(opts);
      case 6:
        return subgroup_unions(opts);
      case 7:
        return constructions(opts);
      case 8:
        return separation(opts);
      default:
        throw PreconditionError("cli: no acceptance criterion "
                                + std::to_string(id));
    }
  }

  std::string format_result(CriterionResult const& r) {
    std::string out = "criterion " + std::to_string(r.id) + ": "
                      + (r.pass ? "PASS" : "FAIL") + " " + r.title + "\n";
    for (auto const& d : r.details) {
      out += "  " + d + "\n";
    }
    return out;
  }

  std::vector<CriterionResult> run_selftest(AcceptanceOptions const& opts) {
    std::vector<CriterionResult> out;
    std::string                  first, second;
    for (int id = 1; id <= kCriteria; ++id) {
      out.push_back(run_criterion(id, opts));
      first += format_result(out.back());
    }
    for (int id = 1; id <= kCriteria; ++id) {
      second += format_result(run_criterion(id, opts));
    }
    out.push_back({9, "determinism: repeated run is byte-identical",
                   first == second,
                   {"report bytes=" + std::to_string(first.size())}});
    return out;
  }

  std::string format_report(std::vector<CriterionResult> const& results) {
    std::string out;
    std::size_t passed = 0;
    for (auto const& r : results) {
      out += format_result(r);
      passed += r.pass ? 1 : 0;
    }
    out += "selftest: " + std::to_string(passed) + "/"
           + std::to_string(results.size()) + " criteria passed\n";
    return out;
  }

}  // namespace sgkit
