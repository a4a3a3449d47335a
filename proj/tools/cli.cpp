#include "sgkit/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "sgkit/acceptance.hpp"
#include "sgkit/io.hpp"
#include "sgkit/krd.hpp"
#include "sgkit/langsep.hpp"
#include "sgkit/merge.hpp"
#include "sgkit/psat.hpp"
#include "sgkit/witness.hpp"

namespace sgkit {

  namespace {

    struct Plan {
      std::string              command;
      std::vector<std::string> inputs;
      std::string              output;
      std::string              t1, t2;
      std::size_t              cap        = Limits{}.closure;
      std::size_t              family_cap = Limits{}.family;
      std::size_t              max_len    = 6;
      std::size_t              random     = 0;
      std::uint64_t            seed       = 0x5eed;
      bool                     verbose    = false;
      bool                     quiet      = false;

      Limits limits() const {
        Limits l;
        l.closure = cap;
        l.family  = family_cap;
        return l;
      }
    };

    Semigroup load_sg(std::string const& path) {
      return parse_sg(read_file(path));
    }

    // Comma-separated labels or indices of s.
    Subset parse_elements(Semigroup const& s, std::string const& text) {
      Subset            out(s.size());
      std::stringstream in(text);
      for (std::string tok; std::getline(in, tok, ',');) {
        bool found = false;
        for (index_t i = 0; i < s.size() && !found; ++i) {
          if (s.label(i) == tok) {
            out.insert(i);
            found = true;
          }
        }
        if (!found) {
          throw PreconditionError("cli: no element '" + tok + "' in the "
                                  "semigroup");
        }
      }
      if (out.empty()) {
        throw PreconditionError("cli: empty element list");
      }
      return out;
    }

    int cmd_gen(Plan const& p, std::ostream& out) {
      auto gens = parse_tgen(read_file(p.inputs[0]));
      auto cl   = transformation_closure(gens, p.cap);
      auto text = format_sg(cl.semigroup);
      if (p.output.empty()) {
        out << text;
      } else {
        std::ofstream file(p.output);
        if (!(file << text)) {
          throw PreconditionError("cli: cannot write " + p.output);
        }
        if (!p.quiet) {
          out << "wrote " << p.output << " (" << cl.semigroup.size()
              << " elements)\n";
        }
      }
      return kExitOk;
    }

    int cmd_pointlikes(Plan const& p, std::ostream& out) {
      auto s   = load_sg(p.inputs[0]);
      auto sat = saturate(s, singletons(s), p.family_cap);
      out << format_family(s, sat.family);
      if (!p.quiet) {
        out << "count=" << sat.family.size() << "\n";
      }
      if (p.verbose) {
        out << "derivations=" << sat.trace.size() << " replay="
            << (replay(s, singletons(s), sat).empty() ? "ok" : "FAIL") << "\n";
      }
      return kExitOk;
    }

    int cmd_witness(Plan const& p, std::ostream& out) {
      auto           s = load_sg(p.inputs[0]);
      WitnessOptions opts;
      opts.limits     = p.limits();
      opts.sample_len = p.max_len;
      auto cert       = pointlikes_with_certificate(s, opts);
      auto sat        = henckell_pointlikes(s, p.family_cap);
      out << "|T|=" << cert.witness.t.size() << "\n"
          << "depth=" << cert.witness.depth << "\n"
          << "k(phi)=" << cert.k_proof << "\n"
          << "k(alphabet)=" << cert.k_alphabet << "\n";
      for (index_t t = 0; t < cert.rho.fibers.size(); ++t) {
        out << "fiber " << t << " "
            << format_subset(s, cert.rho.fibers[t]) << " sat="
            << (family_contains(sat, cert.rho.fibers[t]) ? "yes" : "no")
            << "\n";
      }
      if (p.verbose) {
        out << format_trace(s, cert.witness.trace);
      }
      out << "relational morphism: "
          << (cert.full_and_multiplicative ? "ok" : "FAIL") << "\n"
          << "maximal pointlikes covered: "
          << (cert.maximal_covered ? "ok" : "FAIL") << "\n"
          << "depth <= k(phi): " << (cert.depth_within_bound ? "ok" : "FAIL")
          << "\n"
          << "cross-validation: "
          << (cert.matches_fixpoint ? "agrees" : "DISAGREES") << "\n";
      return cert.ok() ? kExitOk : kExitVerification;
    }

    int cmd_decompose(Plan const& p, std::ostream& out) {
      auto s      = load_sg(p.inputs[0]);
      auto limits = p.limits();
      auto tree   = kr_decompose(s, limits);
      auto report = verify_tree(tree, limits);
      out << format_certificate(tree, report);
      out << "verify_tree: " << (report.ok ? "ok" : "FAIL") << " depth="
          << report.depth << " U1-leaves=" << report.semilattice_leaves
          << " group-leaves=" << report.group_leaves << "\n";
      if (p.verbose) {
        for (auto const& id : report.group_leaf_ids) {
          out << "group leaf " << id << "\n";
        }
      }
      return report.ok ? kExitOk : kExitVerification;
    }

    void merge_line(std::ostream& out, std::string const& id,
                    MergeReport const& r) {
      out << "fixture=" << id << " |im psi_M|=" << r.generated_size
          << " words=" << r.words_checked
          << " counterexamples=" << r.counterexamples.size() << "\n";
    }

    int cmd_merge_check(Plan const& p, std::ostream& out) {
      std::size_t bad = 0;
      if (!p.inputs.empty()) {
        auto   s = load_sg(p.inputs[0]);
        Subset t1(s.size()), t2(s.size());
        if (p.t1.empty() != p.t2.empty()) {
          throw PreconditionError("cli: --t1 and --t2 go together");
        }
        if (!p.t1.empty()) {
          t1 = generated_subset(s, parse_elements(s, p.t1));
          t2 = generated_subset(s, parse_elements(s, p.t2));
        } else {
          // First generator against the rest.
          auto gens = minimal_generating_set(s);
          t1        = generated_subset(s, Subset::singleton(s.size(), gens[0]));
          Subset rest(s.size());
          for (std::size_t k = 1; k < gens.size(); ++k) {
            rest.insert(gens[k]);
          }
          t2 = rest.empty() ? t1 : generated_subset(s, rest);
        }
        auto div = division_from_cover(s, t1, t2, p.cap);
        auto rep = verify_merge(div.merge, p.max_len);
        bad += rep.counterexamples.size();
        merge_line(out, table_id(s) + " t1=" + format_subset(s, t1) + " t2="
                            + format_subset(s, t2),
                   rep);
        out << "division: "
            << (is_division_witness(s, div.witness) ? "ok" : "FAIL") << "\n";
        if (p.verbose) {
          for (auto const& w : rep.counterexamples) {
            out << "counterexample "
                << format_word(div.merge.input().alphabet, w) << "\n";
          }
        }
      }
      std::mt19937_64 rng(p.seed);
      for (std::size_t k = 0; k < p.random; ++k) {
        auto m   = build_merge(random_merge_input(rng, 3), p.cap);
        auto rep = verify_merge(m, p.max_len);
        bad += rep.counterexamples.size();
        merge_line(out, "random#" + std::to_string(k), rep);
      }
      return bad == 0 ? kExitOk : kExitVerification;
    }

    int cmd_separate(Plan const& p, std::ostream& out) {
      auto d1 = parse_dfa(read_file(p.inputs[0]));
      auto d2 = parse_dfa(read_file(p.inputs[1]));
      auto v  = decide_fo_separability(d1, d2, p.limits());
      out << format_verdict(d1.alphabet, v) << "\n";
      if (p.verbose && !v.common_word) {
        out << "recognizer |S|=" << v.recognizer_size
            << " aperiodic=" << (v.aperiodic ? "yes" : "no") << "\n";
      }
      return v.separable ? kExitOk : kExitInseparable;
    }

    int cmd_selftest(Plan const& p, std::ostream& out) {
      AcceptanceOptions opts;
      opts.limits    = p.limits();
      opts.merge_len = p.max_len;
      auto results   = run_selftest(opts);
      out << format_report(results);
      for (auto const& r : results) {
        if (!r.pass) {
          return kExitVerification;
        }
      }
      return kExitOk;
    }

  }  // namespace

  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err) {
    Plan     plan;
    CLI::App app{"Finite semigroup toolkit: pointlikes, decompositions and "
                 "separation",
                 "sgkit"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();

    auto common = [&](CLI::App* sub) {
      sub->add_option("--cap", plan.cap, "closure size cap")
          ->check(CLI::PositiveNumber);
      sub->add_option("--family-cap", plan.family_cap, "subset family cap")
          ->check(CLI::PositiveNumber);
      auto* v = sub->add_flag("-v,--verbose", plan.verbose, "more detail");
      auto* q = sub->add_flag("-q,--quiet", plan.quiet, "less detail");
      v->excludes(q);
    };
    auto file = [&](CLI::App* sub, char const* what, std::size_t count) {
      sub->add_option("inputs", plan.inputs, what)
          ->required()
          ->expected(static_cast<int>(count))
          ->check(CLI::ExistingFile);
    };

    auto* gen = app.add_subcommand("gen", "closure of a .tgen file as .sg");
    file(gen, ".tgen file", 1);
    gen->add_option("-o,--out", plan.output, "write the table here");
    common(gen);

    auto* pl = app.add_subcommand("pointlikes", "aperiodic pointlike sets");
    file(pl, ".sg file", 1);
    common(pl);

    auto* wit = app.add_subcommand("witness", "certified pointlike sets");
    file(wit, ".sg file", 1);
    wit->add_option("--max-len", plan.max_len, "sampled word length")
        ->check(CLI::PositiveNumber);
    common(wit);

    auto* dec = app.add_subcommand("decompose", "verified decomposition");
    file(dec, ".sg file", 1);
    common(dec);

    auto* mc = app.add_subcommand("merge-check", "merge construction check");
    mc->add_option("inputs", plan.inputs, ".sg file")
        ->expected(0, 1)
        ->check(CLI::ExistingFile);
    mc->add_option("--t1", plan.t1, "elements generating T1");
    mc->add_option("--t2", plan.t2, "elements generating T2");
    mc->add_option("--random", plan.random, "random merge inputs to check");
    mc->add_option("--seed", plan.seed, "seed for --random");
    mc->add_option("--max-len", plan.max_len, "longest word checked")
        ->check(CLI::PositiveNumber);
    common(mc);

    auto* sep = app.add_subcommand("separate", "FO separability of two DFAs");
    file(sep, "two .dfa files", 2);
    common(sep);

    auto* st = app.add_subcommand("selftest", "acceptance suite");
    st->add_option("--max-len", plan.max_len, "merge word length")
        ->check(CLI::PositiveNumber);
    common(st);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return kExitOk;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return kExitOk;
    } catch (CLI::ParseError const& e) {
      err << "cli: " << e.what() << "\n";
      return kExitError;
    }
    if (mc->parsed() && plan.inputs.empty() && plan.random == 0) {
      err << "cli: merge-check needs an .sg file or --random N\n";
      return kExitError;
    }

    try {
      if (gen->parsed()) {
        return cmd_gen(plan, out);
      }
      if (pl->parsed()) {
        return cmd_pointlikes(plan, out);
      }
      if (wit->parsed()) {
        return cmd_witness(plan, out);
      }
      if (dec->parsed()) {
        return cmd_decompose(plan, out);
      }
      if (mc->parsed()) {
        return cmd_merge_check(plan, out);
      }
      if (sep->parsed()) {
        return cmd_separate(plan, out);
      }
      return cmd_selftest(plan, out);
    } catch (VerificationError const& e) {
      err << e.what() << "\n";
      return kExitVerification;
    } catch (Error const& e) {
      err << e.what() << "\n";
      return kExitError;
    }
  }

}  // namespace sgkit
