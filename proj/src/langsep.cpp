#include "sgkit/langsep.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <sstream>

namespace sgkit {

  namespace {

    [[noreturn]] void fail_line(std::size_t line, std::string const& msg) {
      throw ParseError("langsep: line " + std::to_string(line) + ": " + msg);
    }

    index_t state_number(std::string const& tok, std::size_t n,
                         std::size_t line) {
      std::size_t v   = 0;
      auto        res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) {
        fail_line(line, "expected a state number, got '" + tok + "'");
      }
      if (v >= n) {
        fail_line(line, "state " + tok + " out of range");
      }
      return static_cast<index_t>(v);
    }

  }  // namespace

  bool Dfa::accepts(Word const& w) const {
    index_t q = init;
    for (auto a : w) {
      q = step(q, a);
    }
    return finals.contains(q);
  }

  void Dfa::validate() const {
    if (states == 0 || alphabet.empty()) {
      throw PreconditionError("langsep: a DFA needs states and letters");
    }
    if (init >= states || finals.universe() != states
        || delta.size() != states * alphabet.size()) {
      throw PreconditionError("langsep: malformed DFA");
    }
    for (auto q : delta) {
      if (q >= states) {
        throw PreconditionError("langsep: transition target out of range");
      }
    }
  }

  Dfa parse_dfa(std::string_view text) {
    Dfa                             d;
    std::optional<std::size_t>      states_line, init_line;
    bool                            have_alphabet = false;
    std::vector<std::size_t>        finals;
    std::map<std::string, letter_t> letter;
    struct Edge {
      std::size_t line;
      std::string q, a, r;
    };
    std::vector<Edge> edges;

    std::istringstream in{std::string(text)};
    std::string        raw;
    std::size_t        number = 0;
    std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;
    while (std::getline(in, raw)) {
      ++number;
      if (auto hash = raw.find('#'); hash != std::string::npos) {
        raw.resize(hash);
      }
      std::istringstream       words(raw);
      std::vector<std::string> tokens;
      for (std::string t; words >> t;) {
        tokens.push_back(t);
      }
      if (!tokens.empty()) {
        lines.emplace_back(number, std::move(tokens));
      }
    }

    std::vector<std::string> init_tokens, final_tokens;
    std::size_t              final_line = 0;
    for (auto& [line, tok] : lines) {
      auto const& key = tok[0];
      if (key == "states") {
        if (states_line || tok.size() != 2) {
          fail_line(line, "expected a single `states <n>` line");
        }
        std::size_t v   = 0;
        auto        res = std::from_chars(tok[1].data(),
                                   tok[1].data() + tok[1].size(), v);
        if (res.ec != std::errc{} || res.ptr != tok[1].data() + tok[1].size()
            || v == 0) {
          fail_line(line, "expected a positive state count");
        }
        d.states    = v;
        states_line = line;
      } else if (key == "alphabet") {
        if (have_alphabet || tok.size() < 2) {
          fail_line(line, "expected a single nonempty `alphabet` line");
        }
        for (std::size_t k = 1; k < tok.size(); ++k) {
          if (!letter.emplace(tok[k], letter_t(k - 1)).second) {
            fail_line(line, "duplicate letter '" + tok[k] + "'");
          }
          d.alphabet.push_back(tok[k]);
        }
        have_alphabet = true;
      } else if (key == "init") {
        if (init_line || tok.size() != 2) {
          fail_line(line, "expected a single `init <q>` line");
        }
        init_tokens = tok;
        init_line   = line;
      } else if (key == "final") {
        if (final_line != 0) {
          fail_line(line, "duplicate `final` line");
        }
        final_tokens = tok;
        final_line   = line;
      } else if (key == "trans") {
        if (tok.size() != 4) {
          fail_line(line, "expected `trans <q> <letter> <q'>`");
        }
        edges.push_back({line, tok[1], tok[2], tok[3]});
      } else {
        fail_line(line, "unknown directive '" + key + "'");
      }
    }
    if (!states_line || !have_alphabet || !init_line) {
      throw ParseError("langsep: missing `states`, `alphabet` or `init`");
    }
    d.init   = state_number(init_tokens[1], d.states, *init_line);
    d.finals = Subset(d.states);
    for (std::size_t k = 1; k < final_tokens.size(); ++k) {
      d.finals.insert(state_number(final_tokens[k], d.states, final_line));
    }
    std::size_t const    k = d.alphabet.size();
    index_t const        unset = static_cast<index_t>(-1);
    d.delta.assign(d.states * k, unset);
    for (auto const& e : edges) {
      index_t q = state_number(e.q, d.states, e.line);
      auto    a = letter.find(e.a);
      if (a == letter.end()) {
        fail_line(e.line, "unknown letter '" + e.a + "'");
      }
      index_t r = state_number(e.r, d.states, e.line);
      auto&   slot = d.delta[q * k + a->second];
      if (slot != unset) {
        fail_line(e.line, "duplicate transition for (" + e.q + ", " + e.a
                              + ")");
      }
      slot = r;
    }
    for (index_t q = 0; q < d.states; ++q) {
      for (letter_t a = 0; a < k; ++a) {
        if (d.delta[q * k + a] == unset) {
          throw ParseError("langsep: missing transition for (" + std::to_string(q)
                           + ", " + d.alphabet[a] + ")");
        }
      }
    }
    return d;
  }

  namespace {

    // Letter map of d2 onto the alphabet order of d1.
    std::vector<letter_t> align(Dfa const& d1, Dfa const& d2) {
      auto a1 = d1.alphabet, a2 = d2.alphabet;
      std::sort(a1.begin(), a1.end());
      std::sort(a2.begin(), a2.end());
      if (a1 != a2) {
        throw PreconditionError("langsep: the DFAs have different alphabets");
      }
      std::vector<letter_t> out;
      for (auto const& l : d1.alphabet) {
        out.push_back(static_cast<letter_t>(
            std::find(d2.alphabet.begin(), d2.alphabet.end(), l)
            - d2.alphabet.begin()));
      }
      return out;
    }

  }  // namespace

  std::string format_word(std::vector<std::string> const& alphabet,
                          Word const&                     w) {
    bool const single = std::all_of(alphabet.begin(), alphabet.end(),
                                    [](auto const& l) { return l.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!single && i > 0) {
        out += '.';
      }
      out += alphabet[w[i]];
    }
    return out;
  }

  Recognizer build_recognizer(Dfa const& d1, Dfa const& d2, std::size_t cap) {
    d1.validate();
    d2.validate();
    auto const        map2 = align(d1, d2);
    std::size_t const k    = d1.alphabet.size();

    auto const trivial = Semigroup::from_table(1, {0});
    Recognizer r{{}, trivial, FreeHom{d1.alphabet, trivial, {}}, {}, {}, {}};
    std::map<std::pair<index_t, index_t>, index_t> id;
    r.product_states.push_back({d1.init, d2.init});
    id[r.product_states[0]] = 0;
    for (std::size_t i = 0; i < r.product_states.size(); ++i) {
      auto [p, q] = r.product_states[i];
      for (letter_t a = 0; a < k; ++a) {
        std::pair<index_t, index_t> next{d1.step(p, a), d2.step(q, map2[a])};
        if (id.emplace(next, index_t(r.product_states.size())).second) {
          r.product_states.push_back(next);
          if (r.product_states.size() > cap) {
            throw ResourceError("langsep: product automaton exceeds cap "
                                + std::to_string(cap));
          }
        }
      }
    }
    std::vector<std::vector<index_t>> gens(k);
    for (letter_t a = 0; a < k; ++a) {
      for (auto [p, q] : r.product_states) {
        gens[a].push_back(id.at({d1.step(p, a), d2.step(q, map2[a])}));
      }
    }
    auto cl = transformation_closure(gens, cap);
    std::vector<std::string> labels;
    for (index_t i = 0; i < cl.elements.size(); ++i) {
      labels.push_back(format_word(d1.alphabet, word_of(cl, i)));
    }
    r.s   = cl.semigroup.with_labels(std::move(labels));
    r.phi = FreeHom{d1.alphabet, r.s, cl.gen_indices};
    r.f1  = Subset(r.s.size());
    r.f2  = Subset(r.s.size());
    for (index_t i = 0; i < cl.elements.size(); ++i) {
      auto [p, q] = r.product_states[cl.elements[i][0]];
      if (d1.finals.contains(p)) {
        r.f1.insert(i);
      }
      if (d2.finals.contains(q)) {
        r.f2.insert(i);
      }
    }
    r.transformations = std::move(cl.elements);
    return r;
  }

  std::optional<Word> recognizer_mismatch(Dfa const& d1, Dfa const& d2,
                                          Recognizer const& r,
                                          std::size_t       max_len) {
    auto const          map2 = align(d1, d2);
    std::optional<Word> bad;
    Word                w;
    auto visit = [&](auto&& self, index_t q1, index_t q2, index_t s) -> void {
      if (bad) {
        return;
      }
      if (d1.finals.contains(q1) != r.f1.contains(s)
          || d2.finals.contains(q2) != r.f2.contains(s)) {
        bad = w;
        return;
      }
      if (w.size() == max_len) {
        return;
      }
      for (letter_t a = 0; a < d1.alphabet.size(); ++a) {
        w.push_back(a);
        self(self, d1.step(q1, a), d2.step(q2, map2[a]),
             r.s.product(s, r.phi.gen_map[a]));
        w.pop_back();
      }
    };
    for (letter_t a = 0; a < d1.alphabet.size(); ++a) {
      w = {a};
      visit(visit, d1.step(d1.init, a), d2.step(d2.init, map2[a]),
            r.phi.gen_map[a]);
    }
    return bad;
  }

  namespace {

    // Shortest nonempty word accepted by both, breadth first.
    std::optional<Word> common_word(Dfa const& d1, Dfa const& d2) {
      auto const                                        map2 = align(d1, d2);
      std::size_t const                                 k    = d1.alphabet.size();
      std::map<std::pair<index_t, index_t>, std::size_t> seen;
      std::vector<std::pair<index_t, index_t>> order;
      std::vector<std::size_t>                parent;
      std::vector<letter_t>                   via;
      std::deque<std::size_t>                 queue;
      auto push = [&](std::pair<index_t, index_t> st, std::size_t from,
                      letter_t a) {
        if (seen.emplace(st, order.size()).second) {
          order.push_back(st);
          parent.push_back(from);
          via.push_back(a);
          queue.push_back(order.size() - 1);
        }
      };
      std::size_t const root = static_cast<std::size_t>(-1);
      for (letter_t a = 0; a < k; ++a) {
        push({d1.step(d1.init, a), d2.step(d2.init, map2[a])}, root, a);
      }
      while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        auto [p, q] = order[i];
        if (d1.finals.contains(p) && d2.finals.contains(q)) {
          Word w;
          for (std::size_t j = i; j != root; j = parent[j]) {
            w.push_back(via[j]);
          }
          return Word(w.rbegin(), w.rend());
        }
        for (letter_t a = 0; a < k; ++a) {
          push({d1.step(p, a), d2.step(q, map2[a])}, i, a);
        }
      }
      return std::nullopt;
    }

  }  // namespace

  Separation decide_fo_separability(Dfa const& d1, Dfa const& d2,
                                    Limits const& limits) {
    d1.validate();
    d2.validate();
    if (d1.finals.contains(d1.init) || d2.finals.contains(d2.init)) {
      throw PreconditionError("langsep: the empty word is accepted; only "
                              "languages in A+ are supported");
    }
    Separation out;
    if (auto w = common_word(d1, d2)) {
      out.common_word = std::move(w);
      return out;
    }
    auto const rec = build_recognizer(d1, d2, limits.closure);
    out.recognizer_size = rec.s.size();
    out.aperiodic       = is_aperiodic(rec.s);
    if (!(rec.f1 & rec.f2).empty()) {
      throw VerificationError("langsep: F1 and F2 meet on disjoint languages");
    }
    // A pair is pointlike iff it lies in a member of the upward closure.
    auto const up
        = saturate_upward(rec.s, singletons(rec.s), limits.family).family;
    auto pointlike = [&](Subset const& x) {
      return std::any_of(up.begin(), up.end(),
                         [&](Subset const& m) { return x.is_subset_of(m); });
    };
    for (index_t s1 = 0; s1 < rec.s.size() && !out.pair; ++s1) {
      if (!rec.f1.contains(s1)) {
        continue;
      }
      for (index_t s2 = 0; s2 < rec.s.size(); ++s2) {
        if (rec.f2.contains(s2)
            && pointlike(Subset::of(rec.s.size(),
                                    std::vector<index_t>{s1, s2}))) {
          out.pair        = {s1, s2};
          out.pair_labels = {rec.s.label(s1), rec.s.label(s2)};
          break;
        }
      }
    }
    out.separable = !out.pair;
    return out;
  }

  std::string format_verdict(std::vector<std::string> const& alphabet,
                             Separation const&               s) {
    if (s.separable) {
      return "SEPARABLE";
    }
    if (s.common_word) {
      return "INSEPARABLE witness=word:" + format_word(alphabet, *s.common_word);
    }
    return "INSEPARABLE witness={" + s.pair_labels.first + ","
           + s.pair_labels.second + "}";
  }

}  // namespace sgkit
