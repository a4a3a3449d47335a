#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "sgkit/acceptance.hpp"
#include "sgkit/fixtures.hpp"
#include "sgkit/group.hpp"
#include "sgkit/io.hpp"
#include "sgkit/langsep.hpp"
#include "support.hpp"

using namespace sgkit;

namespace {

  Dfa fixture(char const* name) {
    return dfa_fixture(name);
  }

  // Initial state never final, so the empty word is rejected.
  Dfa random_dfa(std::mt19937_64& rng, std::vector<std::string> alphabet) {
    Dfa d;
    d.states   = 1 + rng() % 3;
    d.alphabet = std::move(alphabet);
    d.init     = 0;
    d.finals   = Subset(d.states);
    for (index_t q = 1; q < d.states; ++q) {
      if (rng() % 2) {
        d.finals.insert(q);
      }
    }
    for (std::size_t k = 0; k < d.states * d.alphabet.size(); ++k) {
      d.delta.push_back(static_cast<index_t>(rng() % d.states));
    }
    return d;
  }

  std::string read(std::string const& name) {
    return read_file(std::string(SGKIT_DATA_DIR) + "/" + name);
  }

}  // namespace

TEST_CASE("parsing") {
  auto d = parse_dfa(
      "states 2 # two\nalphabet a b\ninit 0\nfinal 1\n"
      "trans 0 a 1\ntrans 0 b 0\ntrans 1 a 1\ntrans 1 b 0\n");
  CHECK(d.states == 2);
  CHECK(d.alphabet == std::vector<std::string>{"a", "b"});
  CHECK(d.accepts(Word{1, 0}));
  CHECK_FALSE(d.accepts(Word{0, 1}));

  auto message = [](std::string const& text) {
    try {
      parse_dfa(text);
    } catch (ParseError const& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("states 1\nalphabet a\ninit 0\nfinal 0\ntrans 0 z 0\n")
        == "langsep: line 5: unknown letter 'z'");
  CHECK(message("states 1\nalphabet a\ninit 0\ntrans 0 a 0\ntrans 0 a 0\n")
            .find("line 5: duplicate transition for (0, a)")
        != std::string::npos);
  CHECK(message("states 2\nalphabet a\ninit 0\ntrans 0 a 1\n")
            .find("missing transition for (1, a)")
        != std::string::npos);
  CHECK_THROWS_AS(parse_dfa("states 1\nalphabet a\ninit 4\ntrans 0 a 0\n"),
                  ParseError);
}

TEST_CASE("data files match the built-in fixtures") {
  for (auto name : {"even", "odd", "a_first", "b_first", "a_plus"}) {
    CAPTURE(name);
    auto a = parse_dfa(read(std::string(name) + ".dfa"));
    auto b = fixture(name);
    CHECK(a.states == b.states);
    CHECK(a.alphabet == b.alphabet);
    CHECK(a.init == b.init);
    CHECK(a.finals == b.finals);
    CHECK(a.delta == b.delta);
  }
}

TEST_CASE("recognizers") {
  auto parity = build_recognizer(fixture("even"), fixture("odd"));
  CHECK(parity.s.size() == 2);
  CHECK(is_group(parity.s));
  CHECK_FALSE(recognizer_mismatch(fixture("even"), fixture("odd"), parity));

  auto one = parse_dfa("states 1\nalphabet a\ninit 0\ntrans 0 a 0\n");
  CHECK(build_recognizer(one, one).s.size() == 1);

  auto ab = build_recognizer(fixture("a_first"), fixture("b_first"));
  CHECK(is_aperiodic(ab.s));
  CHECK(ab.s.size() <= 6);
  CHECK_FALSE(recognizer_mismatch(fixture("a_first"), fixture("b_first"), ab));
}

TEST_CASE("verdicts") {
  auto eo = decide_fo_separability(fixture("even"), fixture("odd"));
  CHECK_FALSE(eo.separable);
  REQUIRE(eo.pair);
  CHECK(eo.pair->first != eo.pair->second);
  CHECK(format_verdict(fixture("even").alphabet, eo).rfind("INSEPARABLE witness={",
                                                          0)
        == 0);

  auto same = decide_fo_separability(fixture("a_plus"), fixture("a_plus"));
  CHECK_FALSE(same.separable);
  REQUIRE(same.common_word);
  CHECK(format_verdict(fixture("a_plus").alphabet, same)
        == "INSEPARABLE witness=word:a");

  auto ab = decide_fo_separability(fixture("a_first"), fixture("b_first"));
  CHECK(ab.separable);
  CHECK(format_verdict(fixture("a_first").alphabet, ab) == "SEPARABLE");

  auto ba = decide_fo_separability(fixture("b_first"), fixture("a_first"));
  CHECK(ba.separable);
  auto oe = decide_fo_separability(fixture("odd"), fixture("even"));
  CHECK_FALSE(oe.separable);
}

TEST_CASE("the empty word is rejected") {
  auto eps = parse_dfa("states 1\nalphabet a\ninit 0\nfinal 0\ntrans 0 a 0\n");
  CHECK_THROWS_AS(decide_fo_separability(eps, fixture("even")),
                  PreconditionError);
}

TEST_CASE("random automata") {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 200; ++k) {
    std::vector<std::string> alpha
        = rng() % 2 ? std::vector<std::string>{"a"}
                    : std::vector<std::string>{"a", "b"};
    auto d1 = random_dfa(rng, alpha);
    auto d2 = random_dfa(rng, alpha);
    auto r  = build_recognizer(d1, d2);
    CHECK_FALSE(recognizer_mismatch(d1, d2, r, 7));

    auto v = decide_fo_separability(d1, d2);
    CHECK(v.separable == decide_fo_separability(d2, d1).separable);
    if (v.separable) {
      // Separable languages are disjoint.
      Word w;
      auto rec = [&](auto&& self) -> void {
        if (!w.empty()) {
          CHECK_FALSE((d1.accepts(w) && d2.accepts(w)));
        }
        if (w.size() == 6) {
          return;
        }
        for (letter_t a = 0; a < alpha.size(); ++a) {
          w.push_back(a);
          self(self);
          w.pop_back();
        }
      };
      rec(rec);
    }
    if (v.common_word) {
      CHECK(d1.accepts(*v.common_word));
      CHECK(d2.accepts(*v.common_word));
    } else if (oracle::naive_aperiodic(r.s)) {
      CHECK(v.separable);
    }
    if (r.s.size() > 7) {
      continue;
    }
    auto pl   = oracle::naive_pointlikes(r.s);
    auto pair = [](index_t i, index_t j) {
      return (oracle::Mask(1) << i) | (oracle::Mask(1) << j);
    };
    if (v.pair) {
      CHECK(r.f1.contains(v.pair->first));
      CHECK(r.f2.contains(v.pair->second));
      CHECK(pl.count(pair(v.pair->first, v.pair->second)));
    } else if (!v.common_word) {
      // No pointlike pair meets F1 x F2.
      for (auto i : r.f1.elements()) {
        for (auto j : r.f2.elements()) {
          CHECK_FALSE(pl.count(pair(i, j)));
        }
      }
    }
  }
}
