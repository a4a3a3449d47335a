#include <doctest.h>

#include <random>

#include "sgkit/fixtures.hpp"
#include "sgkit/merge.hpp"
#include "support.hpp"

using namespace sgkit;
namespace fx = sgkit::fixtures;

namespace {

  // A1 = {a}, A2 = {b} over T1 = Z2, T2 = U1, T0 = C21 with a fixed chi.
  MergeInput small_input() {
    MergeInput in{{"a", "b"},
                  {Part::One, Part::Two},
                  {1, 1},
                  fx::cyclic_group(2),
                  fx::u1(),
                  fx::monogenic(2, 1),
                  {0, 1, 0, 0}};
    in.validate();
    return in;
  }

  // Straight from the definitions: w = v2 u v1 with v2 in A2*, v1 in A1*
  // maximal and u in (A1+ A2+)*.
  MergeTriple oracle_tau(MergeInput const& in, Word const& w) {
    std::size_t i = 0, j = w.size();
    while (i < j && in.part[w[i]] == Part::Two) {
      ++i;
    }
    while (j > i && in.part[w[j - 1]] == Part::One) {
      --j;
    }
    auto run = [&](Semigroup const& t, std::size_t from, std::size_t to) {
      index_t v = in.letter_image[w[from]];
      for (std::size_t k = from + 1; k < to; ++k) {
        v = t.product(v, in.letter_image[w[k]]);
      }
      return v + 1;
    };
    MergeTriple out{0, 0, 0};
    if (i > 0) {
      out.t2 = run(in.t2, 0, i);
    }
    if (j < w.size()) {
      out.t1 = run(in.t1, j, w.size());
    }
    // Blocks of u.
    std::size_t k = i;
    while (k < j) {
      std::size_t a = k;
      while (in.part[w[k]] == Part::One) {
        ++k;
      }
      std::size_t b = k;
      while (k < j && in.part[w[k]] == Part::Two) {
        ++k;
      }
      index_t c = in.chi_of(run(in.t1, a, b) - 1, run(in.t2, b, k) - 1);
      out.t0    = out.t0 == 0 ? c + 1 : in.t0.product(out.t0 - 1, c) + 1;
    }
    return out;
  }

  void all_words(std::size_t letters, std::size_t max_len, auto&& visit) {
    Word w;
    auto rec = [&](auto&& self) -> void {
      if (!w.empty()) {
        visit(w);
      }
      if (w.size() == max_len) {
        return;
      }
      for (letter_t a = 0; a < letters; ++a) {
        w.push_back(a);
        self(self);
        w.pop_back();
      }
    };
    rec(rec);
  }

  MergeElement psi_m(MergeArithmetic const& m, Word const& w) {
    auto x = m.generator(w[0]);
    for (std::size_t k = 1; k < w.size(); ++k) {
      x = m.multiply(x, m.generator(w[k]));
    }
    return x;
  }

}  // namespace

TEST_CASE("block factorization") {
  auto const in = small_input();
  auto       p  = mu(in, Word{0, 1});
  REQUIRE(p.size() == 1);
  CHECK(p[0] == std::pair<index_t, index_t>{1, 1});
  p = mu(in, Word{0, 0, 1, 0, 1});
  REQUIRE(p.size() == 2);
  CHECK(p[0] == std::pair<index_t, index_t>{0, 1});  // g g = e in Z2
  CHECK(p[1] == std::pair<index_t, index_t>{1, 1});
  CHECK_THROWS_AS(mu(in, Word{1, 0}), PreconditionError);
}

TEST_CASE("tau on short words") {
  auto const in = small_input();
  CHECK(tau(in, Word{1, 0}) == MergeTriple{2, 0, 2});
  CHECK(tau(in, Word{0, 1}) == MergeTriple{0, psi0(in, Word{0, 1}) + 1, 0});
  CHECK(psi0(in, Word{0, 1}) == in.chi_of(1, 1));
  CHECK(tau(in, Word{0}) == MergeTriple{0, 0, 2});
}

TEST_CASE("tau agrees with the definition") {
  std::mt19937_64 rng(4);
  for (int round = 0; round < 20; ++round) {
    auto in = random_merge_input(rng, 3);
    all_words(in.alphabet.size(), 5, [&](Word const& w) {
      REQUIRE(tau(in, w) == oracle_tau(in, w));
    });
  }
}

TEST_CASE("psi_M followed by f is tau, checked independently") {
  std::mt19937_64 rng(8);
  for (int round = 0; round < 15; ++round) {
    auto            in = random_merge_input(rng, 3);
    MergeArithmetic m(in);
    all_words(in.alphabet.size(), 4, [&](Word const& w) {
      REQUIRE(m.f_map(psi_m(m, w)) == oracle_tau(in, w));
    });
  }
}

TEST_CASE("middle coordinate at (I1, I2) is psi0 for w1 w2") {
  auto const      in = small_input();
  MergeArithmetic m(in);
  for (std::size_t n1 = 1; n1 <= 3; ++n1) {
    for (std::size_t n2 = 1; n2 <= 3; ++n2) {
      Word w(n1, 0);
      w.insert(w.end(), n2, 1);
      CHECK(psi_m(m, w).mid.cells[0] == psi0(in, w) + 1);
    }
  }
}

TEST_CASE("actions commute and distribute") {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 10; ++round) {
    auto in = random_merge_input(rng, 3);
    auto d  = build_merge(in);
    auto const& m  = d.arithmetic;
    auto const& el = d.generated.elements;
    for (int k = 0; k < 200; ++k) {
      auto const& s  = el[rng() % el.size()].mid;
      auto const& s2 = el[rng() % el.size()].mid;
      index_t     l  = rng() % m.sharp1().semigroup.size();
      index_t     r  = rng() % m.flat2().semigroup.size();
      CHECK(m.act_right(m.act_left(l, s), r) == m.act_left(l, m.act_right(s, r)));
      CHECK(m.act_left(l, m.add(s, s2))
            == m.add(m.act_left(l, s), m.act_left(l, s2)));
      CHECK(m.act_right(m.add(s, s2), r)
            == m.add(m.act_right(s, r), m.act_right(s2, r)));
    }
    // The generated table is the closure's, so spot-check associativity of
    // the raw arithmetic as well.
    for (int k = 0; k < 100; ++k) {
      auto const& x = el[rng() % el.size()];
      auto const& y = el[rng() % el.size()];
      auto const& z = el[rng() % el.size()];
      CHECK(m.multiply(m.multiply(x, y), z) == m.multiply(x, m.multiply(y, z)));
    }
  }
}

TEST_CASE("verify_merge on the cover fixtures") {
  auto lz = cover_input(fx::left_zero(2), Subset::singleton(2, 0),
                        Subset::singleton(2, 1));
  auto d  = build_merge(lz.input);
  CHECK(d.generated.elements.size() < 20);
  auto r = verify_merge(d, 6);
  CHECK(r.words_checked == 2 + 4 + 8 + 16 + 32 + 64);
  CHECK(r.counterexamples.empty());
  auto u = cover_input(fx::u1(), Subset::singleton(2, 0),
                       Subset::singleton(2, 1));
  CHECK(verify_merge(build_merge(u.input), 6).counterexamples.empty());
}

TEST_CASE("verify_merge on random inputs") {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 30; ++round) {
    auto d = build_merge(random_merge_input(rng, 3));
    CHECK(verify_merge(d, 1).counterexamples.empty());
    CHECK(verify_merge(d, 5).counterexamples.empty());
  }
}

TEST_CASE("divisions from covers") {
  auto check = [](Semigroup const& s, Subset const& t1, Subset const& t2) {
    auto d = division_from_cover(s, t1, t2);
    CHECK(is_division_witness(s, d.witness));
    CHECK(d.witness.host == d.merge.generated.semigroup);
  };
  check(fx::left_zero(2), Subset::singleton(2, 0), Subset::singleton(2, 1));
  check(fx::u1(), Subset::singleton(2, 0), Subset::singleton(2, 1));
  check(fx::cyclic_group(2), Subset::full(2), Subset::full(2));
  std::mt19937_64 rng(6);
  for (int round = 0; round < 25; ++round) {
    auto s = oracle::random_transformation_semigroup(rng, 8);
    // Split a generating set into two parts.
    std::vector<index_t> gens;
    Subset               covered(s.size());
    for (index_t x = 0; x < s.size(); ++x) {
      if (!covered.contains(x)) {
        gens.push_back(x);
        covered = generated_subset(s, Subset::of(s.size(), gens));
      }
    }
    Subset a(s.size()), b(s.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
      (k % 2 == 0 ? a : b).insert(gens[k]);
    }
    if (b.empty()) {
      b = a;
    }
    check(s, generated_subset(s, a), generated_subset(s, b));
  }
}

TEST_CASE("merge inputs are validated") {
  auto in = small_input();
  in.part = {Part::One, Part::One};
  in.letter_image = {1, 0};
  CHECK_THROWS_AS(in.validate(), PreconditionError);
  auto bad_chi = small_input();
  bad_chi.chi  = {0, 1, 7, 0};
  CHECK_THROWS_AS(bad_chi.validate(), PreconditionError);
  CHECK_THROWS_AS(cover_input(fx::u1(), Subset::singleton(2, 0),
                              Subset::singleton(2, 0)),
                  PreconditionError);
}
