#include <doctest.h>

#include <random>

#include "sgkit/fixtures.hpp"
#include "sgkit/io.hpp"
#include "sgkit/witness.hpp"
#include "support.hpp"

using namespace sgkit;
namespace fx = sgkit::fixtures;

namespace {

  PhiHom phi_of(Semigroup const& s, std::vector<std::vector<index_t>> sets) {
    PhiHom phi{{}, s, {}};
    for (std::size_t a = 0; a < sets.size(); ++a) {
      phi.alphabet.push_back(std::string(1, char('a' + a)));
      phi.images.push_back(Subset::of(s.size(), sets[a]));
    }
    return phi;
  }

  // Letters are the elements of s.
  PhiHom singleton_phi(Semigroup const& s) {
    std::vector<std::vector<index_t>> sets;
    for (index_t i = 0; i < s.size(); ++i) {
      sets.push_back({i});
    }
    return phi_of(s, sets);
  }

  PhiHom random_phi(std::mt19937_64& rng, Semigroup const& s) {
    std::size_t                       letters = 1 + rng() % 2;
    std::vector<std::vector<index_t>> sets(letters);
    for (auto& x : sets) {
      while (x.empty()) {
        for (index_t i = 0; i < s.size(); ++i) {
          if (rng() % 3 == 0) {
            x.push_back(i);
          }
        }
      }
    }
    return phi_of(s, sets);
  }

  Subset phi_word(PhiHom const& phi, Word const& w) {
    Subset x = phi.images[w[0]];
    for (std::size_t k = 1; k < w.size(); ++k) {
      x = subset_product(phi.host, x, phi.images[w[k]]);
    }
    return x;
  }

  void for_words(std::size_t letters, std::size_t max_len, auto&& f) {
    Word w;
    auto rec = [&](auto&& self) -> void {
      if (!w.empty()) {
        f(w);
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

  // P(t) contains phi(w) whenever psi(w) = t, checked on short words.
  void check_cover(PhiHom const& phi, WitnessResult const& r,
                   std::size_t max_len) {
    for_words(phi.alphabet.size(), max_len, [&](Word const& w) {
      CHECK(phi_word(phi, w).is_subset_of(r.p[r.psi(w)]));
    });
  }

}  // namespace

TEST_CASE("k values") {
  CHECK(k_formula(2, 3) == 15);
  for (std::size_t m = 1; m <= 6; ++m) {
    CHECK(k_formula(1, m) == (BigInt(1) << m) - 1);
  }
  CHECK(k_formula(2, 2) == 5);
  CHECK(k_formula(1, 1) == 1);
  CHECK(k_alphabet_variant(2, 2) == 5);
  CHECK(k_alphabet_variant(3, 2) == 11);
  CHECK(k_formula(3, 8) > BigInt(1) << 28);
}

TEST_CASE("preimage unions") {
  auto z2  = fx::cyclic_group(2);
  auto phi = phi_of(z2, {{0, 1}});
  // psi onto the trivial semigroup collects every phi(w).
  FreeHom psi{{"a"}, fx::trivial(), {0}};
  auto    p = preimage_union_map(psi, phi);
  REQUIRE(p.size() == 1);
  CHECK(p[0] == Subset::full(2));

  // psi onto Z2 itself, phi singletons: fibers are the singletons.
  auto    phi2 = phi_of(z2, {{1}});
  FreeHom id{{"a"}, z2, {1}};
  auto    q = preimage_union_map(id, phi2);
  CHECK(q[0] == Subset::singleton(2, 0));
  CHECK(q[1] == Subset::singleton(2, 1));

  // Elements outside im(psi) get the empty set.
  FreeHom into{{"a"}, fx::chain(2), {1}};
  auto    r = preimage_union_map(into, phi2);
  CHECK(r[0].empty());
  CHECK(r[1] == Subset::full(2));
}

TEST_CASE("case split") {
  auto z2 = fx::cyclic_group(2);
  CHECK(case_split(singleton_phi(z2)).tag == CaseTag::One);
  CHECK(case_split(phi_of(fx::monogenic(2, 1), {{0}})).tag == CaseTag::Two);
  auto lz = case_split(singleton_phi(fx::left_zero(2)));
  CHECK(lz.tag == CaseTag::Three);
  CHECK(lz.a0 == 0);
  CHECK(lz.side == Split::Left);
}

TEST_CASE("witness examples") {
  SUBCASE("null3") {
    auto r = construct_witness(singleton_phi(fx::null3()));
    CHECK(r.trace.k == 23);
    CHECK(r.depth <= 23);
    // Over a minimal generating set the alphabet has two letters.
    auto c = pointlikes_with_certificate(fx::null3());
    CHECK(c.generators.size() == 2);
    CHECK(c.k_proof == 15);
    CHECK(c.witness.depth <= 15);
    CHECK(is_aperiodic(r.t));
    check_cover(singleton_phi(fx::null3()), r, 5);
  }
  SUBCASE("Z3 is Case 1 with a subgroup union") {
    auto phi = singleton_phi(fx::cyclic_group(3));
    auto r   = construct_witness(phi);
    CHECK(r.trace.tag == CaseTag::One);
    REQUIRE_FALSE(r.trace.lemma.empty());
    CHECK(r.trace.lemma[0].ok);
    check_cover(phi, r, 5);
  }
  SUBCASE("right-sided Case 3 goes through the opposite") {
    auto phi = singleton_phi(fx::right_zero(2));
    auto r   = construct_witness(phi);
    CHECK(r.trace.tag == CaseTag::Three);
    check_cover(phi, r, 6);
    auto text = format_trace(phi.host, r.trace);
    CHECK(text.find("case3") != std::string::npos);
  }
}

TEST_CASE("witness on random semigroups") {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 40; ++k) {
    auto s   = oracle::random_transformation_semigroup(rng, 6);
    auto phi = random_phi(rng, s);
    CAPTURE(format_sg(s));
    auto r = construct_witness(phi);
    CHECK(oracle::naive_aperiodic(r.t));
    CHECK(BigInt(r.depth) <= k_bound(phi));
    check_cover(phi, r, 5);

    // Every nonempty P(t) comes out of saturating the letter images.
    auto sat = saturate(s, phi.images);
    CHECK(replay(s, phi.images, sat).empty());
    for (auto const& x : r.p) {
      if (!x.empty()) {
        CHECK(family_contains(sat.family, x));
      }
    }
  }
}

TEST_CASE("certificate family equals the naive fixpoint") {
  auto check = [](Semigroup const& s) {
    auto c = pointlikes_with_certificate(s);
    CHECK(c.ok());
    std::set<oracle::Mask> got;
    for (auto const& x : c.family) {
      got.insert(oracle::mask_of(x));
    }
    CHECK(got == oracle::naive_pointlikes(s));
    CHECK(c.rho.is_full());
    CHECK(c.rho.is_multiplicative());
  };
  for (auto const& [name, s] : fx::corpus()) {
    CAPTURE(name);
    if (s.size() <= 4) {
      check(s);
    }
  }
  std::mt19937_64 rng(5);
  for (int k = 0; k < 15; ++k) {
    check(oracle::random_transformation_semigroup(rng, 5));
  }
}

TEST_CASE("phi validation") {
  auto phi = phi_of(fx::u1(), {{0}});
  phi.images.push_back(Subset(2));
  phi.alphabet.push_back("b");
  CHECK_THROWS_AS(phi.validate(), PreconditionError);
  CHECK_THROWS_AS(construct_witness(phi), PreconditionError);
}
