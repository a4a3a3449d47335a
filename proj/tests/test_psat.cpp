#include <doctest.h>

#include <random>

#include "sgkit/fixtures.hpp"
#include "sgkit/psat.hpp"
#include "support.hpp"

using namespace sgkit;
namespace fx = sgkit::fixtures;

namespace {

  Subset set_of(Semigroup const& s, std::vector<index_t> const& xs) {
    return Subset::of(s.size(), xs);
  }

  std::set<oracle::Mask> masks(Family const& f) {
    std::set<oracle::Mask> out;
    for (auto const& x : f) {
      out.insert(oracle::mask_of(x));
    }
    return out;
  }

  Subset from_mask(std::size_t n, oracle::Mask m) {
    Subset out(n);
    for (index_t i = 0; i < n; ++i) {
      if (m >> i & 1) {
        out.insert(i);
      }
    }
    return out;
  }

  std::vector<Semigroup> random_corpus(std::uint64_t seed, int count,
                                       std::size_t max_size) {
    std::mt19937_64        rng(seed);
    std::vector<Semigroup> out;
    for (int k = 0; k < count; ++k) {
      out.push_back(oracle::random_transformation_semigroup(rng, max_size));
    }
    return out;
  }

}  // namespace

TEST_CASE("subset products") {
  auto const z2 = fx::cyclic_group(2);
  CHECK(subset_product(z2, set_of(z2, {0}), set_of(z2, {1}))
        == set_of(z2, {1}));
  CHECK(subset_product(z2, Subset::full(2), Subset::full(2))
        == Subset::full(2));
  auto const lz = fx::left_zero(2);
  CHECK(subset_product(lz, set_of(lz, {0}), Subset::full(2))
        == set_of(lz, {0}));
}

TEST_CASE("omega star") {
  auto const z2 = fx::cyclic_group(2);
  CHECK(omega_star(z2, set_of(z2, {1})) == Subset::full(2));
  auto const u1 = fx::u1();
  CHECK(omega_star(u1, set_of(u1, {1})) == set_of(u1, {1}));
  auto const c21 = fx::monogenic(2, 1);
  CHECK(omega_star(c21, set_of(c21, {0})) == set_of(c21, {1}));
  CHECK(omega_power(c21, set_of(c21, {0})) == set_of(c21, {1}));
}

TEST_CASE("omega star agrees with the oracle and is idempotent-headed") {
  for (auto const& s : random_corpus(21, 25, 10)) {
    std::size_t const n = s.size();
    for (oracle::Mask m = 1; m < (oracle::Mask(1) << n); ++m) {
      auto       x  = from_mask(n, m);
      auto const os = omega_star(s, x);
      REQUIRE(oracle::mask_of(os) == oracle::omega_star(s, m));
      REQUIRE(oracle::mask_of(omega_power(s, x)) == oracle::omega(s, m));
      CHECK(os.is_subset_of(subset_product(s, os, os)));
      CHECK(subset_product(s, omega_power(s, x), os) == os);
    }
  }
}

TEST_CASE("downward closure") {
  auto const z2 = fx::cyclic_group(2);
  CHECK(downward_closure(z2, {Subset::full(2)}).size() == 3);
  CHECK(downward_closure(z2, singletons(z2)) == singletons(z2));
  auto const lz = fx::left_zero(2);
  CHECK(downward_closure(lz, {set_of(lz, {0}), Subset::full(2)}).size() == 3);
  CHECK_THROWS_AS(downward_closure(fx::cyclic_group(4), {Subset::full(4)}, 3),
                  ResourceError);
}

TEST_CASE("pointlikes of small fixtures") {
  auto const u1 = fx::u1();
  CHECK(henckell_pointlikes(u1) == singletons(u1));
  auto const z2 = fx::cyclic_group(2);
  CHECK(henckell_pointlikes(z2).size() == 3);
  CHECK(saturate(z2, {Subset::full(2)}).family.size() == 3);
  CHECK(henckell_pointlikes(fx::cyclic_group(4)).size() == 15);
}

TEST_CASE("canonical family order and printing") {
  auto const z2 = fx::cyclic_group(2);
  CHECK(format_family(z2, henckell_pointlikes(z2)) == "{e}\n{g}\n{e,g}\n");
}

TEST_CASE("saturation matches the naive fixpoint") {
  auto corpus = random_corpus(7, 40, 9);
  for (auto const& [name, s] : fx::corpus()) {
    corpus.push_back(s);
  }
  for (auto const& s : corpus) {
    auto const pl = henckell_pointlikes(s);
    CHECK(masks(pl) == oracle::naive_pointlikes(s));
    CHECK((pl == singletons(s)) == oracle::naive_aperiodic(s));
    if (is_group(s)) {
      CHECK(pl.size() == (std::size_t(1) << s.size()) - 1);
    }
  }
}

TEST_CASE("saturation from arbitrary seeds: oracle, idempotence, "
          "monotonicity, replay") {
  std::mt19937_64 rng(99);
  for (auto const& s : random_corpus(17, 30, 8)) {
    std::size_t const           n = s.size();
    std::vector<Subset>         seeds;
    std::set<oracle::Mask>      seed_masks;
    std::uniform_int_distribution<oracle::Mask> pick(
        1, (oracle::Mask(1) << n) - 1);
    for (int k = 0; k < 2; ++k) {
      auto m = pick(rng);
      seeds.push_back(from_mask(n, m));
      seed_masks.insert(m);
    }
    auto const sat = saturate(s, seeds);
    CHECK(masks(sat.family) == oracle::naive_saturate(s, seed_masks));
    CHECK(replay(s, seeds, sat).empty());
    CHECK(is_saturated(s, sat.family));
    CHECK(saturate(s, sat.family).family == sat.family);

    auto bigger = seeds;
    bigger.push_back(from_mask(n, pick(rng)));
    auto const more = saturate(s, bigger).family;
    for (auto const& x : sat.family) {
      CHECK(family_contains(more, x));
    }
    // Downward closed.
    for (auto const& x : sat.family) {
      auto m = oracle::mask_of(x);
      for (oracle::Mask sub = (m - 1) & m; sub != 0; sub = (sub - 1) & m) {
        CHECK(family_contains(sat.family, from_mask(n, sub)));
      }
    }
  }
}

TEST_CASE("replay rejects a tampered trace") {
  auto const z2   = fx::cyclic_group(2);
  auto       sat  = saturate(z2, singletons(z2));
  auto       seed = singletons(z2);
  REQUIRE(replay(z2, seed, sat).empty());
  for (std::size_t k = 0; k < sat.trace.size(); ++k) {
    if (sat.trace[k].rule != Rule::Seed) {
      sat.trace[k].rule = Rule::Seed;
      break;
    }
  }
  CHECK_FALSE(replay(z2, seed, sat).empty());
}

TEST_CASE("saturation respects the family cap") {
  CHECK_THROWS_AS(henckell_pointlikes(fx::cyclic_group(4), 5), ResourceError);
}

TEST_CASE("unions of subgroups of 2^S") {
  auto const z2 = fx::cyclic_group(2);
  auto       r  = subgroup_union_check(z2, {set_of(z2, {0}), set_of(z2, {1})});
  CHECK(r.ok);
  CHECK(r.union_of_group == Subset::full(2));
  r = subgroup_union_check(z2, {set_of(z2, {0})});
  CHECK(r.ok);
  CHECK(r.union_of_group == set_of(z2, {0}));
  auto const          z4 = fx::cyclic_group(4);
  std::vector<Subset> g;
  for (index_t i = 0; i < 4; ++i) {
    g.push_back(Subset::singleton(4, i));
  }
  r = subgroup_union_check(z4, g);
  CHECK(r.ok);
  CHECK(r.union_of_group == Subset::full(4));
  // {e,g} and {g} do not form a group in 2^Z2.
  CHECK_THROWS_AS(subgroup_union_check(z2, {Subset::full(2), set_of(z2, {1})}),
                  PreconditionError);
}

TEST_CASE("saturation is the downward closure of the upward closure") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 60; ++k) {
    auto s  = oracle::random_transformation_semigroup(rng, 10);
    auto up = saturate_upward(s, singletons(s));
    CHECK(downward_closure(s, up.family) == henckell_pointlikes(s));
    CHECK(up.family.size() <= henckell_pointlikes(s).size());
    for (auto const& d : up.trace) {
      CHECK(d.rule != Rule::Down);
    }
  }
}
