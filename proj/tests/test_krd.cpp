#include <doctest.h>

#include <random>

#include "sgkit/fixtures.hpp"
#include "sgkit/group.hpp"
#include "sgkit/krd.hpp"
#include "support.hpp"

using namespace sgkit;
namespace fx = sgkit::fixtures;

namespace {

  void leaves(DecompTree const& t, std::vector<DecompTree const*>& out) {
    if (t.children.empty()) {
      out.push_back(&t);
    }
    for (auto const& c : t.children) {
      leaves(c, out);
    }
  }

  std::size_t expected_depth(DecompTree const& t) {
    switch (t.kind) {
      case NodeKind::Semilattice:
        return 1;
      case NodeKind::SimpleGroup:
        return 0;
      case NodeKind::Wreath:
        return expected_depth(t.children[0]) + expected_depth(t.children[1]);
      case NodeKind::Triple:
        return expected_depth(t.children[1])
               + std::max(expected_depth(t.children[0]),
                          expected_depth(t.children[2]))
               + 1;
      case NodeKind::Dual:
        return expected_depth(t.children[0]);
    }
    return 0;
  }

}  // namespace

TEST_CASE("minimal generating sets") {
  CHECK(minimal_generating_set(fx::cyclic_group(4)) == std::vector<index_t>{1});
  CHECK(minimal_generating_set(fx::u1()) == std::vector<index_t>{0, 1});
  CHECK(minimal_generating_set(fx::left_zero(2)) == std::vector<index_t>{0, 1});
  std::mt19937_64 rng(1);
  for (int k = 0; k < 30; ++k) {
    auto s    = oracle::random_transformation_semigroup(rng, 20);
    auto gens = minimal_generating_set(s);
    CHECK(generated_subset(s, Subset::of(s.size(), gens)).count() == s.size());
    // Irredundant.
    for (std::size_t drop = 0; drop < gens.size(); ++drop) {
      auto rest = gens;
      rest.erase(rest.begin() + drop);
      if (!rest.empty()) {
        CHECK(generated_subset(s, Subset::of(s.size(), rest)).count()
              < s.size());
      }
    }
  }
}

TEST_CASE("decomposition shapes") {
  CHECK(kr_decompose(fx::u1()).kind == NodeKind::Semilattice);
  CHECK(kr_decompose(fx::cyclic_group(2)).kind == NodeKind::SimpleGroup);
  CHECK(kr_decompose(fx::cyclic_group(3)).kind == NodeKind::SimpleGroup);

  auto lz = kr_decompose(fx::left_zero(2));
  CHECK(lz.kind == NodeKind::Triple);
  CHECK(lz.children.size() == 3);

  for (auto g : {fx::cyclic_group(4), fx::klein4()}) {
    auto t = kr_decompose(g);
    CHECK(t.kind == NodeKind::Wreath);
    std::vector<DecompTree const*> ls;
    leaves(t, ls);
    REQUIRE(ls.size() == 2);
    for (auto const* l : ls) {
      CHECK(l->kind == NodeKind::SimpleGroup);
      CHECK(are_isomorphic_groups(l->target, fx::cyclic_group(2)));
    }
  }

  auto count = [](Semigroup const& s) {
    std::vector<DecompTree const*> ls;
    auto                           t = kr_decompose(s);
    leaves(t, ls);
    std::pair<int, int> c{0, 0};
    for (auto const* l : ls) {
      (l->kind == NodeKind::Semilattice ? c.first : c.second) += 1;
    }
    return c;
  };
  CHECK(count(fx::monogenic(2, 1)) == std::pair{2, 0});
  CHECK(count(fx::monogenic(2, 2)) == std::pair{2, 1});

  auto rz = kr_decompose(fx::right_zero(2));
  CHECK(rz.kind == NodeKind::Dual);
  CHECK(rz.children[0].target == opposite(rz.target));
}

TEST_CASE("every corpus decomposition verifies") {
  for (auto const& [name, s] : fx::corpus()) {
    CAPTURE(name);
    auto t = kr_decompose(s);
    auto r = verify_tree(t);
    CHECK(r.ok);
    CHECK(t.depth == expected_depth(t));
    CHECK(r.depth == t.depth);
    if (is_aperiodic(s)) {
      CHECK(r.group_leaves == 0);
    }
    std::vector<DecompTree const*> ls;
    leaves(t, ls);
    for (auto const* l : ls) {
      if (l->kind == NodeKind::SimpleGroup) {
        CHECK(group_divides(l->target, s));
      }
    }
  }
}

TEST_CASE("random semigroups decompose and verify") {
  std::mt19937_64 rng(77);
  for (int k = 0; k < 40; ++k) {
    auto s = oracle::random_transformation_semigroup(rng, 12);
    CAPTURE(s.size());
    auto t = kr_decompose(s);
    auto r = verify_tree(t);
    CHECK(r.ok);
    if (oracle::naive_aperiodic(s)) {
      CHECK(r.group_leaves == 0);
    }
  }
}

TEST_CASE("a corrupted witness is flagged at its node only") {
  auto t = kr_decompose(fx::cyclic_group(4));
  REQUIRE(t.kind == NodeKind::Wreath);
  // Map two host elements of the embedded copy crosswise.
  auto& map = t.witness.map;
  std::vector<std::size_t> mapped;
  for (std::size_t k = 0; k < map.size(); ++k) {
    if (map[k] != kUnmapped) {
      mapped.push_back(k);
    }
  }
  REQUIRE(mapped.size() == 4);
  std::swap(map[mapped[0]], map[mapped[1]]);
  auto r = verify_tree(t);
  CHECK_FALSE(r.ok);
  std::size_t bad = 0;
  for (auto const& n : r.nodes) {
    if (n.status != "ok") {
      ++bad;
      CHECK(n.path == "0");
      CHECK(n.status == "NotHom");
    }
  }
  CHECK(bad == 1);
}

TEST_CASE("a non-simple group leaf is flagged") {
  auto t   = kr_decompose(fx::cyclic_group(4));
  auto bad = DecompTree{NodeKind::SimpleGroup,
                        fx::cyclic_group(4),
                        identity_witness(fx::cyclic_group(4)),
                        0,
                        {},
                        {},
                        std::nullopt,
                        ""};
  auto r = verify_tree(bad);
  CHECK_FALSE(r.ok);
  CHECK(r.nodes[0].status == "NotSimpleGroup");
  CHECK(verify_tree(t).ok);
}

TEST_CASE("a wrong depth is flagged") {
  auto t  = kr_decompose(fx::left_zero(2));
  t.depth = 7;
  CHECK_FALSE(verify_tree(t).ok);
}

TEST_CASE("blind cyclic search agrees with the constructive witness") {
  for (auto [m, r] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 2}}) {
    auto s = fx::monogenic(m, r);
    CAPTURE(m);
    CAPTURE(r);
    auto w = search_cyclic_division(s);
    REQUIRE(w);
    CHECK(is_division_witness(s, *w));
    CHECK(verify_tree(decompose_cyclic(s)).ok);
  }
}

TEST_CASE("certificates are stable text") {
  auto t = kr_decompose(fx::left_zero(2));
  auto c = format_certificate(t, verify_tree(t));
  CHECK(c.rfind("(triple target=", 0) == 0);
  CHECK(c.find("witness=ok") != std::string::npos);
  CHECK(c == format_certificate(kr_decompose(fx::left_zero(2)),
                                verify_tree(kr_decompose(fx::left_zero(2)))));
  auto z4 = kr_decompose(fx::cyclic_group(4));
  auto cz = format_certificate(z4, verify_tree(z4));
  CHECK(cz.rfind("(wreath", 0) == 0);
}

TEST_CASE("caps are enforced") {
  Limits tight;
  tight.closure = 3;
  CHECK_THROWS_AS(kr_decompose(fx::full_transformations2(), tight),
                  ResourceError);
}
