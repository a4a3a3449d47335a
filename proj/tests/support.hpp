// Independent oracles and generators shared by the test binaries.  Nothing
// here calls the library's closure or saturation code.
#ifndef SGKIT_TESTS_SUPPORT_HPP_
#define SGKIT_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "sgkit/semigroup.hpp"

namespace oracle {

  using sgkit::index_t;
  using Mask = std::uint64_t;
  using Map  = std::vector<index_t>;

  // Composition "x then y".
  inline Map compose(Map const& x, Map const& y) {
    Map out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      out[i] = y[x[i]];
    }
    return out;
  }

  // All products of the generators, as a set.
  inline std::set<Map> naive_closure(std::vector<Map> const& gens) {
    std::set<Map> all(gens.begin(), gens.end());
    bool          grew = true;
    while (grew) {
      grew = false;
      std::vector<Map> current(all.begin(), all.end());
      for (auto const& a : current) {
        for (auto const& b : current) {
          grew = all.insert(compose(a, b)).second || grew;
        }
      }
    }
    return all;
  }

  // A semigroup table from its elements, ordered as in the set.
  inline sgkit::Semigroup table_of(std::set<Map> const& elems) {
    std::vector<Map>   v(elems.begin(), elems.end());
    std::map<Map, index_t> id;
    for (index_t i = 0; i < v.size(); ++i) {
      id[v[i]] = i;
    }
    std::vector<index_t> t(v.size() * v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = 0; j < v.size(); ++j) {
        t[i * v.size() + j] = id.at(compose(v[i], v[j]));
      }
    }
    return sgkit::Semigroup::from_table(v.size(), std::move(t));
  }

  inline std::vector<Map> random_maps(std::mt19937_64& rng, std::size_t degree,
                                      std::size_t count) {
    std::uniform_int_distribution<index_t> pick(0, degree - 1);
    std::vector<Map>                       out(count, Map(degree));
    for (auto& m : out) {
      for (auto& x : m) {
        x = pick(rng);
      }
    }
    return out;
  }

  // A random transformation semigroup of at most `max_size` elements.
  inline sgkit::Semigroup random_transformation_semigroup(
      std::mt19937_64& rng, std::size_t max_size) {
    while (true) {
      std::size_t degree = 2 + rng() % 2, gens = 1 + rng() % 3;
      auto        elems  = naive_closure(random_maps(rng, degree, gens));
      if (elems.size() <= max_size) {
        return table_of(elems);
      }
    }
  }

  // Subset arithmetic on bitmasks.
  inline Mask product(sgkit::Semigroup const& s, Mask x, Mask y) {
    Mask out = 0;
    for (index_t a = 0; a < s.size(); ++a) {
      if (!(x >> a & 1)) {
        continue;
      }
      for (index_t b = 0; b < s.size(); ++b) {
        if (y >> b & 1) {
          out |= Mask(1) << s.product(a, b);
        }
      }
    }
    return out;
  }

  // X^omega: the unique idempotent among the powers of X.
  inline Mask omega(sgkit::Semigroup const& s, Mask x) {
    Mask p = x;
    while (product(s, p, p) != p) {
      p = product(s, p, x);
    }
    return p;
  }

  // X^(omega+*) = union over n >= 0 of X^omega X^n.
  inline Mask omega_star(sgkit::Semigroup const& s, Mask x) {
    std::set<Mask> seen;
    Mask           out = 0;
    for (Mask cur = omega(s, x); seen.insert(cur).second;
         cur      = product(s, cur, x)) {
      out |= cur;
    }
    return out;
  }

  // Least family containing `seed`, closed under products, omega_star and
  // nonempty subsets.  Plain iteration to a fixpoint.
  inline std::set<Mask> naive_saturate(sgkit::Semigroup const& s,
                                       std::set<Mask>          seed) {
    std::set<Mask> f = std::move(seed);
    bool           grew = true;
    while (grew) {
      grew = false;
      std::vector<Mask> current(f.begin(), f.end());
      for (Mask x : current) {
        grew = f.insert(omega_star(s, x)).second || grew;
        for (Mask sub = (x - 1) & x; sub != 0; sub = (sub - 1) & x) {
          grew = f.insert(sub).second || grew;
        }
        for (Mask y : current) {
          grew = f.insert(product(s, x, y)).second || grew;
        }
      }
    }
    return f;
  }

  inline std::set<Mask> naive_pointlikes(sgkit::Semigroup const& s) {
    std::set<Mask> seed;
    for (index_t a = 0; a < s.size(); ++a) {
      seed.insert(Mask(1) << a);
    }
    return naive_saturate(s, seed);
  }

  // Aperiodic iff x^n = x^(n+1) for n = |S|.
  inline bool naive_aperiodic(sgkit::Semigroup const& s) {
    for (index_t x = 0; x < s.size(); ++x) {
      index_t p = x;
      for (std::size_t k = 1; k < s.size(); ++k) {
        p = s.product(p, x);
      }
      if (s.product(p, x) != p) {
        return false;
      }
    }
    return true;
  }

  inline Mask mask_of(sgkit::Subset const& x) {
    Mask m = 0;
    x.for_each([&](index_t i) { m |= Mask(1) << i; });
    return m;
  }

}  // namespace oracle

#endif  // SGKIT_TESTS_SUPPORT_HPP_
