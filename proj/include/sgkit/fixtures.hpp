#ifndef SGKIT_FIXTURES_HPP_
#define SGKIT_FIXTURES_HPP_

#include <string>
#include <vector>

#include "sgkit/semigroup.hpp"

namespace sgkit::fixtures {

  Semigroup trivial();
  // U1 = {1, 0}.
  Semigroup u1();
  // Chain 0 < 1 < ... < n-1 under min; labels are the numbers.
  Semigroup chain(std::size_t n);
  Semigroup left_zero(std::size_t n);
  Semigroup right_zero(std::size_t n);
  // Z_n with g^k at index k.
  Semigroup cyclic_group(std::size_t n);
  Semigroup klein4();
  // <x | x^(m+r) = x^m>, x^k at index k-1.
  Semigroup monogenic(std::size_t m, std::size_t r);
  // Full transformation monoid on 2 points.
  Semigroup full_transformations2();
  // {a, b, z} with every product z.
  Semigroup null3();

  struct Named {
    std::string name;
    Semigroup   semigroup;
  };

  // The algebraic part of the acceptance corpus, in a fixed order.
  std::vector<Named> corpus();

}  // namespace sgkit::fixtures

#endif  // SGKIT_FIXTURES_HPP_
