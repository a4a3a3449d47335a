#ifndef SGKIT_TYPES_HPP_
#define SGKIT_TYPES_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sgkit {

  using index_t  = std::uint32_t;
  using letter_t = std::uint32_t;
  using Word     = std::vector<letter_t>;

  // Size caps shared by the toolkit; every cap can be overridden per call.
  struct Limits {
    std::size_t closure = 100'000;    // elements of a generated semigroup
    std::size_t family  = 1U << 20;   // members of a subset family
    std::size_t group   = 64;         // exhaustive group searches
    std::size_t wreath  = 4096;       // fully tabulated wreath products
    std::size_t depth   = 64;         // recursion depth
  };

}  // namespace sgkit

#endif  // SGKIT_TYPES_HPP_
