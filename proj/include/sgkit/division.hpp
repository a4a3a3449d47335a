#ifndef SGKIT_DIVISION_HPP_
#define SGKIT_DIVISION_HPP_

#include <span>
#include <string>
#include <vector>

#include "sgkit/semigroup.hpp"

namespace sgkit {

  enum class DivisionFailure { None, NotTotal, NotClosed, NotHom, NotSurjective };

  char const* to_string(DivisionFailure f) noexcept;

  struct DivisionCheck {
    DivisionFailure reason = DivisionFailure::None;
    std::string     detail;

    bool ok() const noexcept {
      return reason == DivisionFailure::None;
    }
    explicit operator bool() const noexcept {
      return ok();
    }
  };

  inline constexpr index_t kUnmapped = static_cast<index_t>(-1);

  // S divides host: sub is a subsemigroup of host and map (indexed by host
  // elements; kUnmapped outside sub) is a surjective homomorphism sub -> S.
  struct DivisionWitness {
    Semigroup            host;
    Subset               sub;
    std::vector<index_t> map;
  };

  DivisionCheck is_division_witness(Semigroup const&         s,
                                    Semigroup const&         host,
                                    Subset const&            sub,
                                    std::span<index_t const> map);

  inline DivisionCheck is_division_witness(Semigroup const&       s,
                                           DivisionWitness const& w) {
    return is_division_witness(s, w.host, w.sub, w.map);
  }

  // The identity division of s into itself.
  DivisionWitness identity_witness(Semigroup const& s);

  // An injective homomorphism viewed as a division of its domain.
  DivisionWitness witness_from_embedding(SgHom const& embedding);

}  // namespace sgkit

#endif  // SGKIT_DIVISION_HPP_
