#include "sgkit/division.hpp"

namespace sgkit {

  char const* to_string(DivisionFailure f) noexcept {
    switch (f) {
      case DivisionFailure::None:
        return "ok";
      case DivisionFailure::NotTotal:
        return "NotTotal";
      case DivisionFailure::NotClosed:
        return "NotClosed";
      case DivisionFailure::NotHom:
        return "NotHom";
      case DivisionFailure::NotSurjective:
        return "NotSurjective";
    }
    return "?";
  }

  DivisionCheck is_division_witness(Semigroup const&         s,
                                    Semigroup const&         host,
                                    Subset const&            sub,
                                    std::span<index_t const> map) {
    using std::to_string;
    if (sub.universe() != host.size() || map.size() != host.size()) {
      return {DivisionFailure::NotTotal, "size mismatch with host"};
    }
    if (sub.empty()) {
      return {DivisionFailure::NotTotal, "empty subsemigroup"};
    }
    DivisionCheck bad;
    sub.for_each([&](index_t x) {
      if (bad.ok() && (map[x] == kUnmapped || map[x] >= s.size())) {
        bad = {DivisionFailure::NotTotal,
               "no image for host element " + to_string(x)};
      }
    });
    if (!bad.ok()) {
      return bad;
    }
    auto const elems = sub.elements();
    for (auto x : elems) {
      for (auto y : elems) {
        index_t xy = host.product(x, y);
        if (!sub.contains(xy)) {
          return {DivisionFailure::NotClosed,
                  "product " + to_string(x) + "*" + to_string(y)
                      + " leaves the subsemigroup"};
        }
        if (map[xy] != s.product(map[x], map[y])) {
          return {DivisionFailure::NotHom,
                  "at (" + to_string(x) + "," + to_string(y) + ")"};
        }
      }
    }
    Subset image(s.size());
    for (auto x : elems) {
      image.insert(map[x]);
    }
    if (image.count() != s.size()) {
      return {DivisionFailure::NotSurjective,
              "image has " + to_string(image.count()) + " of "
                  + to_string(s.size()) + " elements"};
    }
    return {};
  }

  DivisionWitness identity_witness(Semigroup const& s) {
    std::vector<index_t> map(s.size());
    for (index_t x = 0; x < s.size(); ++x) {
      map[x] = x;
    }
    return {s, Subset::full(s.size()), std::move(map)};
  }

  DivisionWitness witness_from_embedding(SgHom const& embedding) {
    std::vector<index_t> map(embedding.cod.size(), kUnmapped);
    Subset               sub(embedding.cod.size());
    for (index_t x = 0; x < embedding.dom.size(); ++x) {
      map[embedding.map[x]] = x;
      sub.insert(embedding.map[x]);
    }
    return {embedding.cod, std::move(sub), std::move(map)};
  }

}  // namespace sgkit
