#ifndef SGKIT_SUBSET_HPP_
#define SGKIT_SUBSET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "sgkit/types.hpp"

namespace sgkit {

  // A subset of {0, ..., universe-1}, stored as a bit vector.  Used for
  // subsets of a semigroup's element set (elements of the power semigroup).
  class Subset {
   public:
    Subset() = default;
    explicit Subset(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    static Subset singleton(std::size_t universe, index_t i) {
      Subset s(universe);
      s.insert(i);
      return s;
    }

    static Subset full(std::size_t universe) {
      Subset s(universe);
      for (index_t i = 0; i < universe; ++i) {
        s.insert(i);
      }
      return s;
    }

    template <class Range>
    static Subset of(std::size_t universe, Range const& elements) {
      Subset s(universe);
      for (auto x : elements) {
        s.insert(static_cast<index_t>(x));
      }
      return s;
    }

    std::size_t universe() const noexcept {
      return universe_;
    }

    bool contains(index_t i) const noexcept {
      return (words_[i >> 6] >> (i & 63)) & 1U;
    }

    void insert(index_t i) noexcept {
      words_[i >> 6] |= std::uint64_t(1) << (i & 63);
    }

    void erase(index_t i) noexcept {
      words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }

    std::size_t count() const noexcept {
      std::size_t c = 0;
      for (auto w : words_) {
        c += std::popcount(w);
      }
      return c;
    }

    bool empty() const noexcept {
      for (auto w : words_) {
        if (w != 0) {
          return false;
        }
      }
      return true;
    }

    bool is_subset_of(Subset const& other) const noexcept {
      for (std::size_t k = 0; k < words_.size(); ++k) {
        if ((words_[k] & ~other.words_[k]) != 0) {
          return false;
        }
      }
      return true;
    }

    bool intersects(Subset const& other) const noexcept {
      for (std::size_t k = 0; k < words_.size(); ++k) {
        if ((words_[k] & other.words_[k]) != 0) {
          return true;
        }
      }
      return false;
    }

    Subset& operator|=(Subset const& other) noexcept {
      for (std::size_t k = 0; k < words_.size(); ++k) {
        words_[k] |= other.words_[k];
      }
      return *this;
    }

    Subset& operator&=(Subset const& other) noexcept {
      for (std::size_t k = 0; k < words_.size(); ++k) {
        words_[k] &= other.words_[k];
      }
      return *this;
    }

    friend Subset operator|(Subset a, Subset const& b) {
      a |= b;
      return a;
    }

    friend Subset operator&(Subset a, Subset const& b) {
      a &= b;
      return a;
    }

    // Elements in increasing order.
    std::vector<index_t> elements() const {
      std::vector<index_t> out;
      for_each([&out](index_t i) { out.push_back(i); });
      return out;
    }

    template <class F>
    void for_each(F&& f) const {
      for (std::size_t k = 0; k < words_.size(); ++k) {
        std::uint64_t w = words_[k];
        while (w != 0) {
          int b = std::countr_zero(w);
          f(static_cast<index_t>(k * 64 + b));
          w &= w - 1;
        }
      }
    }

    std::size_t hash() const noexcept {
      std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
      for (auto w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return h;
    }

    friend bool operator==(Subset const&, Subset const&) = default;

   private:
    std::size_t                universe_ = 0;
    std::vector<std::uint64_t> words_;
  };

  // Canonical order on subsets: by cardinality, then lexicographically by
  // the increasing element lists.
  bool canonical_less(Subset const& a, Subset const& b);

  struct SubsetHash {
    std::size_t operator()(Subset const& s) const noexcept {
      return s.hash();
    }
  };

}  // namespace sgkit

#endif  // SGKIT_SUBSET_HPP_
