#ifndef SGKIT_MERGE_HPP_
#define SGKIT_MERGE_HPP_

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "sgkit/construct.hpp"
#include "sgkit/division.hpp"
#include "sgkit/semigroup.hpp"

namespace sgkit {

  // Throughout, elements of T^I are indexed with I at 0 and t at t + 1.

  enum class Part : std::uint8_t { One = 1, Two = 2 };

  // psi1 : A1+ -> T1 and psi2 : A2+ -> T2 given on letters, and
  // chi : (T1 x T2)+ -> T0 given on pairs (t1, t2) at t1 * |T2| + t2.
  struct MergeInput {
    std::vector<std::string> alphabet;
    std::vector<Part>        part;          // per letter
    std::vector<index_t>     letter_image;  // in T1 or T2, per part
    Semigroup                t1, t2, t0;
    std::vector<index_t>     chi;

    index_t chi_of(index_t a, index_t b) const noexcept {
      return chi[a * t2.size() + b];
    }
    // Throws PreconditionError on any inconsistency, including an empty A1
    // or A2.
    void validate() const;
  };

  // An element of (T0^I)^(T1^I x T2^I), pointwise product.
  struct MiddleFn {
    std::vector<index_t> cells;  // (t1, t2) at t1 * (|T2| + 1) + t2
    std::size_t          hash = 0;

    void rehash() noexcept;
    friend bool operator==(MiddleFn const& a, MiddleFn const& b) {
      return a.hash == b.hash && a.cells == b.cells;
    }
  };

  // (right in T2^b, mid, left in T1^#); right and left index the
  // augmented semigroups.
  struct MergeElement {
    index_t  right;
    MiddleFn mid;
    index_t  left;

    friend bool operator==(MergeElement const&, MergeElement const&) = default;
  };

  struct MergeElementHash {
    std::size_t operator()(MergeElement const& e) const noexcept;
  };

  struct MergeTriple {
    index_t t2, t0, t1;  // in T2^I, T0^I, T1^I
    friend bool operator==(MergeTriple const&, MergeTriple const&) = default;
  };

  // The arithmetic of T_M = (T2^b, S, T1^#).
  class MergeArithmetic {
   public:
    explicit MergeArithmetic(MergeInput in);

    MergeElement multiply(MergeElement const& x, MergeElement const& y) const;
    // [l s](t1, t2) = s(t1 l, t2) and [s r](t1, t2) = s(t1, r t2).
    MiddleFn act_left(index_t l, MiddleFn const& s) const;
    MiddleFn act_right(MiddleFn const& s, index_t r) const;
    // Pointwise product in T0^I.
    MiddleFn add(MiddleFn const& a, MiddleFn const& b) const;

    MiddleFn constant_identity() const;  // i0
    MiddleFn s_table(std::span<letter_t const> w1) const;
    MergeElement generator(letter_t a) const;
    MergeTriple  f_map(MergeElement const& e) const;

    AugmentedSemigroup const& sharp1() const noexcept { return sharp1_; }
    AugmentedSemigroup const& flat2() const noexcept { return flat2_; }
    Semigroup const&          t0i() const noexcept { return t0i_; }
    Semigroup const&          t1i() const noexcept { return t1i_; }
    Semigroup const&          t2i() const noexcept { return t2i_; }
    std::size_t               width() const noexcept { return n2i_; }
    MergeInput const&         input() const noexcept { return in_; }

   private:
    MergeInput         in_;
    AugmentedSemigroup sharp1_, flat2_;
    Semigroup          t0i_, t1i_, t2i_;
    std::size_t        n1i_, n2i_;
  };

  // The generated part of T_M, with psi_M(a) = elements[gen_indices[a]].
  struct MergeDecomposition {
    MergeArithmetic       arithmetic;
    Closure<MergeElement> generated;

    MergeInput const& input() const noexcept {
      return arithmetic.input();
    }
    FreeHom psi_m() const;
  };

  // Block factorization of w in (A1+ A2+)+ into pairs (psi1, psi2) values
  // in T1 x T2; throws PreconditionError otherwise.
  std::vector<std::pair<index_t, index_t>> mu(MergeInput const&         in,
                                              std::span<letter_t const> w);
  index_t psi0(MergeInput const& in, std::span<letter_t const> w);
  MergeTriple tau(MergeInput const& in, std::span<letter_t const> w);

  MergeDecomposition build_merge(MergeInput  in,
                                 std::size_t cap = Limits{}.closure);

  struct MergeReport {
    std::size_t       generated_size = 0;
    std::size_t       words_checked  = 0;
    std::vector<Word> counterexamples;
  };

  // Checks f(psi_M(w)) = tau(w) for all w in A+ with |w| <= max_len.
  MergeReport verify_merge(MergeDecomposition const& m,
                           std::size_t               max_len = 6);

  // Letters (t, 1) for t in T1 and (t, 2) for t in T2, chi(t1, t2) = t1 t2
  // in T0 = <T1 T2>.  Requires <T1 u T2> = S.
  struct CoverInput {
    MergeInput           input;
    std::vector<index_t> t1_elements, t2_elements, t0_elements;  // in S
  };
  CoverInput cover_input(Semigroup const& s, Subset const& t1,
                         Subset const& t2);

  struct CoverDivision {
    CoverInput         cover;
    MergeDecomposition merge;
    // S divides the generated part of T_M via t -> m(f(t)).
    DivisionWitness    witness;
  };
  CoverDivision division_from_cover(Semigroup const& s,
                                    Subset const&    t1,
                                    Subset const&    t2,
                                    std::size_t      cap = Limits{}.closure);

  // Random associative table on n elements, by rejection sampling.
  Semigroup random_semigroup(std::size_t n, std::mt19937_64& rng);
  // Random merge input with |T_i| <= max_size and one or two letters per
  // part.
  MergeInput random_merge_input(std::mt19937_64& rng, std::size_t max_size = 3);

}  // namespace sgkit

#endif  // SGKIT_MERGE_HPP_
