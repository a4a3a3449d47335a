#ifndef SGKIT_WITNESS_HPP_
#define SGKIT_WITNESS_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "sgkit/psat.hpp"
#include "sgkit/semigroup.hpp"

namespace sgkit {

  using BigInt = boost::multiprecision::cpp_int;

  // phi : A+ -> 2^S \ {0}, given on letters.
  struct PhiHom {
    std::vector<std::string> alphabet;
    Semigroup                host;
    std::vector<Subset>      images;

    void validate() const;
  };

  // U_phi = im(phi), as the closure of the letter images in 2^S.
  Closure<Subset> u_phi(PhiHom const& phi, std::size_t cap = Limits{}.closure);
  Subset          s_phi(PhiHom const& phi, std::size_t cap = Limits{}.closure);
  // |phi(A)|, the number of distinct letter images.
  std::size_t     image_count(PhiHom const& phi);

  // (c - 1) 2^C(s,2) + 2^s - 1.
  BigInt k_formula(std::size_t c, std::size_t s);
  // k_formula(|phi(A)|, |S_phi|).
  BigInt k_bound(PhiHom const& phi);
  // (|A| - 1) 2^C(|S|,2) + 2^|A| - 1, the variant with the alphabet size
  // in the second term.
  BigInt k_alphabet_variant(std::size_t alphabet, std::size_t s);

  // P(t) = union of phi(w) over psi(w) = t, via the closure of the pairs
  // (psi(a), phi(a)).  Elements of T outside im(psi) get the empty set.
  std::vector<Subset> preimage_union_map(FreeHom const& psi,
                                         PhiHom const&  phi,
                                         std::size_t    cap
                                         = Limits{}.closure);

  enum class CaseTag { One, Two, Three };
  enum class Split { Left, Right };

  struct CaseSplit {
    CaseTag  tag;
    letter_t a0   = 0;
    Split    side = Split::Left;
  };

  CaseSplit case_split(PhiHom const& phi);

  struct WitnessTrace {
    CaseTag                    tag;
    Split                      side = Split::Left;
    std::string                a0;
    std::size_t                t_size = 0;
    std::size_t                depth  = 0;
    std::size_t                s_phi  = 0;
    std::size_t                images = 0;
    BigInt                     k;
    bool                       bound_ok = true;  // Case 3 inequality
    std::vector<SubgroupUnion> lemma;            // Case 1
    // Case 3: phi1, phi2, phi0; right-sided Case 3: the mirrored run.
    std::vector<WitnessTrace>  children;
  };

  struct WitnessResult {
    Semigroup           t;
    FreeHom             psi;
    std::size_t         depth = 0;
    std::vector<Subset> p;
    WitnessTrace        trace;
  };

  struct WitnessOptions {
    Limits      limits;
    std::size_t sample_len    = 6;
    std::size_t sample_budget = 20'000;
  };

  // Throws VerificationError if any result invariant fails.
  WitnessResult construct_witness(PhiHom const&         phi,
                                  WitnessOptions const& opts = {});

  // k(phi0) <= 2^C(m,2) - 1 with m = |S_phi|, and
  // k(phi0) + max(k(phi1), k(phi2)) + 1 <= k(phi).
  bool bound_check_phi0(PhiHom const& phi, PhiHom const& phi0,
                        PhiHom const& phi1, PhiHom const& phi2);

  struct RelMorphism {
    Semigroup           s;
    Semigroup           t;
    std::vector<Subset> fibers;  // rho^-1(t)

    bool is_full() const;
    bool is_multiplicative() const;
  };

  struct PointlikeCertificate {
    std::vector<index_t> generators;
    Family               family;  // downward closure of the fibers
    RelMorphism          rho;
    WitnessResult        witness;
    BigInt               k_proof;
    BigInt               k_alphabet;
    bool full_and_multiplicative = false;  // (i)
    bool fibers_saturated        = false;  // (ii)
    bool maximal_covered         = false;  // (iii)
    bool depth_within_bound      = false;  // (iv)
    bool matches_fixpoint        = false;  // family == henckell_pointlikes

    bool ok() const noexcept {
      return full_and_multiplicative && fibers_saturated && maximal_covered
             && depth_within_bound && matches_fixpoint;
    }
  };

  PointlikeCertificate pointlikes_with_certificate(
      Semigroup const& s, WitnessOptions const& opts = {});

  std::string format_trace(Semigroup const& host, WitnessTrace const& t);

}  // namespace sgkit

#endif  // SGKIT_WITNESS_HPP_
