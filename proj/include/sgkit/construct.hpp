#ifndef SGKIT_CONSTRUCT_HPP_
#define SGKIT_CONSTRUCT_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgkit/division.hpp"
#include "sgkit/semigroup.hpp"

namespace sgkit {

  ////////////////////////////////////////////////////////////////////////
  // Augmented semigroups T^# and T^b
  ////////////////////////////////////////////////////////////////////////

  enum class Side { Sharp, Flat };

  // A map on T^I (index 0 is the adjoined identity I, t is at t + 1).  A
  // map may carry both tags when a multiplication coincides with a
  // constant.
  struct AugElement {
    std::vector<index_t>   map;
    std::optional<index_t> mult;      // t in T
    std::optional<index_t> constant;  // c in T^I
  };

  // T^# (right multiplications and constants, acting on the right of T^I)
  // or T^b (left multiplications and constants, acting on the left).
  // Elements are ordered: multiplications by t in T order, then constants
  // by c in T^I order, with functionally equal maps identified.
  struct AugmentedSemigroup {
    Semigroup               base;
    Side                    side;
    std::vector<AugElement> elements;
    Semigroup               semigroup;

    index_t mult_index(index_t t) const;
    index_t const_index(index_t c) const;
    // The action of element u on x in T^I.
    index_t apply(index_t u, index_t x) const noexcept {
      return elements[u].map[x];
    }
  };

  AugmentedSemigroup augment(Semigroup const& t, Side side);

  ////////////////////////////////////////////////////////////////////////
  // Wreath products
  ////////////////////////////////////////////////////////////////////////

  // Arithmetic of M wr T: pairs (f : T -> M, t) with
  // (f, t)(g, t') = (x -> f(x) g(xt), tt').  M must be a monoid.
  class WreathArithmetic {
   public:
    WreathArithmetic(Semigroup fiber, Semigroup top);

    struct Element {
      std::vector<index_t> f;
      index_t              t;
      friend bool operator==(Element const&, Element const&) = default;
    };

    Element     multiply(Element const& a, Element const& b) const;
    std::size_t encode(Element const& e) const;
    Element     decode(std::size_t code) const;
    // |M|^|T| * |T|, or nullopt on overflow.
    std::optional<std::size_t> order() const;

    Semigroup const& fiber() const noexcept {
      return fiber_;
    }
    Semigroup const& top() const noexcept {
      return top_;
    }
    index_t fiber_identity() const noexcept {
      return fiber_identity_;
    }

   private:
    Semigroup fiber_, top_;
    index_t   fiber_identity_;
  };

  struct ElementHash {
    std::size_t operator()(WreathArithmetic::Element const& e) const noexcept;
  };

  // The full wreath product, tabulated; index = encode((f, t)).
  Semigroup wreath_product(Semigroup const& m,
                           Semigroup const& t,
                           std::size_t      cap = Limits{}.wreath);

  // T^b (as maps on T^I) divides M wr T~ (T~ = T with identity and zero
  // adjoined; zero at 0, identity at 1, t at t + 2).  Requires |M| > |T|
  // and M a monoid.
  //
  // The map i(t) = (c_1, t), i(c^b) = (f_c, 0) is applied to the formal
  // semigroup in which the multiplication by t and the constant t^b stay
  // distinct (mults by T order at 0..|T|-1, then constants by T^I order).
  // It is an injective homomorphism from the formal semigroup; T^b is its
  // quotient identifying maps that coincide, which happens exactly at the
  // left zeros of T.
  struct FlatEmbedding {
    Semigroup                              formal;
    SgHom                                  hom;       // formal -> cod
    SgHom                                  quotient;  // formal -> T^b
    DivisionWitness                        division;  // T^b < cod
    WreathArithmetic                       arithmetic;
    std::vector<WreathArithmetic::Element> cod_elements;

    // Whether i is an embedding of T^b itself.
    bool embeds() const {
      return quotient.is_injective();
    }
  };

  FlatEmbedding flat_embed(Semigroup const& t,
                           Semigroup const& m,
                           std::size_t      cap = Limits{}.closure);

  ////////////////////////////////////////////////////////////////////////
  // Triple products
  ////////////////////////////////////////////////////////////////////////

  // A left action of left_actor and a right action of right_actor on a
  // carrier semigroup (S, +).  left[l * |S| + s] = ls and
  // right[s * |S_R| + r] = sr.  Both actions must distribute over +, or
  // the triple product is not associative.
  struct ActionPair {
    Semigroup            left_actor;
    Semigroup            right_actor;
    Semigroup            carrier;
    std::vector<index_t> left;
    std::vector<index_t> right;

    index_t act_left(index_t l, index_t s) const noexcept {
      return left[l * carrier.size() + s];
    }
    index_t act_right(index_t s, index_t r) const noexcept {
      return right[s * right_actor.size() + r];
    }

    // Description of the first violated action law, if any.
    std::optional<std::string> violation() const;
  };

  // The trivial semigroup acting identically on both sides of s.
  ActionPair trivial_actions(Semigroup const& s);
  // U1 acting on both sides of s^0 (zero at 0): 1 fixes, 0 sends to zero.
  ActionPair zero_actions(Semigroup const& s);

  // (S_R, S, S_L) with (r, s, l)(r', s', l') = (rr', sr' + ls', ll'); the
  // triple (r, s, l) has index (r * |S| + s) * |S_L| + l.
  Semigroup triple_product(ActionPair const& actions);

}  // namespace sgkit

#endif  // SGKIT_CONSTRUCT_HPP_
