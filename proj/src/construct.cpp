#include "sgkit/construct.hpp"

#include <map>
#include <set>
#include <string>

namespace sgkit {

  ////////////////////////////////////////////////////////////////////////
  // Augmented semigroups
  ////////////////////////////////////////////////////////////////////////

  index_t AugmentedSemigroup::mult_index(index_t t) const {
    for (index_t u = 0; u < elements.size(); ++u) {
      if (elements[u].mult == t) {
        return u;
      }
    }
    throw PreconditionError("sgcore: no multiplication map for "
                            + std::to_string(t));
  }

  index_t AugmentedSemigroup::const_index(index_t c) const {
    for (index_t u = 0; u < elements.size(); ++u) {
      if (elements[u].constant == c) {
        return u;
      }
    }
    throw PreconditionError("sgcore: no constant map for "
                            + std::to_string(c));
  }

  AugmentedSemigroup augment(Semigroup const& t, Side side) {
    std::size_t const                       n = t.size(), m = n + 1;
    std::vector<AugElement>                 elements;
    std::map<std::vector<index_t>, index_t> index;

    auto add = [&](std::vector<index_t> map,
                   std::optional<index_t> mult,
                   std::optional<index_t> constant) {
      auto it = index.find(map);
      if (it != index.end()) {
        auto& e = elements[it->second];
        if (mult) {
          e.mult = e.mult ? e.mult : mult;
        }
        if (constant) {
          e.constant = e.constant ? e.constant : constant;
        }
        return;
      }
      index.emplace(map, static_cast<index_t>(elements.size()));
      elements.push_back({std::move(map), mult, constant});
    };

    for (index_t s = 0; s < n; ++s) {
      std::vector<index_t> map(m);
      map[0] = s + 1;
      for (index_t x = 0; x < n; ++x) {
        map[x + 1] = (side == Side::Sharp ? t.product(x, s)
                                          : t.product(s, x))
                     + 1;
      }
      add(std::move(map), s, std::nullopt);
    }
    for (index_t c = 0; c < m; ++c) {
      add(std::vector<index_t>(m, c), std::nullopt, c);
    }

    // Sharp: x(uv) = (xu)v, so uv is "u then v".  Flat: (uv)x = u(vx).
    std::size_t const    k = elements.size();
    std::vector<index_t> table(k * k);
    for (index_t u = 0; u < k; ++u) {
      for (index_t v = 0; v < k; ++v) {
        auto const&          first  = side == Side::Sharp ? elements[u].map
                                                          : elements[v].map;
        auto const&          second = side == Side::Sharp ? elements[v].map
                                                          : elements[u].map;
        std::vector<index_t> comp(m);
        for (index_t x = 0; x < m; ++x) {
          comp[x] = second[first[x]];
        }
        table[u * k + v] = index.at(comp);
      }
    }
    std::vector<std::string> labels;
    std::string const        mark = side == Side::Sharp ? "#" : "b";
    for (auto const& e : elements) {
      if (e.constant) {
        labels.push_back(
            (*e.constant == 0 ? std::string("I") : t.label(*e.constant - 1))
            + mark);
      } else {
        labels.push_back(t.label(*e.mult));
      }
    }
    // Labels of T may collide with generated names; fall back to indices.
    Semigroup sg = Semigroup::from_table(k, std::move(table));
    std::set<std::string> distinct(labels.begin(), labels.end());
    if (distinct.size() == k) {
      sg = sg.with_labels(std::move(labels));
    }
    return {t, side, std::move(elements), std::move(sg)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Wreath products
  ////////////////////////////////////////////////////////////////////////

  WreathArithmetic::WreathArithmetic(Semigroup fiber, Semigroup top)
      : fiber_(std::move(fiber)), top_(std::move(top)), fiber_identity_(0) {
    auto e = identity_of(fiber_);
    if (!e) {
      throw PreconditionError("sgcore: the fiber of a wreath product must "
                              "be a monoid");
    }
    fiber_identity_ = *e;
  }

  WreathArithmetic::Element
  WreathArithmetic::multiply(Element const& a, Element const& b) const {
    Element out{std::vector<index_t>(a.f.size()), top_.product(a.t, b.t)};
    for (index_t x = 0; x < a.f.size(); ++x) {
      out.f[x] = fiber_.product(a.f[x], b.f[top_.product(x, a.t)]);
    }
    return out;
  }

  std::size_t WreathArithmetic::encode(Element const& e) const {
    std::size_t code = 0;
    for (std::size_t x = e.f.size(); x-- > 0;) {
      code = code * fiber_.size() + e.f[x];
    }
    std::size_t functions = 1;
    for (std::size_t x = 0; x < top_.size(); ++x) {
      functions *= fiber_.size();
    }
    return e.t * functions + code;
  }

  WreathArithmetic::Element WreathArithmetic::decode(std::size_t code) const {
    std::size_t functions = 1;
    for (std::size_t x = 0; x < top_.size(); ++x) {
      functions *= fiber_.size();
    }
    Element e{std::vector<index_t>(top_.size()),
              static_cast<index_t>(code / functions)};
    code %= functions;
    for (std::size_t x = 0; x < top_.size(); ++x) {
      e.f[x] = static_cast<index_t>(code % fiber_.size());
      code /= fiber_.size();
    }
    return e;
  }

  std::optional<std::size_t> WreathArithmetic::order() const {
    std::size_t total = top_.size();
    for (std::size_t x = 0; x < top_.size(); ++x) {
      if (total > (std::size_t(1) << 40) / fiber_.size()) {
        return std::nullopt;
      }
      total *= fiber_.size();
    }
    return total;
  }

  std::size_t
  ElementHash::operator()(WreathArithmetic::Element const& e) const noexcept {
    std::size_t h = e.t;
    for (auto x : e.f) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  Semigroup wreath_product(Semigroup const& m,
                           Semigroup const& t,
                           std::size_t      cap) {
    if (!is_monoid(m)) {
      throw PreconditionError("sgcore: wreath_product needs a monoid fiber");
    }
    WreathArithmetic arith(m, t);
    auto             order = arith.order();
    if (!order || *order > cap) {
      throw ResourceError("sgcore: wreath product exceeds size cap "
                          + std::to_string(cap));
    }
    std::size_t const                      n = *order;
    std::vector<WreathArithmetic::Element> elements;
    elements.reserve(n);
    for (std::size_t c = 0; c < n; ++c) {
      elements.push_back(arith.decode(c));
    }
    std::vector<index_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = static_cast<index_t>(
            arith.encode(arith.multiply(elements[a], elements[b])));
      }
    }
    return Semigroup::from_table(n, std::move(table));
  }

  FlatEmbedding flat_embed(Semigroup const& t,
                           Semigroup const& m,
                           std::size_t      cap) {
    auto one = identity_of(m);
    if (!one) {
      throw PreconditionError("sgcore: flat_embed needs a monoid M");
    }
    if (m.size() <= t.size()) {
      throw PreconditionError("sgcore: flat_embed needs |M| > |T| (|M| = "
                              + std::to_string(m.size()) + ", |T| = "
                              + std::to_string(t.size()) + ")");
    }
    std::size_t const n     = t.size();
    auto              flat  = augment(t, Side::Flat);
    auto              t_i   = adjoin(t, Adjoined::Identity).base;  // I at 0
    auto              tilde = adjoin(t_i, Adjoined::Zero).base;

    // Formal T^b: mult t at t, constant c (c in T^I) at n + c.  The product
    // u v applies v first.
    std::size_t const    k = 2 * n + 1;
    std::vector<index_t> table(k * k);
    for (index_t u = 0; u < k; ++u) {
      for (index_t v = 0; v < k; ++v) {
        index_t w = u;  // a constant absorbs on the right
        if (u < n) {
          w = v < n ? t.product(u, v)
                    : static_cast<index_t>(n) + t_i.product(u + 1, v - n);
        }
        table[u * k + v] = w;
      }
    }
    std::vector<std::string> labels;
    for (index_t u = 0; u < n; ++u) {
      labels.push_back(t.label(u));
    }
    labels.push_back("Ib");
    for (index_t u = 0; u < n; ++u) {
      labels.push_back(t.label(u) + "b");
    }
    auto formal = Semigroup::from_table(k, std::move(table), std::move(labels));

    // m_c for c in T^I: m_I = 1_M, m_t = the t-th non-identity element.
    std::vector<index_t> m_of(n + 1);
    m_of[0] = *one;
    {
      index_t next = 0;
      for (index_t c = 0; c < n; ++c, ++next) {
        if (next == *one) {
          ++next;
        }
        m_of[c + 1] = next;
      }
    }
    WreathArithmetic                       arith(m, tilde);
    std::vector<WreathArithmetic::Element> image;
    std::vector<index_t>                   quotient(k);
    for (index_t u = 0; u < k; ++u) {
      WreathArithmetic::Element x{std::vector<index_t>(tilde.size(), *one),
                                  0};
      if (u < n) {
        x.t         = u + 2;
        quotient[u] = flat.mult_index(u);
      } else {
        // (f_c, 0): f_c(0) = 1_M, f_c(t') = m_{t'c} for t' in T^I.
        index_t const c = u - static_cast<index_t>(n);
        for (index_t tp = 0; tp <= n; ++tp) {
          x.f[tp + 1] = m_of[t_i.product(tp, c)];
        }
        quotient[u] = flat.const_index(c);
      }
      image.push_back(std::move(x));
    }
    auto cl = closure(
        image,
        [&arith](auto const& a, auto const& b) { return arith.multiply(a, b); },
        cap,
        ElementHash{});
    SgHom hom{formal, cl.semigroup, cl.gen_indices};
    if (auto v = hom.hom_violation()) {
      throw VerificationError("sgcore: flat embedding fails the "
                              "homomorphism law at ("
                              + std::to_string(v->first) + ","
                              + std::to_string(v->second) + ")");
    }
    if (!hom.is_injective()) {
      throw VerificationError("sgcore: flat embedding is not injective");
    }
    SgHom q{formal, flat.semigroup, std::move(quotient)};
    if (!q.is_hom() || !q.is_surjective()) {
      throw VerificationError("sgcore: T^b is not a quotient of the formal "
                              "flat semigroup");
    }
    // Every generator of the closure is an image, so cl is exactly im(i).
    std::vector<index_t> back(cl.semigroup.size(), kUnmapped);
    for (index_t u = 0; u < k; ++u) {
      back[hom.map[u]] = q.map[u];
    }
    DivisionWitness division{cl.semigroup,
                             Subset::full(cl.semigroup.size()),
                             std::move(back)};
    if (auto check = is_division_witness(flat.semigroup, division); !check) {
      throw VerificationError("sgcore: flat division witness rejected: "
                              + check.detail);
    }
    return {std::move(formal), std::move(hom),   std::move(q),
            std::move(division), std::move(arith), std::move(cl.elements)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Triple products
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::string> ActionPair::violation() const {
    std::size_t const nl = left_actor.size(), nr = right_actor.size(),
                      ns = carrier.size();
    if (left.size() != nl * ns || right.size() != ns * nr) {
      return "action tables have the wrong size";
    }
    for (auto x : left) {
      if (x >= ns) {
        return "left action value out of range";
      }
    }
    for (auto x : right) {
      if (x >= ns) {
        return "right action value out of range";
      }
    }
    for (index_t l = 0; l < nl; ++l) {
      for (index_t lp = 0; lp < nl; ++lp) {
        for (index_t s = 0; s < ns; ++s) {
          if (act_left(l, act_left(lp, s))
              != act_left(left_actor.product(l, lp), s)) {
            return "left action law fails at (" + std::to_string(l) + ","
                   + std::to_string(lp) + "," + std::to_string(s) + ")";
          }
        }
      }
    }
    for (index_t s = 0; s < ns; ++s) {
      for (index_t r = 0; r < nr; ++r) {
        for (index_t rp = 0; rp < nr; ++rp) {
          if (act_right(act_right(s, r), rp)
              != act_right(s, right_actor.product(r, rp))) {
            return "right action law fails at (" + std::to_string(s) + ","
                   + std::to_string(r) + "," + std::to_string(rp) + ")";
          }
        }
      }
    }
    for (index_t l = 0; l < nl; ++l) {
      for (index_t s = 0; s < ns; ++s) {
        for (index_t r = 0; r < nr; ++r) {
          if (act_right(act_left(l, s), r) != act_left(l, act_right(s, r))) {
            return "actions do not commute at (" + std::to_string(l) + ","
                   + std::to_string(s) + "," + std::to_string(r) + ")";
          }
        }
      }
    }
    for (index_t a = 0; a < ns; ++a) {
      for (index_t b = 0; b < ns; ++b) {
        index_t const sum = carrier.product(a, b);
        for (index_t l = 0; l < nl; ++l) {
          if (act_left(l, sum)
              != carrier.product(act_left(l, a), act_left(l, b))) {
            return "left action does not distribute over + at ("
                   + std::to_string(l) + "," + std::to_string(a) + ","
                   + std::to_string(b) + ")";
          }
        }
        for (index_t r = 0; r < nr; ++r) {
          if (act_right(sum, r)
              != carrier.product(act_right(a, r), act_right(b, r))) {
            return "right action does not distribute over + at ("
                   + std::to_string(a) + "," + std::to_string(b) + ","
                   + std::to_string(r) + ")";
          }
        }
      }
    }
    return std::nullopt;
  }

  ActionPair trivial_actions(Semigroup const& s) {
    std::vector<index_t> fix(s.size());
    for (index_t x = 0; x < s.size(); ++x) {
      fix[x] = x;
    }
    auto one = Semigroup::from_table(1, {0});
    return {one, one, s, fix, fix};
  }

  ActionPair zero_actions(Semigroup const& s) {
    auto                 zero = adjoin(s, Adjoined::Zero).base;
    std::size_t const    n    = zero.size();
    auto                 u1   = Semigroup::from_table(2, {0, 1, 1, 1},
                                                      {"1", "0"});
    std::vector<index_t> left(2 * n), right(n * 2);
    for (index_t x = 0; x < n; ++x) {
      left[x]          = x;
      left[n + x]      = 0;
      right[x * 2]     = x;
      right[x * 2 + 1] = 0;
    }
    return {u1, u1, std::move(zero), std::move(left), std::move(right)};
  }

  Semigroup triple_product(ActionPair const& a) {
    if (auto v = a.violation()) {
      throw PreconditionError("sgcore: triple_product: " + *v);
    }
    std::size_t const nr = a.right_actor.size(), ns = a.carrier.size(),
                      nl = a.left_actor.size(), n = nr * ns * nl;
    std::vector<index_t> table(n * n);
    for (index_t x = 0; x < n; ++x) {
      index_t r = x / (ns * nl), s = (x / nl) % ns, l = x % nl;
      for (index_t y = 0; y < n; ++y) {
        index_t rp = y / (ns * nl), sp = (y / nl) % ns, lp = y % nl;
        index_t rr = a.right_actor.product(r, rp);
        index_t ss = a.carrier.product(a.act_right(s, rp), a.act_left(l, sp));
        index_t ll = a.left_actor.product(l, lp);
        table[x * n + y] = (rr * ns + ss) * nl + ll;
      }
    }
    return Semigroup::from_table(n, std::move(table));
  }

}  // namespace sgkit
