#include "sgkit/merge.hpp"

#include <algorithm>

namespace sgkit {

  void MergeInput::validate() const {
    auto const k = alphabet.size();
    if (part.size() != k || letter_image.size() != k) {
      throw PreconditionError("merge: letter data has inconsistent sizes");
    }
    bool has1 = false, has2 = false;
    for (std::size_t a = 0; a < k; ++a) {
      bool const one = part[a] == Part::One;
      (one ? has1 : has2) = true;
      if (letter_image[a] >= (one ? t1 : t2).size()) {
        throw PreconditionError("merge: image of letter '" + alphabet[a]
                                + "' out of range");
      }
    }
    if (!has1 || !has2) {
      throw PreconditionError("merge: both subalphabets must be nonempty");
    }
    if (chi.size() != t1.size() * t2.size()) {
      throw PreconditionError("merge: chi must be given on every pair");
    }
    for (auto c : chi) {
      if (c >= t0.size()) {
        throw PreconditionError("merge: chi value out of range");
      }
    }
  }

  void MiddleFn::rehash() noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto c : cells) {
      h = (h ^ c) * 1099511628211ULL;
    }
    hash = h;
  }

  std::size_t MergeElementHash::operator()(MergeElement const& e) const noexcept {
    return e.mid.hash ^ (std::size_t(e.right) * 0x9e3779b97f4a7c15ULL)
           ^ (std::size_t(e.left) * 0xc2b2ae3d27d4eb4fULL);
  }

  ////////////////////////////////////////////////////////////////////////
  // Arithmetic
  ////////////////////////////////////////////////////////////////////////

  MergeArithmetic::MergeArithmetic(MergeInput in)
      : in_((in.validate(), std::move(in))),
        sharp1_(augment(in_.t1, Side::Sharp)),
        flat2_(augment(in_.t2, Side::Flat)),
        t0i_(adjoin(in_.t0, Adjoined::Identity).base),
        t1i_(adjoin(in_.t1, Adjoined::Identity).base),
        t2i_(adjoin(in_.t2, Adjoined::Identity).base),
        n1i_(in_.t1.size() + 1),
        n2i_(in_.t2.size() + 1) {}

  MiddleFn MergeArithmetic::add(MiddleFn const& a, MiddleFn const& b) const {
    MiddleFn out{std::vector<index_t>(a.cells.size())};
    for (std::size_t k = 0; k < a.cells.size(); ++k) {
      out.cells[k] = t0i_.product(a.cells[k], b.cells[k]);
    }
    out.rehash();
    return out;
  }

  MiddleFn MergeArithmetic::act_left(index_t l, MiddleFn const& s) const {
    MiddleFn out{std::vector<index_t>(s.cells.size())};
    for (index_t x = 0; x < n1i_; ++x) {
      index_t const xl = sharp1_.apply(l, x);
      for (index_t y = 0; y < n2i_; ++y) {
        out.cells[x * n2i_ + y] = s.cells[xl * n2i_ + y];
      }
    }
    out.rehash();
    return out;
  }

  MiddleFn MergeArithmetic::act_right(MiddleFn const& s, index_t r) const {
    MiddleFn out{std::vector<index_t>(s.cells.size())};
    for (index_t x = 0; x < n1i_; ++x) {
      for (index_t y = 0; y < n2i_; ++y) {
        out.cells[x * n2i_ + y] = s.cells[x * n2i_ + flat2_.apply(r, y)];
      }
    }
    out.rehash();
    return out;
  }

  MergeElement MergeArithmetic::multiply(MergeElement const& x,
                                         MergeElement const& y) const {
    // (r, s, l)(r', s', l') = (r r', s r' + l s', l l')
    MergeElement out{flat2_.semigroup.product(x.right, y.right),
                     MiddleFn{std::vector<index_t>(x.mid.cells.size())},
                     sharp1_.semigroup.product(x.left, y.left)};
    for (index_t a = 0; a < n1i_; ++a) {
      index_t const al = sharp1_.apply(x.left, a);
      for (index_t b = 0; b < n2i_; ++b) {
        out.mid.cells[a * n2i_ + b]
            = t0i_.product(x.mid.cells[a * n2i_ + flat2_.apply(y.right, b)],
                           y.mid.cells[al * n2i_ + b]);
      }
    }
    out.mid.rehash();
    return out;
  }

  MiddleFn MergeArithmetic::constant_identity() const {
    MiddleFn out{std::vector<index_t>(n1i_ * n2i_, 0)};
    out.rehash();
    return out;
  }

  MiddleFn MergeArithmetic::s_table(std::span<letter_t const> w1) const {
    if (w1.empty()) {
      throw PreconditionError("merge: s_w needs a nonempty word");
    }
    std::vector<index_t> images;
    for (auto a : w1) {
      if (a >= in_.alphabet.size() || in_.part[a] != Part::One) {
        throw PreconditionError("merge: s_w needs a word over A1");
      }
      images.push_back(in_.letter_image[a]);
    }
    index_t const p = in_.t1.product(images);
    MiddleFn      out{std::vector<index_t>(n1i_ * n2i_, 0)};
    for (index_t x = 0; x < n1i_; ++x) {
      index_t const xp = x == 0 ? p : in_.t1.product(x - 1, p);
      for (index_t y = 1; y < n2i_; ++y) {
        out.cells[x * n2i_ + y] = in_.chi_of(xp, y - 1) + 1;
      }
    }
    out.rehash();
    return out;
  }

  MergeElement MergeArithmetic::generator(letter_t a) const {
    if (in_.part[a] == Part::One) {
      letter_t const w[] = {a};
      return {flat2_.const_index(0), s_table(w),
              sharp1_.mult_index(in_.letter_image[a])};
    }
    return {flat2_.mult_index(in_.letter_image[a]), constant_identity(),
            sharp1_.const_index(0)};
  }

  MergeTriple MergeArithmetic::f_map(MergeElement const& e) const {
    return {flat2_.apply(e.right, 0), e.mid.cells[0], sharp1_.apply(e.left, 0)};
  }

  FreeHom MergeDecomposition::psi_m() const {
    return {input().alphabet, generated.semigroup, generated.gen_indices};
  }

  ////////////////////////////////////////////////////////////////////////
  // Word functions
  ////////////////////////////////////////////////////////////////////////

  namespace {

    void check_word(MergeInput const& in, std::span<letter_t const> w) {
      for (auto a : w) {
        if (a >= in.alphabet.size()) {
          throw PreconditionError("merge: letter out of range");
        }
      }
    }

    index_t block_value(MergeInput const&         in,
                        std::span<letter_t const> block) {
      Semigroup const&     t = in.part[block[0]] == Part::One ? in.t1 : in.t2;
      std::vector<index_t> images;
      for (auto a : block) {
        images.push_back(in.letter_image[a]);
      }
      return t.product(images);
    }

  }  // namespace

  std::vector<std::pair<index_t, index_t>> mu(MergeInput const&         in,
                                              std::span<letter_t const> w) {
    check_word(in, w);
    std::vector<std::pair<index_t, index_t>> out;
    std::size_t                              k = 0;
    if (w.empty()) {
      throw PreconditionError("merge: mu needs a nonempty word");
    }
    while (k < w.size()) {
      std::size_t b1 = k;
      while (k < w.size() && in.part[w[k]] == Part::One) {
        ++k;
      }
      std::size_t b2 = k;
      while (k < w.size() && in.part[w[k]] == Part::Two) {
        ++k;
      }
      if (b1 == b2 || b2 == k) {
        throw PreconditionError("merge: word is not in (A1+ A2+)+ (block at "
                                "position "
                                + std::to_string(b1) + ")");
      }
      out.emplace_back(block_value(in, w.subspan(b1, b2 - b1)),
                       block_value(in, w.subspan(b2, k - b2)));
    }
    return out;
  }

  index_t psi0(MergeInput const& in, std::span<letter_t const> w) {
    std::vector<index_t> values;
    for (auto [a, b] : mu(in, w)) {
      values.push_back(in.chi_of(a, b));
    }
    return in.t0.product(values);
  }

  MergeTriple tau(MergeInput const& in, std::span<letter_t const> w) {
    check_word(in, w);
    std::size_t i = 0;
    while (i < w.size() && in.part[w[i]] == Part::Two) {
      ++i;
    }
    std::size_t j = w.size();
    while (j > i && in.part[w[j - 1]] == Part::One) {
      --j;
    }
    MergeTriple out{0, 0, 0};
    if (i > 0) {
      out.t2 = block_value(in, w.first(i)) + 1;
    }
    if (j > i) {
      out.t0 = psi0(in, w.subspan(i, j - i)) + 1;
    }
    if (j < w.size()) {
      out.t1 = block_value(in, w.subspan(j)) + 1;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Construction and verification
  ////////////////////////////////////////////////////////////////////////

  MergeDecomposition build_merge(MergeInput in, std::size_t cap) {
    MergeArithmetic           arith(std::move(in));
    std::vector<MergeElement> gens;
    for (letter_t a = 0; a < arith.input().alphabet.size(); ++a) {
      gens.push_back(arith.generator(a));
    }
    auto generated = closure(
        gens,
        [&arith](MergeElement const& x, MergeElement const& y) {
          return arith.multiply(x, y);
        },
        cap,
        MergeElementHash{});

    // The two actions must commute; checked on the middle coordinates of
    // the generated part (at most 32 of them) against all actors.
    std::size_t const sample = std::min<std::size_t>(32, generated.elements.size());
    auto const&       sharp  = arith.sharp1();
    auto const&       flat   = arith.flat2();
    for (std::size_t k = 0; k < sample; ++k) {
      auto const& s = generated.elements[k].mid;
      for (index_t l = 0; l < sharp.elements.size(); ++l) {
        auto ls = arith.act_left(l, s);
        for (index_t r = 0; r < flat.elements.size(); ++r) {
          if (arith.act_right(ls, r) != arith.act_left(l, arith.act_right(s, r))) {
            throw VerificationError("merge: actions do not commute at (l="
                                    + std::to_string(l) + ", r="
                                    + std::to_string(r) + ")");
          }
        }
      }
    }
    return {std::move(arith), std::move(generated)};
  }

  MergeReport verify_merge(MergeDecomposition const& m, std::size_t max_len) {
    if (max_len == 0) {
      throw PreconditionError("merge: verify_merge needs L >= 1");
    }
    MergeReport report;
    report.generated_size = m.generated.elements.size();
    auto const& in        = m.input();
    auto const& gens      = m.generated.gen_indices;
    auto const& table     = m.generated.semigroup;
    std::size_t const k   = in.alphabet.size();

    Word                 w;
    std::vector<index_t> value;  // psi_M of each prefix
    auto visit = [&](auto&& self) -> void {
      ++report.words_checked;
      if (m.arithmetic.f_map(m.generated.elements[value.back()]) != tau(in, w)) {
        report.counterexamples.push_back(w);
      }
      if (w.size() == max_len) {
        return;
      }
      for (letter_t a = 0; a < k; ++a) {
        w.push_back(a);
        value.push_back(table.product(value.back(), gens[a]));
        self(self);
        w.pop_back();
        value.pop_back();
      }
    };
    for (letter_t a = 0; a < k; ++a) {
      w     = {a};
      value = {gens[a]};
      visit(visit);
    }
    return report;
  }

  CoverInput cover_input(Semigroup const& s, Subset const& t1,
                         Subset const& t2) {
    for (auto const* t : {&t1, &t2}) {
      if (t->universe() != s.size() || t->empty() || !is_closed(s, *t)) {
        throw PreconditionError("merge: cover parts must be nonempty "
                                "subsemigroups");
      }
    }
    if (generated_subset(s, t1 | t2).count() != s.size()) {
      throw PreconditionError("merge: T1 and T2 do not generate S");
    }
    Subset products(s.size());
    t1.for_each([&](index_t a) {
      t2.for_each([&](index_t b) { products.insert(s.product(a, b)); });
    });
    Subset const t0 = generated_subset(s, products);

    auto sub1 = subsemigroup(s, t1);
    auto sub2 = subsemigroup(s, t2);
    auto sub0 = subsemigroup(s, t0);
    std::vector<index_t> local0(s.size(), 0);
    for (index_t k = 0; k < sub0.to_parent.size(); ++k) {
      local0[sub0.to_parent[k]] = k;
    }

    MergeInput in{{}, {}, {}, sub1.semigroup, sub2.semigroup, sub0.semigroup, {}};
    for (index_t k = 0; k < sub1.to_parent.size(); ++k) {
      in.alphabet.push_back(s.label(sub1.to_parent[k]) + "@1");
      in.part.push_back(Part::One);
      in.letter_image.push_back(k);
    }
    for (index_t k = 0; k < sub2.to_parent.size(); ++k) {
      in.alphabet.push_back(s.label(sub2.to_parent[k]) + "@2");
      in.part.push_back(Part::Two);
      in.letter_image.push_back(k);
    }
    for (auto a : sub1.to_parent) {
      for (auto b : sub2.to_parent) {
        in.chi.push_back(local0[s.product(a, b)]);
      }
    }
    return {std::move(in), std::move(sub1.to_parent), std::move(sub2.to_parent),
            std::move(sub0.to_parent)};
  }

  CoverDivision division_from_cover(Semigroup const& s,
                                    Subset const&    t1,
                                    Subset const&    t2,
                                    std::size_t      cap) {
    auto cover = cover_input(s, t1, t2);
    auto merge = build_merge(cover.input, cap);

    auto const&          host = merge.generated.semigroup;
    std::vector<index_t> map(host.size());
    for (index_t t = 0; t < host.size(); ++t) {
      auto const           f = merge.arithmetic.f_map(merge.generated.elements[t]);
      // m(t2, t0, t1) = t2 t0 t1, omitting identity factors.
      std::vector<index_t> factors;
      if (f.t2 != 0) {
        factors.push_back(cover.t2_elements[f.t2 - 1]);
      }
      if (f.t0 != 0) {
        factors.push_back(cover.t0_elements[f.t0 - 1]);
      }
      if (f.t1 != 0) {
        factors.push_back(cover.t1_elements[f.t1 - 1]);
      }
      if (factors.empty()) {
        throw VerificationError("merge: f maps an element to (I, I, I)");
      }
      map[t] = s.product(factors);
    }
    DivisionWitness witness{host, Subset::full(host.size()), std::move(map)};
    if (auto check = is_division_witness(s, witness); !check) {
      throw VerificationError(std::string("merge: cover division fails (")
                              + to_string(check.reason) + ": " + check.detail
                              + ")");
    }
    return {std::move(cover), std::move(merge), std::move(witness)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Random fixtures
  ////////////////////////////////////////////////////////////////////////

  Semigroup random_semigroup(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<index_t> pick(0, static_cast<index_t>(n - 1));
    std::vector<index_t>                   table(n * n);
    while (true) {
      for (auto& c : table) {
        c = pick(rng);
      }
      bool assoc = true;
      for (index_t i = 0; i < n && assoc; ++i) {
        for (index_t j = 0; j < n && assoc; ++j) {
          for (index_t k = 0; k < n && assoc; ++k) {
            assoc = table[table[i * n + j] * n + k]
                    == table[i * n + table[j * n + k]];
          }
        }
      }
      if (assoc) {
        return Semigroup::from_table(n, table);
      }
    }
  }

  MergeInput random_merge_input(std::mt19937_64& rng, std::size_t max_size) {
    std::uniform_int_distribution<std::size_t> size(1, max_size);
    std::uniform_int_distribution<std::size_t> letters(1, 2);
    auto       t1 = random_semigroup(size(rng), rng);
    auto       t2 = random_semigroup(size(rng), rng);
    auto       t0 = random_semigroup(size(rng), rng);
    MergeInput in{{}, {}, {}, std::move(t1), std::move(t2), std::move(t0), {}};
    auto below = [&rng](std::size_t n) {
      return std::uniform_int_distribution<index_t>(
          0, static_cast<index_t>(n - 1))(rng);
    };
    std::size_t const k1 = letters(rng), k2 = letters(rng);
    for (std::size_t a = 0; a < k1; ++a) {
      in.alphabet.push_back("a" + std::to_string(a));
      in.part.push_back(Part::One);
      in.letter_image.push_back(below(in.t1.size()));
    }
    for (std::size_t b = 0; b < k2; ++b) {
      in.alphabet.push_back("b" + std::to_string(b));
      in.part.push_back(Part::Two);
      in.letter_image.push_back(below(in.t2.size()));
    }
    for (std::size_t p = 0; p < in.t1.size() * in.t2.size(); ++p) {
      in.chi.push_back(below(in.t0.size()));
    }
    return in;
  }

}  // namespace sgkit
