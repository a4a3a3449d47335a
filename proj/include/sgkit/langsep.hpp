#ifndef SGKIT_LANGSEP_HPP_
#define SGKIT_LANGSEP_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sgkit/psat.hpp"
#include "sgkit/semigroup.hpp"

namespace sgkit {

  struct Dfa {
    std::size_t              states = 0;
    std::vector<std::string> alphabet;
    index_t                  init = 0;
    Subset                   finals;
    std::vector<index_t>     delta;  // delta[q * |A| + a]

    index_t step(index_t q, letter_t a) const noexcept {
      return delta[q * alphabet.size() + a];
    }
    bool accepts(Word const& w) const;
    void validate() const;
  };

  // ".dfa": `states <n>`, `alphabet <l1> ...`, `init <q>`, `final <q> ...`
  // and one `trans <q> <letter> <q'>` per edge.
  Dfa parse_dfa(std::string_view text);

  // Transition semigroup of the reachable part of the product automaton.
  // Elements are labelled by their shortest word.
  struct Recognizer {
    std::vector<std::pair<index_t, index_t>> product_states;  // index 0: init
    Semigroup                                s;
    FreeHom                                  phi;
    Subset                                   f1, f2;
    std::vector<std::vector<index_t>>        transformations;
  };

  Recognizer build_recognizer(Dfa const& d1, Dfa const& d2,
                              std::size_t cap = Limits{}.closure);

  // Agreement of phi with direct runs of both automata on every word up to
  // `max_len`; returns the first disagreeing word, if any.
  std::optional<Word> recognizer_mismatch(Dfa const& d1, Dfa const& d2,
                                          Recognizer const& r,
                                          std::size_t       max_len = 6);

  struct Separation {
    bool                separable = false;
    std::optional<Word> common_word;
    // Least pointlike pair (s1, s2) with s1 in F1 and s2 in F2.
    std::optional<std::pair<index_t, index_t>> pair;
    std::pair<std::string, std::string>         pair_labels;
    std::size_t                                 recognizer_size = 0;
    bool                                        aperiodic       = false;
  };

  Separation decide_fo_separability(Dfa const& d1, Dfa const& d2,
                                    Limits const& limits = {});

  std::string format_word(std::vector<std::string> const& alphabet,
                          Word const&                     w);
  // `SEPARABLE` or `INSEPARABLE witness=...`.
  std::string format_verdict(std::vector<std::string> const& alphabet,
                             Separation const&               s);

}  // namespace sgkit

#endif  // SGKIT_LANGSEP_HPP_
