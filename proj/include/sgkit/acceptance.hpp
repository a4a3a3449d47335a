#ifndef SGKIT_ACCEPTANCE_HPP_
#define SGKIT_ACCEPTANCE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "sgkit/fixtures.hpp"
#include "sgkit/langsep.hpp"

namespace sgkit {

  // The fixture-corpus acceptance suite behind `sgkit selftest`.  Reports
  // contain no timings so that repeated runs are byte-identical.

  struct AcceptanceOptions {
    Limits        limits;
    std::size_t   merge_len     = 6;
    std::size_t   random_merges = 50;
    std::uint64_t seed          = 0x5eed;
  };

  struct CriterionResult {
    int                      id = 0;
    std::string              title;
    bool                     pass = false;
    std::vector<std::string> details;
  };

  // DFA fixtures; the same automata are shipped as data/*.dfa.
  std::string_view dfa_text(std::string_view name);
  Dfa              dfa_fixture(std::string_view name);

  // fixtures::corpus() followed by the transition semigroups of the
  // langsep fixture pairs.
  std::vector<fixtures::Named> acceptance_corpus();

  // Criteria 1 to 8.
  CriterionResult run_criterion(int id, AcceptanceOptions const& opts = {});
  inline constexpr int kCriteria = 8;

  std::string format_result(CriterionResult const& r);

  // Criteria 1 to 8, then criterion 9: a second run of the same suite
  // compared byte for byte with the first.
  std::vector<CriterionResult> run_selftest(AcceptanceOptions const& opts = {});
  std::string format_report(std::vector<CriterionResult> const& results);

}  // namespace sgkit

#endif  // SGKIT_ACCEPTANCE_HPP_
