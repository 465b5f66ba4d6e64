#include "ucycle/verify.hpp"

#include <set>

#include "ucycle/counting.hpp"
#include "ucycle/errors.hpp"

namespace ucycle {

VerificationReport verify_ucycle_with_count(const ClassSpec& input,
                                            const std::vector<Letter>& cycle,
                                            std::uint64_t expected_count) {
  const ClassSpec spec = validate_spec(input).spec;
  for (Letter x : cycle) {
    if (x < 1 || x > spec.n) {
      throw ContractError("cycle letter " + std::to_string(x) + " outside [1, " +
                          std::to_string(spec.n) + "]");
    }
  }

  VerificationReport report;
  report.expected_count = expected_count;
  report.cycle_length = cycle.size();
  report.length_ok = cycle.size() == expected_count;

  if (cycle.empty()) {
    report.windows_all_members = false;
    report.windows_distinct = false;
    report.count_matches_class = false;
    return report;
  }

  report.windows_all_members = true;
  report.windows_distinct = true;
  const std::size_t length = cycle.size();
  const auto m = static_cast<std::size_t>(spec.m);
  std::set<Word> seen;
  Word window(m, 0);
  for (std::size_t i = 0; i < length; ++i) {
    for (std::size_t j = 0; j < m; ++j) window[j] = cycle[(i + j) % length];
    if (!is_member(spec, window)) {
      report.windows_all_members = false;
      if (!report.first_failure) report.first_failure = {i, window};
    }
    if (!seen.insert(window).second) {
      report.windows_distinct = false;
      if (!report.first_failure) report.first_failure = {i, window};
    }
  }
  report.distinct_windows = seen.size();
  report.count_matches_class = report.distinct_windows == expected_count;
  return report;
}

VerificationReport verify_ucycle(const ClassSpec& spec,
                                 const std::vector<Letter>& cycle,
                                 std::uint64_t budget) {
  return verify_ucycle_with_count(spec, cycle, count_brute_force(spec, budget));
}

}  // namespace ucycle
