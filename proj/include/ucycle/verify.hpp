#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ucycle/word_classes.hpp"

namespace ucycle {

struct WindowFailure {
  std::size_t index = 0;  // position of the offending window in the cycle
  Word window;
};

struct VerificationReport {
  bool length_ok = false;
  bool windows_all_members = false;
  bool windows_distinct = false;
  bool count_matches_class = false;
  std::optional<WindowFailure> first_failure;

  std::uint64_t expected_count = 0;
  std::uint64_t cycle_length = 0;
  std::uint64_t distinct_windows = 0;

  bool pass() const {
    return length_ok && windows_all_members && windows_distinct && count_matches_class;
  }
};

// Independent check of a candidate cycle: the cycle must be exactly as long as
// the class, every wrapped window of length m must be a member, and the
// windows must be pairwise distinct. The class size is always recounted by
// the brute-force oracle, never taken from a closed form. Shares no code with
// the circuit construction.
VerificationReport verify_ucycle(const ClassSpec& spec,
                                 const std::vector<Letter>& cycle,
                                 std::uint64_t budget = kDefaultBudget);

// Same check against a precomputed class size, for callers verifying many
// candidate cycles of one class.
VerificationReport verify_ucycle_with_count(const ClassSpec& spec,
                                            const std::vector<Letter>& cycle,
                                            std::uint64_t expected_count);

}  // namespace ucycle
