#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ucycle/word_classes.hpp"

namespace ucycle {

// Arbitrary-precision natural number. Counts like ordered Bell numbers or
// multinomials overflow 64 bits well inside the supported parameter range,
// and a silently wrapped count would poison every cross-check downstream.
class BigNat {
 public:
  BigNat() = default;
  BigNat(std::uint64_t value);  // NOLINT: implicit by design, counts are naturals

  static BigNat pow(std::uint64_t base, int exponent);

  BigNat& operator+=(const BigNat& rhs);
  BigNat& operator-=(const BigNat& rhs);  // throws std::logic_error on underflow
  BigNat operator+(const BigNat& rhs) const;
  BigNat operator-(const BigNat& rhs) const;
  BigNat operator*(const BigNat& rhs) const;

  bool operator==(const BigNat& rhs) const { return limbs_ == rhs.limbs_; }
  bool operator!=(const BigNat& rhs) const { return !(*this == rhs); }
  bool operator<(const BigNat& rhs) const;
  bool operator<=(const BigNat& rhs) const { return !(rhs < *this); }

  bool is_zero() const { return limbs_.empty(); }
  std::string to_string() const;

 private:
  // base-1e9 digits, least significant first, no trailing zero limbs
  std::vector<std::uint32_t> limbs_;
};

std::ostream& operator<<(std::ostream& os, const BigNat& value);

BigNat factorial(int n);
BigNat binomial(int n, int k);

// Number of rankings of m items (ordered Bell numbers), via the recurrence
// a(m) = sum_{j=1..m} C(m,j) a(m-j), a(0) = 1.
BigNat ordered_bell(int m);

// Number of onto functions from k positions to n letters, by
// inclusion-exclusion: sum_j (-1)^j C(n,j) (n-j)^k.
BigNat surjection_count(int k, int n);

// Closed-form class cardinality, when one is implemented. SInequitable
// intentionally has none and is counted by brute force only.
std::optional<BigNat> count_closed_form(const ClassSpec& spec);

// |enumerate_class(spec)|, subject to the enumeration budget.
std::uint64_t count_brute_force(const ClassSpec& spec,
                                std::uint64_t budget = kDefaultBudget);

struct CountReport {
  std::optional<BigNat> closed_form;        // nullopt: unavailable
  std::optional<std::uint64_t> brute_force; // nullopt: skipped (budget)
  bool consistent = true;                   // false only if both present and unequal
};

CountReport make_count_report(const ClassSpec& spec,
                              std::uint64_t budget = kDefaultBudget);

}  // namespace ucycle
