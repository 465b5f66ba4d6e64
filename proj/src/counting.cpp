#include "ucycle/counting.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "ucycle/errors.hpp"

namespace ucycle {

namespace {
constexpr std::uint64_t kLimbBase = 1'000'000'000;
}

BigNat::BigNat(std::uint64_t value) {
  while (value > 0) {
    limbs_.push_back(static_cast<std::uint32_t>(value % kLimbBase));
    value /= kLimbBase;
  }
}

BigNat BigNat::pow(std::uint64_t base, int exponent) {
  BigNat result{1};
  const BigNat b{base};
  for (int i = 0; i < exponent; ++i) result = result * b;
  return result;
}

BigNat& BigNat::operator+=(const BigNat& rhs) {
  const std::size_t size = std::max(limbs_.size(), rhs.limbs_.size());
  limbs_.resize(size, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < size; ++i) {
    std::uint64_t cur = carry + limbs_[i] + (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0);
    limbs_[i] = static_cast<std::uint32_t>(cur % kLimbBase);
    carry = cur / kLimbBase;
  }
  if (carry > 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

BigNat& BigNat::operator-=(const BigNat& rhs) {
  if (*this < rhs) throw std::logic_error("BigNat subtraction underflow");
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t cur = static_cast<std::int64_t>(limbs_[i]) - borrow -
                       (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0);
    if (cur < 0) {
      cur += static_cast<std::int64_t>(kLimbBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    limbs_[i] = static_cast<std::uint32_t>(cur);
  }
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  return *this;
}

BigNat BigNat::operator+(const BigNat& rhs) const {
  BigNat out = *this;
  out += rhs;
  return out;
}

BigNat BigNat::operator-(const BigNat& rhs) const {
  BigNat out = *this;
  out -= rhs;
  return out;
}

BigNat BigNat::operator*(const BigNat& rhs) const {
  if (is_zero() || rhs.is_zero()) return BigNat{};
  BigNat out;
  out.limbs_.assign(limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
      std::uint64_t cur = out.limbs_[i + j] + carry +
                          static_cast<std::uint64_t>(limbs_[i]) * rhs.limbs_[j];
      out.limbs_[i + j] = static_cast<std::uint32_t>(cur % kLimbBase);
      carry = cur / kLimbBase;
    }
    std::size_t k = i + rhs.limbs_.size();
    while (carry > 0) {
      std::uint64_t cur = out.limbs_[k] + carry;
      out.limbs_[k] = static_cast<std::uint32_t>(cur % kLimbBase);
      carry = cur / kLimbBase;
      ++k;
    }
  }
  while (!out.limbs_.empty() && out.limbs_.back() == 0) out.limbs_.pop_back();
  return out;
}

bool BigNat::operator<(const BigNat& rhs) const {
  if (limbs_.size() != rhs.limbs_.size()) return limbs_.size() < rhs.limbs_.size();
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] < rhs.limbs_[i];
  }
  return false;
}

std::string BigNat::to_string() const {
  if (limbs_.empty()) return "0";
  std::string out = std::to_string(limbs_.back());
  char buf[16];
  for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
    std::snprintf(buf, sizeof buf, "%09u", limbs_[i]);
    out += buf;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const BigNat& value) {
  return os << value.to_string();
}

BigNat factorial(int n) {
  BigNat out{1};
  for (int i = 2; i <= n; ++i) out = out * BigNat{static_cast<std::uint64_t>(i)};
  return out;
}

BigNat binomial(int n, int k) {
  if (k < 0 || k > n) return BigNat{};
  k = std::min(k, n - k);
  // Pascal row; addition-only keeps everything exact without division.
  std::vector<BigNat> row(static_cast<std::size_t>(k) + 1);
  row[0] = BigNat{1};
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
    }
  }
  return row[static_cast<std::size_t>(k)];
}

BigNat ordered_bell(int m) {
  std::vector<std::vector<BigNat>> choose(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) {
    choose[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(i) + 1);
    choose[static_cast<std::size_t>(i)][0] = BigNat{1};
    for (int j = 1; j <= i; ++j) {
      choose[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          choose[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      if (j < i) {
        choose[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
            choose[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
      }
    }
  }
  std::vector<BigNat> a(static_cast<std::size_t>(m) + 1);
  a[0] = BigNat{1};
  for (int i = 1; i <= m; ++i) {
    BigNat total;
    for (int j = 1; j <= i; ++j) {
      total += choose[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
               a[static_cast<std::size_t>(i - j)];
    }
    a[static_cast<std::size_t>(i)] = total;
  }
  return a[static_cast<std::size_t>(m)];
}

BigNat surjection_count(int k, int n) {
  if (n < 0 || k < 0) return BigNat{};
  BigNat plus, minus;
  for (int j = 0; j <= n; ++j) {
    BigNat term = binomial(n, j) * BigNat::pow(static_cast<std::uint64_t>(n - j), k);
    if (j % 2 == 0) {
      plus += term;
    } else {
      minus += term;
    }
  }
  return plus - minus;
}

namespace {

// product of binomials over running sums; an exact multinomial with no division
BigNat multinomial(int total, const std::vector<int>& parts) {
  BigNat out{1};
  int remaining = total;
  for (int part : parts) {
    out = out * binomial(remaining, part);
    remaining -= part;
  }
  return out;
}

BigNat equitable_count(int m, int n) {
  const int k = m % n;
  const int r = m / n;
  std::vector<int> parts;
  parts.insert(parts.end(), static_cast<std::size_t>(k), r + 1);
  parts.insert(parts.end(), static_cast<std::size_t>(n - k), r);
  return binomial(n, k) * multinomial(m, parts);
}

std::optional<BigNat> password_count(int m, int n,
                                     const std::vector<std::vector<Letter>>& classes) {
  const int q = static_cast<int>(classes.size());
  if (q > 24) return std::nullopt;  // 2^q subset sum becomes unreasonable
  std::vector<std::vector<bool>> in_class(static_cast<std::size_t>(q),
                                          std::vector<bool>(static_cast<std::size_t>(n) + 1, false));
  for (int c = 0; c < q; ++c) {
    for (Letter x : classes[static_cast<std::size_t>(c)]) {
      in_class[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)] = true;
    }
  }
  BigNat plus, minus;
  for (std::uint32_t mask = 0; mask < (1u << q); ++mask) {
    int avoided = 0;
    for (Letter x = 1; x <= n; ++x) {
      bool excluded = false;
      for (int c = 0; c < q; ++c) {
        if ((mask >> c & 1u) && in_class[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)]) {
          excluded = true;
          break;
        }
      }
      if (!excluded) ++avoided;
    }
    BigNat term = BigNat::pow(static_cast<std::uint64_t>(avoided), m);
    if (__builtin_popcount(mask) % 2 == 0) {
      plus += term;
    } else {
      minus += term;
    }
  }
  return plus - minus;
}

}  // namespace

std::optional<BigNat> count_closed_form(const ClassSpec& input) {
  const ClassSpec spec = validate_spec(input).spec;
  switch (spec.kind) {
    case ClassKind::Plain:
      return BigNat::pow(static_cast<std::uint64_t>(spec.n), spec.m);
    case ClassKind::Injection: {
      BigNat out{1};
      for (int i = 0; i < spec.m; ++i) {
        out = out * BigNat{static_cast<std::uint64_t>(spec.n - i)};
      }
      return out;
    }
    case ClassKind::Surjection:
      return surjection_count(spec.m, spec.n);
    case ClassKind::AlmostOnto:
      return BigNat{static_cast<std::uint64_t>(spec.n)} *
             surjection_count(spec.n, spec.n - 1);
    case ClassKind::NonBijection:
      return BigNat::pow(static_cast<std::uint64_t>(spec.n), spec.n) - factorial(spec.n);
    case ClassKind::Equitable:
      return equitable_count(spec.m, spec.n);
    case ClassKind::SInequitable:
      return std::nullopt;
    case ClassKind::Ranking:
      return ordered_bell(spec.m);
    case ClassKind::Password:
      return password_count(spec.m, spec.n, spec.classes);
  }
  return std::nullopt;
}

std::uint64_t count_brute_force(const ClassSpec& spec, std::uint64_t budget) {
  return enumerate_class(spec, budget).size();
}

CountReport make_count_report(const ClassSpec& spec, std::uint64_t budget) {
  CountReport report;
  report.closed_form = count_closed_form(spec);
  const ClassSpec normalized = validate_spec(spec).spec;
  if (candidate_count(normalized) <= budget) {
    report.brute_force = count_brute_force(normalized, budget);
  }
  if (report.closed_form && report.brute_force) {
    report.consistent = *report.closed_form == BigNat{*report.brute_force};
  }
  return report;
}

}  // namespace ucycle
