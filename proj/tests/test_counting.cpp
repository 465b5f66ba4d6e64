#include <doctest.h>

#include "support.hpp"
#include "ucycle/counting.hpp"

using namespace ucycle;

TEST_CASE("BigNat arithmetic") {
  CHECK(BigNat{0}.to_string() == "0");
  CHECK((BigNat{999999999} + BigNat{1}).to_string() == "1000000000");
  CHECK((BigNat{1000000000} - BigNat{1}).to_string() == "999999999");
  CHECK((BigNat{123456789} * BigNat{987654321}).to_string() == "121932631112635269");
  CHECK(BigNat::pow(2, 64).to_string() == "18446744073709551616");
  CHECK(BigNat{5} < BigNat{7});
  CHECK_THROWS_AS(BigNat{1} - BigNat{2}, std::logic_error);
}

TEST_CASE("factorials and binomials") {
  CHECK(factorial(0) == BigNat{1});
  CHECK(factorial(5) == BigNat{120});
  CHECK(factorial(20).to_string() == "2432902008176640000");
  CHECK(factorial(25).to_string() == "15511210043330985984000000");
  CHECK(binomial(4, 2) == BigNat{6});
  CHECK(binomial(52, 5) == BigNat{2598960});
  CHECK(binomial(3, 5).is_zero());
  // Pascal identity spot checks against the row construction
  for (int n = 1; n <= 20; ++n) {
    for (int k = 1; k < n; ++k) {
      REQUIRE(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST_CASE("ordered Bell numbers follow the recurrence and the brute force") {
  const std::vector<std::uint64_t> known = {1, 1, 3, 13, 75, 541, 4683, 47293, 545835};
  for (std::size_t m = 0; m < known.size(); ++m) {
    CHECK(ordered_bell(static_cast<int>(m)) == BigNat{known[m]});
  }
  for (int m = 1; m <= 6; ++m) {
    CHECK(BigNat{count_brute_force(ClassSpec::ranking(m))} == ordered_bell(m));
  }
}

TEST_CASE("closed forms match the definitions") {
  CHECK(*count_closed_form(ClassSpec::plain(3, 2)) == BigNat{8});
  CHECK(*count_closed_form(ClassSpec::ranking(4)) == BigNat{75});
  CHECK(*count_closed_form(ClassSpec::non_bijection(3)) == BigNat{21});
  CHECK(*count_closed_form(ClassSpec::injection(3, 5)) == BigNat{60});
  CHECK(*count_closed_form(ClassSpec::surjection(4, 3)) == BigNat{36});
  CHECK(*count_closed_form(ClassSpec::almost_onto(5)) == BigNat{1200});
  CHECK(*count_closed_form(ClassSpec::equitable(7, 3)) == BigNat{630});
  CHECK(*count_closed_form(ClassSpec::password(4, 4, {{1, 2}, {3}})) == BigNat{160});
  CHECK_FALSE(count_closed_form(ClassSpec::s_inequitable(7, 3, 2)).has_value());
}

TEST_CASE("closed form equals brute force across the desk-scale grid") {
  std::vector<ClassSpec> specs = {
      ClassSpec::plain(3, 2),
      ClassSpec::plain(4, 3),
      ClassSpec::injection(2, 4),
      ClassSpec::injection(3, 5),
      ClassSpec::injection(3, 3),
      ClassSpec::surjection(4, 3),
      ClassSpec::surjection(5, 3),
      ClassSpec::surjection(5, 5),
      ClassSpec::almost_onto(3),
      ClassSpec::almost_onto(4),
      ClassSpec::almost_onto(5),
      ClassSpec::almost_onto(6),
      ClassSpec::non_bijection(3),
      ClassSpec::non_bijection(4),
      ClassSpec::ranking(5),
      ClassSpec::password(4, 4, {{1, 2}, {3}}),
      ClassSpec::password(5, 5, {{1, 2}, {2, 3}, {5}}),
      ClassSpec::password(6, 4, {{1}, {2}, {3}}),
  };
  for (int m = 4; m <= 11; ++m) {
    if (m % 3 != 0) specs.push_back(ClassSpec::equitable(m, 3));
  }
  for (int m = 5; m <= 9; ++m) {
    if (m % 4 != 0) specs.push_back(ClassSpec::equitable(m, 4));
  }
  for (const auto& spec : specs) {
    CAPTURE(class_kind_name(spec.kind));
    CAPTURE(spec.m);
    CAPTURE(spec.n);
    auto report = make_count_report(spec);
    REQUIRE(report.closed_form.has_value());
    REQUIRE(report.brute_force.has_value());
    CHECK(report.consistent);
    CHECK(*report.closed_form == BigNat{*report.brute_force});
  }
}

TEST_CASE("count report skips brute force over budget") {
  auto report = make_count_report(ClassSpec::plain(30, 4), 1000);
  CHECK(report.closed_form.has_value());
  CHECK(report.closed_form->to_string() == "1152921504606846976");  // 4^30 = 2^60
  CHECK_FALSE(report.brute_force.has_value());
  CHECK(report.consistent);
}

TEST_CASE("almost-onto, bijections, and deeper misses partition all words") {
  for (int n = 2; n <= 6; ++n) {
    const auto spec_plain = ClassSpec::plain(n, n);
    std::uint64_t missing_two_or_more = 0;
    for (const Word& w : enumerate_class(spec_plain)) {
      auto h = letter_histogram(w, n);
      int distinct = 0;
      for (int c : h) distinct += c > 0;
      if (distinct <= n - 2) ++missing_two_or_more;
    }
    BigNat total = *count_closed_form(ClassSpec::almost_onto(n)) + factorial(n) +
                   BigNat{missing_two_or_more};
    CHECK(total == BigNat::pow(static_cast<std::uint64_t>(n), n));
  }
}
