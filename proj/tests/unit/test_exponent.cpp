#include <gtest/gtest.h>

#include "thuekit/errors.hpp"
#include "thuekit/exponent.hpp"

using namespace thuekit;

TEST(Exponent, ParseAndEval) {
  auto const acac = parse_exponent("2^(n+1)-1");
  EXPECT_EQ(acac.eval(0), 1);
  EXPECT_EQ(acac.eval(1), 3);
  EXPECT_EQ(acac.eval(5), 63);
  EXPECT_EQ(acac.eval(100), pow2(101) - 1);

  auto const bac = parse_exponent("2n+1");
  EXPECT_EQ(bac.eval(0), 1);
  EXPECT_EQ(bac.eval(4), 9);

  EXPECT_EQ(parse_exponent("n").eval(7), 7);
  EXPECT_EQ(parse_exponent("2^(15)-2").eval(0), 32766);
  EXPECT_TRUE(parse_exponent("2^(15)-2").is_constant());
  EXPECT_EQ(parse_exponent("2^2^3").eval(0), 256);
}

TEST(Exponent, ParameterRejectedWhenNotAllowed) {
  EXPECT_THROW(parse_exponent("n+1", false), ParseError);
  EXPECT_THROW(parse_exponent("n*n"), ParseError);
  EXPECT_THROW(parse_exponent("2^(n"), ParseError);
}

TEST(Exponent, SolveAgainstEnumeration) {
  for (auto const* text : {"2^(n+1)-1", "2n+1", "n", "3", "2^(2n)+n", "4^n"}) {
    auto const e = parse_exponent(text);
    for (int target = 0; target <= 300; ++target) {
      std::vector<std::int64_t> expect;
      for (std::int64_t n = 0; n <= 300; ++n) {
        if (e.eval(n) == target) {
          expect.push_back(n);
        }
      }
      auto const s = e.solve(target, 0);
      if (s.all) {
        EXPECT_TRUE(e.is_constant()) << text;
        EXPECT_EQ(expect.size(), 301u) << text;
      } else {
        EXPECT_EQ(s.values, expect) << text << " = " << target;
      }
    }
  }
}

TEST(Exponent, SolveHugeTarget) {
  auto const e = parse_exponent("2^(n+1)-1");
  auto const s = e.solve(pow2(1001) - 1, 0);
  ASSERT_EQ(s.values.size(), 1u);
  EXPECT_EQ(s.values[0], 1000);
  EXPECT_TRUE(e.solve(6, 0).values.empty());
}

TEST(Exponent, ToStringRoundTrips) {
  for (auto const* text : {"2^(n+1)-1", "2n+1", "n", "0", "2^(2n+3)+5n-7"}) {
    auto const e = parse_exponent(text);
    EXPECT_EQ(parse_exponent(e.to_string()), e) << text;
  }
}

TEST(Exponent, ValidateRejectsNegativeValues) {
  EXPECT_THROW(parse_exponent("n-1").validate(0), ParseError);
  EXPECT_NO_THROW(parse_exponent("n-1").validate(1));
}
