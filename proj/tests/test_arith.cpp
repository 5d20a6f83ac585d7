#include <gtest/gtest.h>

#include <vector>

#include "gammalc/arith.hpp"
#include "gammalc/error.hpp"

using namespace gammalc;

namespace {

// Pascal's triangle, rows 0..size-1.
std::vector<std::vector<BigInt>> pascal(int size) {
  std::vector<std::vector<BigInt>> rows{{1}};
  for (int n = 1; n < size; ++n) {
    std::vector<BigInt> row(n + 1, 1);
    for (int k = 1; k < n; ++k) row[k] = rows[n - 1][k - 1] + rows[n - 1][k];
    rows.push_back(row);
  }
  return rows;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::invariant_violation;
}

}  // namespace

TEST(Binomial, GoldenValues) {
  EXPECT_EQ(binomial(6, 2), 15);
  EXPECT_EQ(binomial(2, -1), 0);
  EXPECT_EQ(binomial(16, 5), 4368);
}

TEST(Binomial, MatchesPascalTriangle) {
  const auto rows = pascal(61);
  for (int n = 0; n <= 60; ++n)
    for (int k = 0; k <= n; ++k) EXPECT_EQ(binomial(n, k), rows[n][k]) << n << "," << k;
}

TEST(Binomial, ZeroOutsideRange) {
  EXPECT_EQ(binomial(-1, 0), 0);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(binomial(-3, -1), 0);
  EXPECT_EQ(binomial(0, 0), 1);
}

TEST(Binomial, LargeArgumentsStayExact) {
  EXPECT_EQ(to_string(binomial(100, 50)), "100891344545564193334812497256");
}

TEST(ParseRational, AcceptsIntegersAndFractions) {
  EXPECT_EQ(parse_rational("7"), BigRat(7));
  EXPECT_EQ(parse_rational("-3/6"), BigRat(-1, 2));
  EXPECT_EQ(parse_rational(" +4/2 "), BigRat(2));
  EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
}

TEST(ParseRational, RejectsMalformed) {
  for (const char* bad : {"", "x", "1/", "/2", "1/0", "1.5", "--1", "1/-2"})
    EXPECT_EQ(code_of([&] { parse_rational(bad); }), ErrorCode::parse) << bad;
}

TEST(ParseRationalList, SplitsOnCommas) {
  const auto v = parse_rational_list("1, 2/3,-4");
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[1], BigRat(2, 3));
  EXPECT_EQ(v[2], BigRat(-4));
  EXPECT_TRUE(parse_rational_list("  ").empty());
}

TEST(ParseRationalList, ErrorNamesColumn) {
  try {
    parse_rational_list("1,2,oops");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::parse);
    EXPECT_NE(std::string(e.what()).find("column 5"), std::string::npos) << e.what();
  }
}

TEST(ToString, JoinsCanonicalForms) {
  std::vector<BigRat> v{BigRat(1), BigRat(-2, 4), BigRat(0)};
  for (auto& x : v) x.canonicalize();
  EXPECT_EQ(join(v, ","), "1,-1/2,0");
}
