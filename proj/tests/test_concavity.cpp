#include <gtest/gtest.h>

#include <vector>

#include "gammalc/concavity.hpp"
#include "gammalc/error.hpp"

using namespace gammalc;

namespace {

std::vector<BigRat> rats(std::initializer_list<long> xs) {
  std::vector<BigRat> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

using Witness = std::optional<std::vector<std::size_t>>;

Witness w(std::initializer_list<std::size_t> xs) { return std::vector<std::size_t>(xs); }

// Ratio form of ultra log-concavity, evaluated directly on a_i / C(m, i).
bool ulc_by_ratios(const std::vector<BigRat>& a, long m) {
  std::vector<BigRat> b;
  for (std::size_t i = 0; i < a.size(); ++i) b.push_back(a[i] / BigRat(binomial(m, i)));
  for (std::size_t i = 1; i + 1 < b.size(); ++i)
    if (b[i] * b[i] < b[i - 1] * b[i + 1]) return false;
  return true;
}

}  // namespace

TEST(LogConcave, Examples) {
  EXPECT_TRUE(is_log_concave(rats({1, 6, 15, 20, 15, 6, 1})).verdict);
  const auto r = is_log_concave(rats({1, 1, 2}));
  EXPECT_FALSE(r.verdict);
  EXPECT_EQ(r.witness, w({1}));
  EXPECT_TRUE(is_log_concave(rats({1, 4, 4, 1})).verdict);
  EXPECT_TRUE(is_log_concave({}).verdict);
}

TEST(LogConcave, RationalEntries) {
  std::vector<BigRat> a{BigRat(1, 2), BigRat(1, 3), BigRat(1, 5)};
  // (1/3)^2 = 1/9 >= 1/10
  EXPECT_TRUE(is_log_concave(a).verdict);
  a[2] = BigRat(1, 4);  // 1/9 < 1/8
  EXPECT_FALSE(is_log_concave(a).verdict);
}

TEST(LogConcave, RejectsNegativeEntries) {
  try {
    is_log_concave(rats({1, -1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::negative_entry);
  }
}

TEST(InternalZeros, Examples) {
  EXPECT_FALSE(has_internal_zeros(rats({0, 1, 2, 1, 0})).verdict);
  const auto a = has_internal_zeros(rats({1, 0, 1}));
  EXPECT_TRUE(a.verdict);
  EXPECT_EQ(a.witness, w({0, 1, 2}));
  const auto b = has_internal_zeros(rats({0, 0, 3, 0, 0, 5, 0}));
  EXPECT_TRUE(b.verdict);
  EXPECT_EQ(b.witness, w({2, 3, 5}));
  EXPECT_FALSE(has_internal_zeros(rats({0, 0, 0})).verdict);
}

TEST(UltraLogConcave, Examples) {
  EXPECT_TRUE(is_ultra_log_concave(rats({1, 3, 3, 1}), 3).verdict);
  EXPECT_TRUE(is_ultra_log_concave(rats({1, 4, 4, 1}), 3).verdict);
  EXPECT_TRUE(is_ultra_log_concave(rats({1, 1}), 5).verdict);
  const auto r = is_ultra_log_concave(rats({1, 3, 9}), 2);
  EXPECT_FALSE(r.verdict);
  EXPECT_EQ(r.witness, w({1}));
}

TEST(UltraLogConcave, OrderTooSmall) {
  try {
    is_ultra_log_concave(rats({1, 2, 1}), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::order_too_small);
  }
}

TEST(UltraLogConcave, MatchesRatioForm) {
  for (long a0 = 0; a0 <= 3; ++a0)
    for (long a1 = 0; a1 <= 6; ++a1)
      for (long a2 = 0; a2 <= 6; ++a2)
        for (long a3 = 0; a3 <= 3; ++a3)
          for (long m = 3; m <= 5; ++m) {
            const auto a = rats({a0, a1, a2, a3});
            EXPECT_EQ(is_ultra_log_concave(a, m).verdict, ulc_by_ratios(a, m));
          }
}

TEST(Unimodal, Examples) {
  EXPECT_TRUE(is_unimodal(rats({1, 2, 2, 1})).verdict);
  const auto r = is_unimodal(rats({1, 0, 1}));
  EXPECT_FALSE(r.verdict);
  EXPECT_EQ(r.witness, w({0, 1, 2}));
  EXPECT_TRUE(is_unimodal(rats({3})).verdict);
  EXPECT_TRUE(is_unimodal(rats({3, 2, 2, 1})).verdict);
  EXPECT_FALSE(is_unimodal(rats({2, 1, 1, 3})).verdict);
}

TEST(PairwiseLogConcave, Examples) {
  EXPECT_TRUE(pairwise_lc(rats({1, 3, 4, 3, 1})).verdict);
  EXPECT_FALSE(pairwise_lc(rats({1, 1, 2})).verdict);
  EXPECT_TRUE(pairwise_lc(rats({0, 0, 0})).verdict);
  // Log-concave but with internal zeros: the pairwise form detects it.
  EXPECT_TRUE(is_log_concave(rats({1, 0, 0, 1})).verdict);
  EXPECT_FALSE(pairwise_lc(rats({1, 0, 0, 1})).verdict);
}

TEST(MainTheorem, Examples) {
  const auto a = check_main_theorem(GammaVector(6, rats({1, 1, 1, 1})));
  EXPECT_TRUE(a.hypothesis());
  EXPECT_TRUE(a.conclusion());

  const auto b = check_main_theorem(GammaVector(8, rats({1, 2, 3, 2, 1})));
  EXPECT_TRUE(b.hypothesis());
  EXPECT_TRUE(b.conclusion());
  EXPECT_EQ(std::vector<BigRat>(b.h.coeffs().begin(), b.h.coeffs().end()),
            rats({1, 10, 43, 100, 133, 100, 43, 10, 1}));

  const auto c = check_main_theorem(GammaVector(4, rats({0, 0, 1})));
  EXPECT_TRUE(c.hypothesis());
  EXPECT_TRUE(c.conclusion());
  EXPECT_FALSE(c.violation());
}

TEST(MainTheorem, HypothesisFailsWithInternalZero) {
  const auto r = check_main_theorem(GammaVector(4, rats({1, 0, 1})));
  EXPECT_FALSE(r.gamma_no_internal_zeros);
  EXPECT_FALSE(r.hypothesis());
  EXPECT_FALSE(r.violation());
}

TEST(MainTheorem, RejectsNegativeGamma) {
  EXPECT_THROW(check_main_theorem(GammaVector(4, rats({1, -1, 0}))), Error);
}

TEST(UltraTransfer, BinomialGammaIsUltra) {
  const auto r = check_ultra_transfer(GammaVector(8, rats({1, 4, 6, 4, 1})));
  EXPECT_TRUE(r.hypothesis());
  EXPECT_TRUE(r.conclusion());
}
