#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "gammalc/error.hpp"
#include "gammalc/poly.hpp"

using namespace gammalc;

namespace {

std::vector<BigRat> rats(std::initializer_list<long> xs) {
  std::vector<BigRat> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// h = sum_j gamma_j x^j (1+x)^(n-2j), expanded by repeated polynomial
// multiplication.
std::vector<BigRat> expand(long n, const std::vector<BigRat>& gamma) {
  std::vector<BigRat> h(n + 1);
  for (long j = 0; j < static_cast<long>(gamma.size()); ++j) {
    std::vector<BigRat> p{BigRat(1)};
    for (long t = 0; t < n - 2 * j; ++t) {
      std::vector<BigRat> q(p.size() + 1);
      for (std::size_t s = 0; s < p.size(); ++s) {
        q[s] += p[s];
        q[s + 1] += p[s];
      }
      p = q;
    }
    for (std::size_t s = 0; s < p.size(); ++s) h[j + s] += gamma[j] * p[s];
  }
  return h;
}

}  // namespace

TEST(SymmetricPolynomial, RejectsAsymmetry) {
  try {
    SymmetricPolynomial(4, rats({1, 2, 3, 4, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::symmetry_violation);
    EXPECT_STREQ(e.what(), "h_1 != h_3");
  }
}

TEST(SymmetricPolynomial, RejectsWrongLength) {
  EXPECT_THROW(SymmetricPolynomial(3, rats({1, 1})), Error);
  EXPECT_THROW(GammaVector(6, rats({1, 1, 1})), Error);
  EXPECT_THROW(GammaVector(-1, {}), Error);
}

TEST(SymmetricPolynomial, DegreeBelowN) {
  SymmetricPolynomial p(4, rats({0, 1, 2, 1, 0}));
  EXPECT_EQ(p.n(), 4);
  EXPECT_EQ(first_symmetry_violation(p.coeffs()), std::nullopt);
}

TEST(GammaToH, BinomialRow) {
  const auto h = gamma_to_h(GammaVector(6, rats({1, 0, 0, 0})));
  EXPECT_EQ(std::vector<BigRat>(h.coeffs().begin(), h.coeffs().end()),
            rats({1, 6, 15, 20, 15, 6, 1}));
}

TEST(GammaToH, MiddleCoefficientOfDegreeSix) {
  // h_3 = 20 g0 + 6 g1 + 2 g2 + g3: read each coefficient off a unit vector.
  const long expected[] = {20, 6, 2, 1};
  for (int j = 0; j < 4; ++j) {
    std::vector<BigRat> g(4);
    g[j] = 1;
    EXPECT_EQ(gamma_to_h(GammaVector(6, g))[3], BigRat(expected[j]));
  }
}

TEST(GammaToH, DegreeZero) {
  const auto h = gamma_to_h(GammaVector(0, {BigRat(5, 3)}));
  ASSERT_EQ(h.coeffs().size(), 1u);
  EXPECT_EQ(h[0], BigRat(5, 3));
}

TEST(GammaToH, AllOnesDegreeSix) {
  const auto h = gamma_to_h(GammaVector(6, rats({1, 1, 1, 1})));
  EXPECT_EQ(std::vector<BigRat>(h.coeffs().begin(), h.coeffs().end()),
            rats({1, 7, 20, 29, 20, 7, 1}));
}

TEST(GammaToH, MatchesPolynomialExpansion) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  for (long n = 0; n <= 14; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<BigRat> g(n / 2 + 1);
      for (auto& x : g) {
        x = BigRat(num(rng), den(rng));
        x.canonicalize();
      }
      const auto h = gamma_to_h(GammaVector(n, g));
      EXPECT_EQ(std::vector<BigRat>(h.coeffs().begin(), h.coeffs().end()), expand(n, g))
          << "n=" << n;
    }
  }
}

TEST(HToGamma, Examples) {
  auto gamma_of = [](long n, std::vector<BigRat> h) {
    const auto g = h_to_gamma(SymmetricPolynomial(n, std::move(h)));
    return std::vector<BigRat>(g.coeffs().begin(), g.coeffs().end());
  };
  EXPECT_EQ(gamma_of(6, rats({1, 6, 15, 20, 15, 6, 1})), rats({1, 0, 0, 0}));
  EXPECT_EQ(gamma_of(6, rats({1, 7, 19, 26, 19, 7, 1})), rats({1, 1, 0, 0}));
  EXPECT_EQ(gamma_of(5, rats({0, 1, 3, 3, 1, 0})), rats({0, 1, 0}));
  EXPECT_EQ(gamma_of(5, rats({0, 1, 2, 2, 1, 0})), rats({0, 1, -1}));
}

TEST(HToGamma, RoundTripsRationals) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  for (long n = 0; n <= 20; ++n) {
    std::vector<BigRat> g(n / 2 + 1);
    for (auto& x : g) {
      x = BigRat(num(rng), den(rng));
      x.canonicalize();
    }
    const auto back = h_to_gamma(gamma_to_h(GammaVector(n, g)));
    EXPECT_EQ(std::vector<BigRat>(back.coeffs().begin(), back.coeffs().end()), g);
  }
}

TEST(BasisPolynomial, Examples) {
  auto as_longs = [](const std::vector<BigInt>& v) {
    std::vector<long> out;
    for (const auto& x : v) out.push_back(x.get_si());
    return out;
  };
  EXPECT_EQ(as_longs(basis_polynomial(6, 1)), (std::vector<long>{0, 1, 4, 6, 4, 1, 0}));
  EXPECT_EQ(as_longs(basis_polynomial(4, 2)), (std::vector<long>{0, 0, 1, 0, 0}));
  EXPECT_EQ(as_longs(basis_polynomial(8, 1)),
            (std::vector<long>{0, 1, 6, 15, 20, 15, 6, 1, 0}));
  EXPECT_THROW(basis_polynomial(4, 3), Error);
}
