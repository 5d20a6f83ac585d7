#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "gammalc/arith.hpp"
#include "gammalc/error.hpp"
#include "gammalc/lattice.hpp"

using namespace gammalc;

namespace {

std::vector<std::string> enumerate(LatticePoint a, LatticePoint b,
                                   std::uint64_t cap = kDefaultPathCap) {
  std::vector<std::string> out;
  for_each_path(a, b, cap, [&](const LatticePath& p) { out.push_back(p.to_string()); });
  return out;
}

std::size_t pq_hits(const SegmentConfig& cfg, const char* steps) {
  return segment_intersections(LatticePath::parse({0, 0}, steps), cfg.pq()).size();
}

}  // namespace

TEST(CountPaths, Examples) {
  EXPECT_EQ(count_paths({0, 0}, {6, 2}), 28);
  EXPECT_EQ(count_paths({1, 1}, {1, 1}), 1);
  EXPECT_EQ(count_paths({2, 0}, {1, 3}), 0);
  EXPECT_EQ(count_paths({0, 0}, {20, 20}), binomial(40, 20));
}

TEST(Enumerate, SmallRectangles) {
  EXPECT_EQ(enumerate({0, 0}, {1, 1}), (std::vector<std::string>{"EN", "NE"}));
  EXPECT_EQ(enumerate({0, 0}, {0, 3}), (std::vector<std::string>{"NNN"}));
  EXPECT_EQ(enumerate({2, 2}, {2, 2}), (std::vector<std::string>{""}));
  EXPECT_TRUE(enumerate({1, 0}, {0, 1}).empty());
}

TEST(Enumerate, EachPathOnceInLexOrder) {
  const auto all = enumerate({0, 0}, {6, 2});
  ASSERT_EQ(all.size(), 28u);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(std::set<std::string>(all.begin(), all.end()).size(), 28u);
  for (const auto& s : all) EXPECT_EQ(LatticePath::parse({0, 0}, s).end(), (LatticePoint{6, 2}));
}

TEST(Enumerate, CapExceededBeforeYielding) {
  int seen = 0;
  try {
    for_each_path({0, 0}, {6, 2}, 27, [&](const LatticePath&) { ++seen; });
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::cap_exceeded);
    EXPECT_NE(std::string(e.what()).find("28"), std::string::npos) << e.what();
  }
  EXPECT_EQ(seen, 0);
  EXPECT_EQ(enumerate({0, 0}, {6, 2}, 28).size(), 28u);
}

TEST(LatticePath, ParseAndVertices) {
  const auto p = LatticePath::parse({1, 2}, "ENn");
  EXPECT_EQ(p.end(), (LatticePoint{2, 4}));
  EXPECT_EQ(p.vertices(), (std::vector<LatticePoint>{{1, 2}, {2, 2}, {2, 3}, {2, 4}}));
  EXPECT_EQ(p.to_string(), "ENN");
  try {
    LatticePath::parse({0, 0}, "ENX");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::parse);
  }
}

TEST(SegmentConfig, Points) {
  const auto cfg = make_config(6, 2, 2);
  EXPECT_EQ(cfg.target, (LatticePoint{6, 2}));
  EXPECT_EQ(cfg.p, (LatticePoint{2, 0}));
  EXPECT_EQ(cfg.q, (LatticePoint{4, 2}));
  EXPECT_EQ(cfg.p_prime, (LatticePoint{4, 0}));
  EXPECT_EQ(cfg.q_prime, (LatticePoint{5, 1}));
  EXPECT_EQ(cfg.pq().points(), (std::vector<LatticePoint>{{2, 0}, {3, 1}, {4, 2}}));
  EXPECT_EQ(cfg.pq_prime().points(), (std::vector<LatticePoint>{{4, 0}, {5, 1}}));
  EXPECT_THROW(make_config(6, 4, 0), Error);
  EXPECT_THROW(make_config(6, 2, -1), Error);
}

TEST(SegmentConfig, Intersections) {
  const auto cfg = make_config(6, 2, 2);
  EXPECT_EQ(pq_hits(cfg, "EENENEEE"), 3u);
  // Climbing first reaches the segment only at its top end.
  EXPECT_EQ(pq_hits(cfg, "NNEEEEEE"), 1u);
  EXPECT_EQ(pq_hits(cfg, "EEEEEENN"), 1u);
}

TEST(Sums, FormulaExamples) {
  const auto cfg = make_config(6, 2, 2);
  EXPECT_EQ(lhs_by_formula(cfg), 15 * 1 + 4 * 4 + 1 * 15);
  EXPECT_EQ(rhs_by_formula(cfg), 6 * 2 + 1 * 6);
  EXPECT_EQ(lhs_by_formula(cfg) - rhs_by_formula(cfg), 28);
}

TEST(Sums, PathsAgreeWithFormulaForRAtLeastI) {
  for (long n = 0; n <= 10; ++n)
    for (long i = 0; 2 * i <= n; ++i)
      for (long r = i; r <= 2 * i; ++r) {
        const auto cfg = make_config(n, i, r);
        EXPECT_EQ(lhs_by_paths(cfg), lhs_by_formula(cfg)) << n << " " << i << " " << r;
        EXPECT_EQ(lhs_by_paths(cfg), segment_product_sum(cfg, cfg.pq()));
        EXPECT_EQ(rhs_by_paths(cfg), segment_product_sum(cfg, cfg.pq_prime()));
      }
}

TEST(Sums, RZeroIsSquaredBinomial) {
  for (long n = 0; n <= 12; ++n)
    for (long i = 0; 2 * i <= n; ++i) {
      const auto cfg = make_config(n, i, 0);
      const BigInt c = binomial(n, i);
      EXPECT_EQ(lhs_by_formula(cfg), c * c);
    }
}

TEST(Sums, PathsOverCountBelowI) {
  // The full segments include points with k < 0 that the formula drops.
  const auto cfg = make_config(2, 1, 0);
  EXPECT_EQ(lhs_by_formula(cfg), 4);
  EXPECT_EQ(lhs_by_paths(cfg), 10);
  EXPECT_EQ(lhs_by_paths(cfg), segment_product_sum(cfg, cfg.pq()));
}

TEST(Claims, HoldOnExamples) {
  for (auto [n, i, r] : {std::tuple{6L, 2L, 2L}, {8L, 3L, 3L}, {7L, 3L, 4L}, {10L, 4L, 2L}}) {
    const auto cfg = make_config(n, i, r);
    const auto c1 = claim1_check(cfg);
    EXPECT_TRUE(c1.holds) << n << " " << i << " " << r;
    EXPECT_EQ(c1.paths, count_paths(cfg.origin, cfg.target).get_ui());
    const auto c2 = claim2_check(cfg);
    EXPECT_TRUE(c2.holds()) << n << " " << i << " " << r;
    EXPECT_FALSE(c2.rectangles.empty());
  }
}

TEST(Involution, ReversesSteps) {
  const auto p = LatticePath::parse({0, 0}, "EEN");
  const auto q = involution(p, {0, 0}, {2, 1});
  EXPECT_EQ(q.to_string(), "NEE");
  EXPECT_EQ(involution(q, {0, 0}, {2, 1}), p);
  try {
    involution(p, {0, 0}, {1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::endpoint_mismatch);
  }
}

TEST(Involution, IsAnInvolutionOnEveryPath) {
  for_each_path({1, 1}, {5, 4}, kDefaultPathCap, [](const LatticePath& p) {
    EXPECT_EQ(involution(involution(p, {1, 1}, {5, 4}), {1, 1}, {5, 4}), p);
  });
}

TEST(Certificate, GoldenDegreeSix) {
  const auto cert = certificate(make_config(6, 2, 2), kDefaultPathCap, true);
  EXPECT_EQ(cert.lhs - cert.rhs, 28);
  EXPECT_EQ(cert.paths, 28u);
  EXPECT_EQ(cert.avoiding_term, 27);
  EXPECT_EQ(cert.avoiding_paths, 14u);
  ASSERT_EQ(cert.boundary_terms.size(), 1u);
  const BoundaryTerm& t = cert.boundary_terms[0];
  EXPECT_EQ(t.count, 1);
  EXPECT_EQ(t.r, (LatticePoint{2, 0}));
  EXPECT_EQ(t.r_prime, (LatticePoint{4, 0}));
  EXPECT_EQ(cert.total, 28);
  EXPECT_EQ(cert.contributing_paths, 15u);
  EXPECT_TRUE(cert.certifies_formula());

  long sum = 0;
  std::size_t nonzero = 0;
  for (const auto& c : cert.contributions) {
    sum += c.amount;
    if (c.amount) ++nonzero;
  }
  EXPECT_EQ(sum, 28);
  EXPECT_EQ(nonzero, 15u);
}

TEST(Certificate, EmptyAboveI) {
  for (long r = 3; r <= 4; ++r) {
    const auto cert = certificate(make_config(6, 2, r));
    EXPECT_TRUE(cert.boundary_terms.empty());
    EXPECT_EQ(cert.total, 0);
    EXPECT_TRUE(cert.certifies_formula());
  }
}

TEST(Certificate, BelowIMatchesPathSumsNotFormula) {
  const auto cfg = make_config(2, 1, 0);
  const auto cert = certificate(cfg);
  EXPECT_EQ(cert.total, cert.lhs_paths - cert.rhs_paths);
  EXPECT_EQ(cert.lhs_paths, segment_product_sum(cfg, cfg.pq()));
  EXPECT_FALSE(cert.certifies_formula());
}

TEST(Certificate, TotalsAcrossRange) {
  for (long n = 0; n <= 10; ++n)
    for (long i = 0; 2 * i <= n; ++i)
      for (long r = 0; r <= 2 * i; ++r) {
        const auto cfg = make_config(n, i, r);
        const auto cert = certificate(cfg);
        EXPECT_EQ(cert.total, cert.lhs_paths - cert.rhs_paths);
        EXPECT_GE(cert.total, 0);
        for (const auto& t : cert.boundary_terms) {
          EXPECT_EQ(t.count, t.prefix_paths * t.suffix_weight);
          EXPECT_TRUE(dominated_by(t.r, t.r_prime));
        }
        if (r >= i) EXPECT_TRUE(cert.certifies_formula()) << n << " " << i << " " << r;
      }
}

TEST(Certificate, CapPropagates) {
  try {
    certificate(make_config(6, 2, 2), 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::cap_exceeded);
  }
}
