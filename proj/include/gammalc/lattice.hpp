#ifndef GAMMALC_LATTICE_HPP
#define GAMMALC_LATTICE_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gammalc/arith.hpp"

namespace gammalc {

inline constexpr std::uint64_t kDefaultPathCap = 10'000'000;

struct LatticePoint {
  long x = 0;
  long y = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Componentwise partial order on Z^2.
inline bool dominated_by(LatticePoint a, LatticePoint b) {
  return a.x <= b.x && a.y <= b.y;
}

std::string to_string(LatticePoint p);

// East sorts before North; lexicographic enumeration relies on it.
enum class Step : char { east = 0, north = 1 };

class LatticePath {
 public:
  LatticePath() = default;
  LatticePath(LatticePoint start, std::vector<Step> steps)
      : start_(start), steps_(std::move(steps)) {}

  /// Parses a string over {E, N}. Throws Error(parse) on other characters.
  static LatticePath parse(LatticePoint start, std::string_view steps);

  LatticePoint start() const noexcept { return start_; }
  LatticePoint end() const;
  const std::vector<Step>& steps() const noexcept { return steps_; }
  /// start, then the point after each step.
  std::vector<LatticePoint> vertices() const;
  std::string to_string() const;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;

 private:
  LatticePoint start_;
  std::vector<Step> steps_;
};

/// C(dx+dy, dy) for dx, dy >= 0, else 0.
BigInt count_paths(LatticePoint from, LatticePoint to);

/// Streams every north-east path from `from` to `to` exactly once in
/// lexicographic step order (E < N). Throws Error(cap_exceeded) carrying
/// the exact count when it exceeds `cap`, before yielding anything.
class PathStream {
 public:
  PathStream(LatticePoint from, LatticePoint to,
             std::uint64_t cap = kDefaultPathCap);

  /// Next path, or nullopt when exhausted.
  std::optional<LatticePath> next();

 private:
  LatticePoint from_;
  std::vector<Step> steps_;
  bool done_;
};

/// Visits every path in stream order.
void for_each_path(LatticePoint from, LatticePoint to, std::uint64_t cap,
                   const std::function<void(const LatticePath&)>& visit);

/// Lattice points on {x - y = offset, y_min <= y <= y_max}. Empty when
/// y_min > y_max.
struct DiagonalSegment {
  long offset;
  long y_min;
  long y_max;

  bool contains(LatticePoint p) const {
    return p.x - p.y == offset && p.y >= y_min && p.y <= y_max;
  }
  /// Lattice points ordered by y (the induced total order).
  std::vector<LatticePoint> points() const;
};

/// Points of the path-counting construction for the binomial inequality
/// sum_{j+k=r} C(n-2j,i-j) C(n-2k,i-k) >= sum_{j+k=r} C(n-2j,i-1-j) C(n-2k,i+1-k).
struct SegmentConfig {
  long n;
  long i;
  long r;
  LatticePoint origin;  // O
  LatticePoint target;  // D = (2n-2i-r, 2i-r)
  LatticePoint p;       // (n-2i, 0)
  LatticePoint q;       // (n-i, i)
  LatticePoint p_prime; // (n-2i+2, 0)
  LatticePoint q_prime; // (n-i+1, i-1)

  /// PQ: x - y = n-2i, 0 <= y <= i.
  DiagonalSegment pq() const { return {n - 2 * i, 0, i}; }
  /// P'Q': x - y = n-2i+2, 0 <= y <= i-1.
  DiagonalSegment pq_prime() const { return {n - 2 * i + 2, 0, i - 1}; }
};

/// Requires n >= 0, 0 <= i <= floor(n/2), r >= 0; throws Error(range).
SegmentConfig make_config(long n, long i, long r);

/// Vertices of `path` (both endpoints included) lying on `segment`, in
/// path order.
std::vector<LatticePoint> segment_intersections(const LatticePath& path,
                                                const DiagonalSegment& segment);

/// sum_{j+k=r, 0<=j,k<=i} C(n-2j,i-j) C(n-2k,i-k).
BigInt lhs_by_formula(const SegmentConfig& cfg);
/// sum_{j+k=r, 0<=j,k<=i+1} C(n-2j,i-1-j) C(n-2k,i+1-k).
BigInt rhs_by_formula(const SegmentConfig& cfg);

/// sum over A on the segment of #paths(O->A) * #paths(A->D). Over the full
/// segments this also picks up points with k = r-j < 0, which the binomial
/// sums exclude; it agrees with them exactly when r >= i.
BigInt segment_product_sum(const SegmentConfig& cfg,
                           const DiagonalSegment& segment);

/// sum over paths alpha: O -> D of #(alpha cap PQ).
BigInt lhs_by_paths(const SegmentConfig& cfg, std::uint64_t cap = kDefaultPathCap);
/// sum over paths alpha: O -> D of #(alpha cap P'Q').
BigInt rhs_by_paths(const SegmentConfig& cfg, std::uint64_t cap = kDefaultPathCap);

struct Claim1Report {
  std::uint64_t paths = 0;
  std::uint64_t paths_meeting_pq_prime = 0;
  bool holds = true;
  std::optional<LatticePath> counterexample;
};

/// Every path meeting P'Q' meets PQ, and min(alpha cap PQ) is dominated by
/// max(alpha cap P'Q').
Claim1Report claim1_check(const SegmentConfig& cfg,
                          std::uint64_t cap = kDefaultPathCap);

/// 180 degree rotation about the centre of the rectangle spanned by
/// `from` and `to`: reverses the step sequence. Throws
/// Error(endpoint_mismatch) unless path runs from `from` to `to`.
LatticePath involution(const LatticePath& path, LatticePoint from,
                       LatticePoint to);

struct Claim2Rectangle {
  LatticePoint r;
  LatticePoint r_prime;
  std::uint64_t paths = 0;
  BigInt pq_sum;        // sum over alpha: R -> R' of #(alpha cap PQ)
  BigInt pq_prime_sum;  // same for P'Q'
  bool involution_bijective = true;
  bool involution_transports = true;  // #(phi(a) cap P'Q') == #(a cap PQ)

  bool holds() const {
    return pq_sum == pq_prime_sum && involution_bijective && involution_transports;
  }
};

struct Claim2Report {
  std::vector<Claim2Rectangle> rectangles;
  bool holds() const;
};

/// Checks the equal-weight statement for every R on PQ, R' on P'Q' with
/// R <= R', together with the involution behind it.
Claim2Report claim2_check(const SegmentConfig& cfg,
                          std::uint64_t cap = kDefaultPathCap);

struct BoundaryTerm {
  LatticePoint r;        // min(alpha cap PQ)
  LatticePoint r_prime;  // max(alpha cap P'Q')
  BigInt count;          // sum over grouped paths of #(alpha_3 cap PQ)
  std::uint64_t paths = 0;
  BigInt prefix_paths;   // #(O -> R meeting PQ only at R) * #(R -> R')
  BigInt suffix_weight;  // sum over alpha_3: R' -> D, alpha_3 cap P'Q' = {R'}
};

struct PathContribution {
  LatticePath path;
  long amount;
  bool avoids_pq_prime;
};

/// Manifestly nonnegative decomposition
///   LHS - RHS = sum_{alpha avoids P'Q'} #(alpha cap PQ)
///             + sum_{(R, R')} sum_{alpha_3} #(alpha_3 cap PQ)
/// obtained by splitting each path meeting P'Q' as alpha_1 alpha_2 alpha_3
/// at min(alpha cap PQ) and max(alpha cap P'Q').
struct Certificate {
  long n;
  long i;
  long r;
  BigInt lhs;        // binomial sums
  BigInt rhs;
  BigInt lhs_paths;  // path sums over the full segments
  BigInt rhs_paths;
  BigInt avoiding_term;
  std::uint64_t paths = 0;
  std::uint64_t avoiding_paths = 0;  // avoid P'Q' with nonzero contribution
  std::uint64_t contributing_paths = 0;
  std::vector<BoundaryTerm> boundary_terms;  // nonzero only, sorted by (R, R')
  BigInt total;
  std::vector<PathContribution> contributions;  // when requested

  /// total == lhs - rhs. False exactly when the path sums differ from the
  /// binomial sums (r < i).
  bool certifies_formula() const { return total == lhs - rhs; }
};

/// Throws Error(invariant_violation) if total != lhs_paths - rhs_paths or a
/// boundary term disagrees with prefix_paths * suffix_weight.
Certificate certificate(const SegmentConfig& cfg,
                        std::uint64_t cap = kDefaultPathCap,
                        bool collect_paths = false);

}  // namespace gammalc

#endif
