#ifndef GAMMALC_SWEEPS_HPP
#define GAMMALC_SWEEPS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gammalc/lattice.hpp"

// Exhaustive and randomized property suites over ranges of n. Each suite
// reports per-check case and failure counts; none of them throws on a
// failed property.

namespace gammalc {

struct SweepCheck {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& context) {
    ++cases;
    if (!ok && failures++ == 0) first_failure = context;
  }
  bool passed() const { return failures == 0; }
};

struct SweepSummary {
  std::string name;
  long n_max = 0;
  std::vector<SweepCheck> checks;

  bool passed() const;
  SweepCheck& check(const std::string& name);
};

/// c_coeff against c_coeff_oracle, vanishing beyond k = i+1, nonnegativity
/// of c_jj and c_{j,j+1}, and the table symmetry i <-> n-i; 2 <= n <= n_max.
SweepSummary sweep_coefficients(long n_max);

/// Tail-sign of every diagonal (both parities, 1 <= i <= n-1), A < 0 and
/// B > 0 for 2i <= n, the factored rational identity wherever its
/// denominator is positive or on the boundary l+j = i+1, and
/// sign(c) = sign of the quadratic there.
SweepSummary sweep_diagonals(long n_max);

/// r_sum >= 0 for 1 <= i <= floor(n/2), 0 <= r <= 2i, and r_sum = 0 when
/// r >= i+1 (reported as separate checks).
SweepSummary sweep_r_sums(long n_max);

/// Path-counting checks for 0 <= n <= n_max, 0 <= i <= floor(n/2),
/// 0 <= r <= 2i.
SweepSummary sweep_paths(long n_max, std::uint64_t cap = kDefaultPathCap);

/// Exhaustive gamma vectors with entries in {0..max_entry} for n <= n_max,
/// then `random_cases` random rational log-concave gamma vectors.
SweepSummary sweep_main_theorem(long n_max, long max_entry = 3,
                                std::uint64_t random_cases = 10'000,
                                std::uint64_t seed = 20241016);

/// Ultra log-concave transfer over the same exhaustive range.
SweepSummary sweep_ultra_transfer(long n_max, long max_entry = 3);

/// Randomized hypothesis-satisfying (a, b) pairs for the summation by parts
/// lemma.
SweepSummary sweep_abel(std::uint64_t cases = 10'000,
                        std::uint64_t seed = 20241016);

/// Sequence predicate relations on all sequences of length <= max_len with
/// entries in {0..max_entry}: pairwise = adjacent LC without internal zeros,
/// LC without internal zeros implies unimodal, ULC implies LC.
SweepSummary sweep_predicates(long max_len = 6, long max_entry = 4);

}  // namespace gammalc

#endif
