#ifndef GAMMALC_COEFFICIENTS_HPP
#define GAMMALC_COEFFICIENTS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gammalc/arith.hpp"

namespace gammalc {

// c_jk^(i) is the coefficient of gamma_j gamma_k (j <= k) in
// h_i^2 - h_{i-1} h_{i+1}, with h written in terms of the gammas.

/// Closed form. Requires n >= 2, 1 <= i <= n-1, 0 <= j <= k; otherwise
/// throws Error(range).
BigInt c_coeff(long n, long i, long j, long k);

/// Brute force: expands h_{i-1}, h_i, h_{i+1} over the gamma basis by
/// repeated multiplication by (1+x) and reads the coefficient off the
/// product of the rows. Shares no code with c_coeff.
BigInt c_coeff_oracle(long n, long i, long j, long k);

class CoeffTable {
 public:
  using Key = std::pair<long, long>;

  CoeffTable(long n, long i, std::map<Key, BigInt> entries)
      : n_(n), i_(i), entries_(std::move(entries)) {}

  long n() const noexcept { return n_; }
  long i() const noexcept { return i_; }
  /// Largest gamma index, floor(n/2).
  long max_index() const noexcept { return n_ / 2; }
  const std::map<Key, BigInt>& entries() const noexcept { return entries_; }

  /// Entry for (min(j,k), max(j,k)); zero outside the stored range.
  BigInt at(long j, long k) const;

  /// Sum over j <= k of c_jk gamma_j gamma_k.
  BigRat evaluate(std::span<const BigRat> gamma) const;

 private:
  long n_;
  long i_;
  std::map<Key, BigInt> entries_;
};

/// Every pair 0 <= j <= k <= floor(n/2), zeros included.
CoeffTable coeff_table(long n, long i);

enum class Parity { even, odd };

const char* to_string(Parity p) noexcept;

/// (c_{l,l}, c_{l-1,l+1}, ..., c_{0,2l}) for even parity,
/// (c_{l-1,l}, c_{l-2,l+1}, ..., c_{0,2l-1}) for odd parity.
struct DiagonalSequence {
  long n;
  long i;
  long ell;
  Parity parity;
  std::vector<BigInt> values;

  /// (j, k) index pair of values[t].
  std::pair<long, long> indices(std::size_t t) const;
  std::optional<std::size_t> first_negative() const;
  /// After the first strictly negative entry every entry is <= 0.
  bool tail_sign_ok() const;
};

/// Requires n >= 2, 1 <= i <= n-1 and 1 <= ell <= (i+1)/2.
DiagonalSequence diagonal(long n, long i, long ell, Parity parity);

/// Sign of c_{l-j,l+j} (even) follows A j^2 + B, and the sign of
/// c_{l-1-j,l+j} (odd) follows A (2j+1)^2 + B.
struct QuadraticAB {
  Parity parity;
  BigInt a;
  BigInt b;

  BigInt evaluate(long j) const;
};

/// Requires n >= 1, 0 <= 2i <= n and 1 <= 2 ell <= i+1. Both A and B are
/// computed along two independent routes; a disagreement, A >= 0 or B <= 0
/// throws Error(invariant_violation).
QuadraticAB quadratic_ab(long n, long i, long ell, Parity parity = Parity::even);

struct IdentityCheck {
  bool holds;
  BigRat direct;     // c_coeff
  BigRat factored;   // binomial product times (A j^2 + B) over denominator
};

/// Verifies the factored rational form of the diagonal coefficient at
/// spread index j >= 1 (even) or j >= 0 (odd). On the boundary l+j = i+1 the
/// vanishing factor i-l-j+1 is cancelled against the vanishing binomial.
/// Throws Error(range) naming any other nonpositive denominator factor.
IdentityCheck rational_identity_check(long n, long i, long ell, long j,
                                      Parity parity = Parity::even);

struct AbelResult {
  BigRat weighted_sum;              // sum a_t b_t
  BigRat by_parts;                  // sum A_t (b_t - b_{t+1}), b_{s+1} = 0
  std::vector<BigRat> prefix_sums;  // A_t = a_0 + ... + a_t
  bool identity_holds;
  bool prefix_unimodal;
  bool prefix_nonnegative;
};

/// Summation by parts for a tail-signed a against a weakly decreasing
/// nonnegative b with sum(a) >= 0. Throws Error(hypothesis_violation)
/// naming the failed hypothesis, Error(length_mismatch) on unequal sizes.
AbelResult abel_sum_check(std::span<const BigRat> a, std::span<const BigRat> b);

/// One term of the regrouped form of h_i^2 - h_{i-1} h_{i+1}: either
/// coefficient * (g_a g_b - g_c g_d) with |b-a| < |d-c|, or a lone
/// coefficient * g_a g_b closing its diagonal.
struct RegroupedTerm {
  BigInt coefficient;
  std::pair<long, long> plus;
  std::optional<std::pair<long, long>> minus;
};

/// Summation by parts along each diagonal j + k = s: with prefix sums A_t of
/// the diagonal sequence, sum_t c_t b_t = sum_t A_t (b_t - b_{t+1}). Rows are
/// indexed by s; zero terms are dropped.
std::vector<std::vector<RegroupedTerm>> regroup(const CoeffTable& table);

/// Coefficient of u^r in h_i^2 - h_{i-1} h_{i+1} when gamma_j = u^j:
/// sum of c_jk over j <= k with j + k = r. Requires 1 <= i <= floor(n/2)
/// and r >= 0.
BigInt r_sum(long n, long i, long r);

}  // namespace gammalc

#endif
