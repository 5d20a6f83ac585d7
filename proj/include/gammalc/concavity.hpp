#ifndef GAMMALC_CONCAVITY_HPP
#define GAMMALC_CONCAVITY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gammalc/arith.hpp"
#include "gammalc/poly.hpp"

namespace gammalc {

enum class Predicate {
  log_concave,
  ultra_log_concave,
  unimodal,
  internal_zeros,
  pairwise_log_concave,
};

const char* to_string(Predicate p) noexcept;

// Witness layout by predicate:
//   log_concave, ultra_log_concave : {i}, the failing internal index
//   unimodal                       : {p, q, r} with a_p > a_q < a_r
//   internal_zeros                 : {i, k, j} with a_i, a_j != 0, a_k = 0
//   pairwise_log_concave           : {i, j} with a_i a_{j-1} < a_{i-1} a_j
// The witness is the lexicographically first such tuple. It is present
// when the verdict is false, except for internal_zeros where it is present
// when the verdict is true.
struct SequenceReport {
  Predicate kind;
  bool verdict = true;
  std::optional<std::vector<std::size_t>> witness;
};

/// a_i^2 >= a_{i-1} a_{i+1} for all internal i. Throws
/// Error(negative_entry) naming the first negative index.
SequenceReport is_log_concave(std::span<const BigRat> a);

SequenceReport has_internal_zeros(std::span<const BigRat> a);

/// a_i / C(m, i) log-concave, checked division-free. Throws
/// Error(order_too_small) when m < size(a) - 1.
SequenceReport is_ultra_log_concave(std::span<const BigRat> a, long m);

SequenceReport is_unimodal(std::span<const BigRat> a);

/// a_i a_{j-1} >= a_{i-1} a_j for all 1 <= i <= j < size(a).
SequenceReport pairwise_lc(std::span<const BigRat> a);

struct MainTheoremRecord {
  SymmetricPolynomial h;
  bool gamma_log_concave;
  bool gamma_no_internal_zeros;
  bool h_log_concave;
  bool h_no_internal_zeros;

  bool hypothesis() const { return gamma_log_concave && gamma_no_internal_zeros; }
  bool conclusion() const { return h_log_concave && h_no_internal_zeros; }
  bool violation() const { return hypothesis() && !conclusion(); }
};

/// Evaluates both sides of "gamma LC without internal zeros implies h LC
/// without internal zeros" on one instance. Throws Error(negative_entry).
MainTheoremRecord check_main_theorem(const GammaVector& gamma);

struct UltraTransferRecord {
  SymmetricPolynomial h;
  bool gamma_ulc;  // order floor(n/2)
  bool gamma_no_internal_zeros;
  bool h_ulc;  // order n
  bool h_no_internal_zeros;

  bool hypothesis() const { return gamma_ulc && gamma_no_internal_zeros; }
  bool conclusion() const { return h_ulc && h_no_internal_zeros; }
  bool violation() const { return hypothesis() && !conclusion(); }
};

/// Same instance check for ultra log-concavity (orders floor(n/2) and n).
UltraTransferRecord check_ultra_transfer(const GammaVector& gamma);

}  // namespace gammalc

#endif
