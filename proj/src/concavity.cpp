#include "gammalc/concavity.hpp"

#include <string>

#include "gammalc/error.hpp"

namespace gammalc {

const char* to_string(Predicate p) noexcept {
  switch (p) {
    case Predicate::log_concave: return "log_concave";
    case Predicate::ultra_log_concave: return "ultra_log_concave";
    case Predicate::unimodal: return "unimodal";
    case Predicate::internal_zeros: return "internal_zeros";
    case Predicate::pairwise_log_concave: return "pairwise_log_concave";
  }
  return "unknown";
}

namespace {

void require_nonnegative(std::span<const BigRat> a) {
  for (std::size_t t = 0; t < a.size(); ++t)
    if (sgn(a[t]) < 0)
      throw Error(ErrorCode::negative_entry,
                  "entry " + std::to_string(t) + " is negative (" +
                      to_string(a[t]) + ")");
}

SequenceReport fail(Predicate kind, std::vector<std::size_t> witness) {
  return {kind, false, std::move(witness)};
}

}  // namespace

SequenceReport is_log_concave(std::span<const BigRat> a) {
  require_nonnegative(a);
  for (std::size_t i = 1; i + 1 < a.size(); ++i)
    if (a[i] * a[i] < a[i - 1] * a[i + 1])
      return fail(Predicate::log_concave, {i});
  return {Predicate::log_concave, true, std::nullopt};
}

SequenceReport has_internal_zeros(std::span<const BigRat> a) {
  SequenceReport report{Predicate::internal_zeros, false, std::nullopt};
  std::size_t first = 0;
  while (first < a.size() && a[first] == 0) ++first;
  // Smallest zero after `first` that is followed by a nonzero, then the
  // first nonzero after it: lexicographically first (i, k, j).
  for (std::size_t k = first + 1; k < a.size(); ++k) {
    if (a[k] != 0) continue;
    for (std::size_t j = k + 1; j < a.size(); ++j) {
      if (a[j] != 0) {
        report.verdict = true;
        report.witness = std::vector<std::size_t>{first, k, j};
        return report;
      }
    }
    break;
  }
  return report;
}

SequenceReport is_ultra_log_concave(std::span<const BigRat> a, long m) {
  if (m < static_cast<long>(a.size()) - 1)
    throw Error(ErrorCode::order_too_small,
                "order m=" + std::to_string(m) + " is below length-1=" +
                    std::to_string(static_cast<long>(a.size()) - 1));
  require_nonnegative(a);
  for (std::size_t i = 1; i + 1 < a.size(); ++i) {
    const long li = static_cast<long>(i);
    BigInt mid = binomial(m, li);
    BigRat lhs = a[i] * a[i] * binomial(m, li - 1) * binomial(m, li + 1);
    BigRat rhs = a[i - 1] * a[i + 1] * mid * mid;
    if (lhs < rhs) return fail(Predicate::ultra_log_concave, {i});
  }
  return {Predicate::ultra_log_concave, true, std::nullopt};
}

SequenceReport is_unimodal(std::span<const BigRat> a) {
  const std::size_t len = a.size();
  if (len < 3) return {Predicate::unimodal, true, std::nullopt};
  // suffix_max[t] = index of the first maximum of a[t..].
  std::vector<std::size_t> suffix_max(len);
  suffix_max[len - 1] = len - 1;
  for (std::size_t t = len - 1; t-- > 0;)
    suffix_max[t] = a[t] >= a[suffix_max[t + 1]] ? t : suffix_max[t + 1];
  for (std::size_t p = 0; p + 2 < len; ++p) {
    for (std::size_t q = p + 1; q + 1 < len; ++q) {
      if (!(a[q] < a[p]) || !(a[suffix_max[q + 1]] > a[q])) continue;
      for (std::size_t r = q + 1; r < len; ++r)
        if (a[r] > a[q]) return fail(Predicate::unimodal, {p, q, r});
    }
  }
  return {Predicate::unimodal, true, std::nullopt};
}

SequenceReport pairwise_lc(std::span<const BigRat> a) {
  require_nonnegative(a);
  for (std::size_t i = 1; i < a.size(); ++i)
    for (std::size_t j = i; j < a.size(); ++j)
      if (a[i] * a[j - 1] < a[i - 1] * a[j])
        return fail(Predicate::pairwise_log_concave, {i, j});
  return {Predicate::pairwise_log_concave, true, std::nullopt};
}

MainTheoremRecord check_main_theorem(const GammaVector& gamma) {
  require_nonnegative(gamma.coeffs());
  SymmetricPolynomial h = gamma_to_h(gamma);
  const bool g_lc = is_log_concave(gamma.coeffs()).verdict;
  const bool g_nz = !has_internal_zeros(gamma.coeffs()).verdict;
  const bool h_lc = is_log_concave(h.coeffs()).verdict;
  const bool h_nz = !has_internal_zeros(h.coeffs()).verdict;
  return {std::move(h), g_lc, g_nz, h_lc, h_nz};
}

UltraTransferRecord check_ultra_transfer(const GammaVector& gamma) {
  require_nonnegative(gamma.coeffs());
  SymmetricPolynomial h = gamma_to_h(gamma);
  const long n = gamma.n();
  const bool g_ulc = is_ultra_log_concave(gamma.coeffs(), n / 2).verdict;
  const bool g_nz = !has_internal_zeros(gamma.coeffs()).verdict;
  const bool h_ulc = is_ultra_log_concave(h.coeffs(), n).verdict;
  const bool h_nz = !has_internal_zeros(h.coeffs()).verdict;
  return {std::move(h), g_ulc, g_nz, h_ulc, h_nz};
}

}  // namespace gammalc
