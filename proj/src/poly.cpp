#include "gammalc/poly.hpp"

#include <string>

#include "gammalc/error.hpp"

namespace gammalc {

std::optional<std::size_t> first_symmetry_violation(
    std::span<const BigRat> coeffs) {
  const std::size_t len = coeffs.size();
  for (std::size_t i = 0; i < len / 2; ++i)
    if (coeffs[i] != coeffs[len - 1 - i]) return i;
  return std::nullopt;
}

SymmetricPolynomial::SymmetricPolynomial(long n, std::vector<BigRat> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
  if (n_ < 0) throw Error(ErrorCode::range, "n must be nonnegative");
  if (coeffs_.size() != static_cast<std::size_t>(n_) + 1)
    throw Error(ErrorCode::range,
                "expected " + std::to_string(n_ + 1) + " coefficients for n=" +
                    std::to_string(n_) + ", got " +
                    std::to_string(coeffs_.size()));
  if (auto bad = first_symmetry_violation(coeffs_))
    throw Error(ErrorCode::symmetry_violation,
                "h_" + std::to_string(*bad) + " != h_" +
                    std::to_string(n_ - static_cast<long>(*bad)));
}

GammaVector::GammaVector(long n, std::vector<BigRat> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
  if (n_ < 0) throw Error(ErrorCode::range, "n must be nonnegative");
  if (coeffs_.size() != static_cast<std::size_t>(n_ / 2) + 1)
    throw Error(ErrorCode::range,
                "expected " + std::to_string(n_ / 2 + 1) +
                    " gamma coefficients for n=" + std::to_string(n_) +
                    ", got " + std::to_string(coeffs_.size()));
}

SymmetricPolynomial gamma_to_h(const GammaVector& gamma) {
  const long n = gamma.n();
  std::vector<BigRat> h(static_cast<std::size_t>(n) + 1);
  for (long j = 0; j <= n / 2; ++j) {
    const BigRat& g = gamma[static_cast<std::size_t>(j)];
    if (g == 0) continue;
    for (long i = j; i <= n - j; ++i)
      h[static_cast<std::size_t>(i)] += binomial(n - 2 * j, i - j) * g;
  }
  return SymmetricPolynomial(n, std::move(h));
}

GammaVector h_to_gamma(const SymmetricPolynomial& poly) {
  const long n = poly.n();
  std::vector<BigRat> gamma(static_cast<std::size_t>(n / 2) + 1);
  for (long i = 0; i <= n / 2; ++i) {
    BigRat acc = poly[static_cast<std::size_t>(i)];
    for (long j = 0; j < i; ++j)
      acc -= binomial(n - 2 * j, i - j) * gamma[static_cast<std::size_t>(j)];
    gamma[static_cast<std::size_t>(i)] = acc;
  }
  return GammaVector(n, std::move(gamma));
}

std::vector<BigInt> basis_polynomial(long n, long j) {
  if (n < 0 || j < 0 || j > n / 2)
    throw Error(ErrorCode::range, "basis index j=" + std::to_string(j) +
                                      " outside 0..floor(n/2) for n=" +
                                      std::to_string(n));
  std::vector<BigInt> out(static_cast<std::size_t>(n) + 1);
  for (long i = j; i <= n - j; ++i)
    out[static_cast<std::size_t>(i)] = binomial(n - 2 * j, i - j);
  return out;
}

}  // namespace gammalc
