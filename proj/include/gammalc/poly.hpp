#ifndef GAMMALC_POLY_HPP
#define GAMMALC_POLY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gammalc/arith.hpp"

namespace gammalc {

/// Coefficients h_0..h_n of a polynomial with h_i = h_{n-i}. The vector is
/// stored at full length n+1 even when the degree is smaller than n.
class SymmetricPolynomial {
 public:
  /// Throws Error(range) for n < 0 or a length other than n+1, and
  /// Error(symmetry_violation) naming the first i with h_i != h_{n-i}.
  SymmetricPolynomial(long n, std::vector<BigRat> coeffs);

  long n() const noexcept { return n_; }
  std::span<const BigRat> coeffs() const noexcept { return coeffs_; }
  const BigRat& operator[](std::size_t i) const { return coeffs_[i]; }

  friend bool operator==(const SymmetricPolynomial&,
                         const SymmetricPolynomial&) = default;

 private:
  long n_;
  std::vector<BigRat> coeffs_;
};

/// Coefficients gamma_0..gamma_{floor(n/2)} in the basis x^j (1+x)^(n-2j).
class GammaVector {
 public:
  /// Throws Error(range) unless coeffs has exactly floor(n/2)+1 entries.
  GammaVector(long n, std::vector<BigRat> coeffs);

  long n() const noexcept { return n_; }
  std::span<const BigRat> coeffs() const noexcept { return coeffs_; }
  const BigRat& operator[](std::size_t j) const { return coeffs_[j]; }

  friend bool operator==(const GammaVector&, const GammaVector&) = default;

 private:
  long n_;
  std::vector<BigRat> coeffs_;
};

/// First index i with h_i != h_{n-i}, if any.
std::optional<std::size_t> first_symmetry_violation(
    std::span<const BigRat> coeffs);

/// h_i = sum_{j<=i} C(n-2j, i-j) gamma_j.
SymmetricPolynomial gamma_to_h(const GammaVector& gamma);

/// Forward substitution gamma_i = h_i - sum_{j<i} C(n-2j, i-j) gamma_j.
GammaVector h_to_gamma(const SymmetricPolynomial& poly);

/// x^j (1+x)^(n-2j) in the monomial basis, length n+1. Throws Error(range)
/// unless 0 <= j <= floor(n/2).
std::vector<BigInt> basis_polynomial(long n, long j);

}  // namespace gammalc

#endif
