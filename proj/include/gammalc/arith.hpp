#ifndef GAMMALC_ARITH_HPP
#define GAMMALC_ARITH_HPP

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gammalc {

using BigInt = mpz_class;
// Always kept canonical: reduced, positive denominator.
using BigRat = mpq_class;

/// Binomial coefficient C(n, k); zero whenever n < 0, k < 0 or k > n.
BigInt binomial(long n, long k);

/// Parses "p", "-p", "+p" or "p/q" (decimal digits only). Throws
/// Error(parse) on malformed input or a zero denominator.
BigRat parse_rational(std::string_view text);

/// Comma-separated rationals, whitespace tolerated around entries. The
/// error message names the 1-based column of the offending entry.
std::vector<BigRat> parse_rational_list(std::string_view text);

std::string to_string(const BigInt& value);
/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const BigRat& value);
std::string join(std::span<const BigRat> values, std::string_view sep = ",");

}  // namespace gammalc

#endif
