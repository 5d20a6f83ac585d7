#ifndef GAMMALC_JSON_IO_HPP
#define GAMMALC_JSON_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "gammalc/arith.hpp"
#include "gammalc/coefficients.hpp"
#include "gammalc/concavity.hpp"
#include "gammalc/lattice.hpp"
#include "gammalc/poly.hpp"
#include "gammalc/sweeps.hpp"

// Every document carries "schema": "1". Rationals serialize as decimal
// strings "p/q" ("p" when q = 1); big integers as decimal strings.

namespace gammalc {

inline constexpr const char* kSchemaVersion = "1";

struct CoeffDocument {
  long n;
  std::vector<BigRat> coeffs;
};

/// Reads {"n": int, "coeffs": [...]}. Coefficients may be strings or JSON
/// integers. Throws Error(parse) with line and column on malformed input.
CoeffDocument parse_coeff_document(std::string_view text);

std::string to_json(long n, std::span<const BigRat> coeffs);
std::string to_json(const SymmetricPolynomial& poly);
std::string to_json(const GammaVector& gamma);
std::string to_json(const SequenceReport& report);
std::string to_json(const MainTheoremRecord& record);
std::string to_json(const UltraTransferRecord& record);
std::string to_json(const CoeffTable& table);
std::string to_json(const DiagonalSequence& seq);
std::string to_json(const QuadraticAB& ab, long n, long i, long ell);
std::string to_json(const IdentityCheck& check);
std::string to_json(const AbelResult& result);
std::string to_json(const Claim1Report& report);
std::string to_json(const Claim2Report& report);
std::string to_json(const Certificate& cert);
std::string to_json(const SweepSummary& summary);

}  // namespace gammalc

#endif
