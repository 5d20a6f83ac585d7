#include "gammalc/arith.hpp"

#include <cctype>
#include <string>

#include "gammalc/error.hpp"

namespace gammalc {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::parse: return "parse error";
    case ErrorCode::range: return "range error";
    case ErrorCode::symmetry_violation: return "symmetry violation";
    case ErrorCode::negative_entry: return "negative entry";
    case ErrorCode::order_too_small: return "order too small";
    case ErrorCode::length_mismatch: return "length mismatch";
    case ErrorCode::hypothesis_violation: return "hypothesis violation";
    case ErrorCode::endpoint_mismatch: return "endpoint mismatch";
    case ErrorCode::cap_exceeded: return "enumeration cap exceeded";
    case ErrorCode::invariant_violation: return "invariant violation";
  }
  return "unknown error";
}

BigInt binomial(long n, long k) {
  BigInt out;
  if (n < 0 || k < 0 || k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

BigRat parse_rational(std::string_view text) {
  std::string_view body = trim(text);
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorCode::parse,
                "not a rational number: '" + std::string(text) + "'");
  BigInt p(std::string(num), 10);
  BigInt q(std::string(den), 10);
  if (q == 0)
    throw Error(ErrorCode::parse,
                "zero denominator in '" + std::string(text) + "'");
  if (negative) p = -p;
  BigRat out(p, q);
  out.canonicalize();
  return out;
}

std::vector<BigRat> parse_rational_list(std::string_view text) {
  std::vector<BigRat> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start);
    try {
      out.push_back(parse_rational(item));
    } catch (const Error& e) {
      throw Error(ErrorCode::parse, "column " + std::to_string(start + 1) +
                                        ": " + e.what());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

std::string to_string(const BigRat& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

std::string join(std::span<const BigRat> values, std::string_view sep) {
  std::string out;
  for (std::size_t t = 0; t < values.size(); ++t) {
    if (t) out += sep;
    out += to_string(values[t]);
  }
  return out;
}

}  // namespace gammalc
