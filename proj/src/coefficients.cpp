#include "gammalc/coefficients.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <string_view>

#include "gammalc/concavity.hpp"
#include "gammalc/error.hpp"

namespace gammalc {

namespace {

std::string args(long n, long i, long j, long k) {
  return "(n=" + std::to_string(n) + ", i=" + std::to_string(i) +
         ", j=" + std::to_string(j) + ", k=" + std::to_string(k) + ")";
}

void check_coeff_range(long n, long i, long j, long k) {
  if (n < 2 || i < 1 || i > n - 1 || j < 0 || k < j)
    throw Error(ErrorCode::range,
                "c_jk^(i) needs n >= 2, 1 <= i <= n-1, 0 <= j <= k " +
                    args(n, i, j, k));
}

// Coefficients of x^t (1+x)^(n-2t), built by multiplying by (1+x) one
// factor at a time.
std::vector<BigInt> expand_basis_row(long n, long t) {
  std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
  const long power = n - 2 * t;
  if (t < 0 || power < 0) return row;
  std::vector<BigInt> pascal{1};
  for (long p = 0; p < power; ++p) {
    std::vector<BigInt> next(pascal.size() + 1);
    for (std::size_t u = 0; u < pascal.size(); ++u) {
      next[u] += pascal[u];
      next[u + 1] += pascal[u];
    }
    pascal = std::move(next);
  }
  for (std::size_t u = 0; u < pascal.size(); ++u)
    row[static_cast<std::size_t>(t) + u] = pascal[u];
  return row;
}

// Two routes to A and B; see quadratic_ab.
BigInt a_even(long n, long i, long l) {
  return BigInt(-4 * n * n + 16 * n * i - 16 * i * i - 2 * n + 4 * l - 2);
}

BigInt a_even_factored(long n, long i, long l) {
  return BigInt(-4 * (n - 2 * i) * (n - 2 * i) - 2 * (n - 2 * l) - 2);
}

BigInt b_even(long n, long i, long l) {
  BigInt N(n), I(i), L(l);
  return 2 * N * N * I - 2 * N * I * I - 2 * N * N * L - 4 * N * I * L +
         4 * I * I * L + 6 * N * L * L - 4 * L * L * L + 2 * N * N +
         2 * N * I - 2 * I * I - 10 * N * L + 10 * L * L + 4 * N - 8 * L + 2;
}

BigInt a_odd(long n, long i, long l) {
  return BigInt(-8 * i * i + 8 * i * n + 2 * l - 2 * n * n - n - 2);
}

BigInt a_odd_factored(long n, long i, long l) {
  return BigInt(-2 * (n - 2 * i) * (n - 2 * i) - (n - 2 * l) - 2);
}

BigInt b_odd(long n, long i, long l) {
  return BigInt(2 * i - 2 * l + 3) * BigInt(n - 2 * l + 2) *
         BigInt(2 * n - 2 * i - 2 * l + 3);
}

// Denominator factors of the factored diagonal coefficient, with names for
// diagnostics.
struct Factor {
  const char* name;
  long value;
};

std::array<Factor, 4> denominator_factors(long n, long i, long l, long j,
                                          Parity parity) {
  if (parity == Parity::even)
    return {{{"n-l+j-i+1", n - l + j - i + 1},
             {"i-l-j+1", i - l - j + 1},
             {"i-l+j+1", i - l + j + 1},
             {"n-l-j-i+1", n - l - j - i + 1}}};
  return {{{"n-i-l+j+2", n - i - l + j + 2},
           {"i-l-j+1", i - l - j + 1},
           {"i-l+j+2", i - l + j + 2},
           {"n-i-l-j+1", n - i - l - j + 1}}};
}

// C(n-2a, i-a) C(n-2b, i-b) for the diagonal pair (a, b) at spread index j.
std::pair<long, long> diagonal_pair(long l, long j, Parity parity) {
  return parity == Parity::even ? std::pair{l - j, l + j}
                                : std::pair{l - 1 - j, l + j};
}

// At b = i+1 the factor i-b+1 vanishes together with C(n-2b, i-b); their
// quotient tends to 1/(n-2b+1), which is what the identity evaluates to there.
bool at_boundary(long i, long b, long n) { return i - b + 1 == 0 && n - 2 * b + 1 > 0; }

BigRat factored_value(long n, long i, long l, long j, Parity parity) {
  auto [a, b] = diagonal_pair(l, j, parity);
  const bool boundary = at_boundary(i, b, n);
  BigInt prefactor = binomial(n - 2 * a, i - a);
  if (!boundary) prefactor *= binomial(n - 2 * b, i - b);
  BigInt den = boundary ? BigInt(n - 2 * b + 1) : BigInt(1);
  for (const Factor& f : denominator_factors(n, i, l, j, parity))
    if (f.value != 0) den *= f.value;
  BigInt quad;
  if (parity == Parity::even) {
    quad = a_even(n, i, l) * j * j + b_even(n, i, l);
  } else {
    quad = a_odd(n, i, l) * (2 * j + 1) * (2 * j + 1) + b_odd(n, i, l);
    den *= 2;
  }
  BigRat out(prefactor * quad, den);
  out.canonicalize();
  return out;
}

}  // namespace

BigInt c_coeff(long n, long i, long j, long k) {
  check_coeff_range(n, i, j, k);
  const long nj = n - 2 * j;
  const long nk = n - 2 * k;
  if (j == k)
    return binomial(nj, i - j) * binomial(nj, i - j) -
           binomial(nj, i - j - 1) * binomial(nj, i - j + 1);
  return 2 * binomial(nj, i - j) * binomial(nk, i - k) -
         binomial(nj, i - j - 1) * binomial(nk, i - k + 1) -
         binomial(nj, i - j + 1) * binomial(nk, i - k - 1);
}

BigInt c_coeff_oracle(long n, long i, long j, long k) {
  check_coeff_range(n, i, j, k);
  if (k > n / 2) return 0;  // no gamma_k
  const std::vector<BigInt> row_j = expand_basis_row(n, j);
  const std::vector<BigInt> row_k = expand_basis_row(n, k);
  // [g_t] h_m is row_t[m]; quadratic form M[s][t] = [g_s]h_i [g_t]h_i -
  // [g_s]h_{i-1} [g_t]h_{i+1}.
  auto at = [&](const std::vector<BigInt>& row, long m) -> BigInt {
    return (m < 0 || m > n) ? BigInt(0) : row[static_cast<std::size_t>(m)];
  };
  BigInt m_jk = at(row_j, i) * at(row_k, i) - at(row_j, i - 1) * at(row_k, i + 1);
  if (j == k) return m_jk;
  BigInt m_kj = at(row_k, i) * at(row_j, i) - at(row_k, i - 1) * at(row_j, i + 1);
  return m_jk + m_kj;
}

BigInt CoeffTable::at(long j, long k) const {
  if (j > k) std::swap(j, k);
  auto it = entries_.find({j, k});
  return it == entries_.end() ? BigInt(0) : it->second;
}

BigRat CoeffTable::evaluate(std::span<const BigRat> gamma) const {
  BigRat total = 0;
  for (const auto& [key, c] : entries_) {
    auto [j, k] = key;
    if (k >= static_cast<long>(gamma.size())) continue;
    total += c * gamma[static_cast<std::size_t>(j)] *
             gamma[static_cast<std::size_t>(k)];
  }
  return total;
}

CoeffTable coeff_table(long n, long i) {
  check_coeff_range(n, i, 0, 0);
  std::map<CoeffTable::Key, BigInt> entries;
  for (long k = 0; k <= n / 2; ++k)
    for (long j = 0; j <= k; ++j) entries.emplace(CoeffTable::Key{j, k}, c_coeff(n, i, j, k));
  return CoeffTable(n, i, std::move(entries));
}

const char* to_string(Parity p) noexcept {
  return p == Parity::even ? "even" : "odd";
}

std::pair<long, long> DiagonalSequence::indices(std::size_t t) const {
  return diagonal_pair(ell, static_cast<long>(t), parity);
}

std::optional<std::size_t> DiagonalSequence::first_negative() const {
  for (std::size_t t = 0; t < values.size(); ++t)
    if (sgn(values[t]) < 0) return t;
  return std::nullopt;
}

bool DiagonalSequence::tail_sign_ok() const {
  auto first = first_negative();
  if (!first) return true;
  for (std::size_t t = *first; t < values.size(); ++t)
    if (sgn(values[t]) > 0) return false;
  return true;
}

DiagonalSequence diagonal(long n, long i, long ell, Parity parity) {
  if (n < 2 || i < 1 || i > n - 1 || ell < 1 || 2 * ell > i + 1)
    throw Error(ErrorCode::range,
                "diagonal needs n >= 2, 1 <= i <= n-1, 1 <= l <= (i+1)/2 (n=" +
                    std::to_string(n) + ", i=" + std::to_string(i) +
                    ", l=" + std::to_string(ell) + ")");
  DiagonalSequence seq{n, i, ell, parity, {}};
  const long len = parity == Parity::even ? ell + 1 : ell;
  for (long t = 0; t < len; ++t) {
    auto [a, b] = diagonal_pair(ell, t, parity);
    seq.values.push_back(c_coeff(n, i, a, b));
  }
  return seq;
}

BigInt QuadraticAB::evaluate(long j) const {
  const long x = parity == Parity::even ? j : 2 * j + 1;
  return a * x * x + b;
}

QuadraticAB quadratic_ab(long n, long i, long ell, Parity parity) {
  if (n < 1 || i < 0 || 2 * i > n || ell < 1 || 2 * ell > i + 1)
    throw Error(ErrorCode::range,
                "quadratic A/B needs n >= 1, 0 <= i <= n/2, 1 <= l <= (i+1)/2 "
                "(n=" + std::to_string(n) + ", i=" + std::to_string(i) +
                    ", l=" + std::to_string(ell) + ")");
  const std::string where = " at (n=" + std::to_string(n) + ", i=" +
                            std::to_string(i) + ", l=" + std::to_string(ell) +
                            ", " + to_string(parity) + ")";
  QuadraticAB out{parity, 0, 0};
  // The j = 0 value of the unequal-index formula, times its denominator,
  // over the binomial prefactor.
  BigInt b_from_value;
  {
    const long j = 0;
    auto [a, b] = diagonal_pair(ell, j, parity);
    const long na = n - 2 * a, nb = n - 2 * b;
    BigInt value = 2 * binomial(na, i - a) * binomial(nb, i - b) -
                   binomial(na, i - a - 1) * binomial(nb, i - b + 1) -
                   binomial(na, i - a + 1) * binomial(nb, i - b - 1);
    BigInt den = parity == Parity::even ? 1 : 2;
    for (const Factor& f : denominator_factors(n, i, ell, j, parity)) den *= f.value;
    BigInt prefactor = binomial(na, i - a) * binomial(nb, i - b);
    BigInt scaled = value * den;
    if (prefactor == 0 || scaled % prefactor != 0)
      throw Error(ErrorCode::invariant_violation,
                  "B is not recoverable from the j = 0 value" + where);
    b_from_value = scaled / prefactor;
  }
  if (parity == Parity::even) {
    out.a = a_even(n, i, ell);
    if (out.a != a_even_factored(n, i, ell))
      throw Error(ErrorCode::invariant_violation,
                  "expanded and factored A disagree" + where);
    out.b = b_even(n, i, ell);
  } else {
    out.a = a_odd(n, i, ell);
    if (out.a != a_odd_factored(n, i, ell))
      throw Error(ErrorCode::invariant_violation,
                  "expanded and factored A disagree" + where);
    out.b = b_odd(n, i, ell);
    b_from_value -= out.a;  // the odd j = 0 value carries A (2*0+1)^2 + B
  }
  if (out.b != b_from_value)
    throw Error(ErrorCode::invariant_violation,
                "transcribed B=" + to_string(out.b) + " but j = 0 value gives " +
                    to_string(b_from_value) + where);
  if (sgn(out.a) >= 0)
    throw Error(ErrorCode::invariant_violation, "A >= 0" + where);
  if (sgn(out.b) <= 0)
    throw Error(ErrorCode::invariant_violation, "B <= 0" + where);
  return out;
}

IdentityCheck rational_identity_check(long n, long i, long ell, long j,
                                      Parity parity) {
  const long j_min = parity == Parity::even ? 1 : 0;
  auto [a, b] = diagonal_pair(ell, j, parity);
  if (n < 1 || i < 1 || ell < 1 || j < j_min || a < 0)
    throw Error(ErrorCode::range,
                "identity needs n >= 1, i >= 1, l >= 1, " +
                    std::string(parity == Parity::even ? "1" : "0") +
                    " <= j <= " + (parity == Parity::even ? "l" : "l-1"));
  const bool boundary = at_boundary(i, b, n);
  for (const Factor& f : denominator_factors(n, i, ell, j, parity))
    if (f.value < 0 || (f.value == 0 && !(boundary && f.name == std::string_view("i-l-j+1"))))
      throw Error(ErrorCode::range, std::string("denominator factor ") + f.name +
                                        " = " + std::to_string(f.value) +
                                        " is not positive");
  IdentityCheck out;
  out.direct = c_coeff(n, std::max(i, 1L), a, b);
  out.factored = factored_value(n, i, ell, j, parity);
  out.holds = out.direct == out.factored;
  return out;
}

AbelResult abel_sum_check(std::span<const BigRat> a, std::span<const BigRat> b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::length_mismatch,
                "a has " + std::to_string(a.size()) + " entries, b has " +
                    std::to_string(b.size()));
  std::optional<std::size_t> first_negative;
  for (std::size_t t = 0; t < a.size(); ++t) {
    if (!first_negative && sgn(a[t]) < 0) first_negative = t;
    if (first_negative && sgn(a[t]) > 0)
      throw Error(ErrorCode::hypothesis_violation,
                  "a is not tail-signed: a_" + std::to_string(t) +
                      " > 0 after negative a_" + std::to_string(*first_negative));
  }
  for (std::size_t t = 0; t < b.size(); ++t) {
    if (sgn(b[t]) < 0)
      throw Error(ErrorCode::hypothesis_violation,
                  "b is not nonnegative: b_" + std::to_string(t) + " < 0");
    if (t > 0 && b[t] > b[t - 1])
      throw Error(ErrorCode::hypothesis_violation,
                  "b is not weakly decreasing: b_" + std::to_string(t) +
                      " > b_" + std::to_string(t - 1));
  }
  AbelResult out;
  BigRat running = 0;
  for (const BigRat& v : a) {
    running += v;
    out.prefix_sums.push_back(running);
  }
  if (sgn(running) < 0)
    throw Error(ErrorCode::hypothesis_violation,
                "sum of a is negative (" + to_string(running) + ")");
  out.weighted_sum = 0;
  out.by_parts = 0;
  for (std::size_t t = 0; t < a.size(); ++t) {
    out.weighted_sum += a[t] * b[t];
    BigRat next = t + 1 < b.size() ? b[t + 1] : BigRat(0);
    out.by_parts += out.prefix_sums[t] * (b[t] - next);
  }
  out.identity_holds = out.weighted_sum == out.by_parts;
  out.prefix_unimodal = is_unimodal(out.prefix_sums).verdict;
  out.prefix_nonnegative = true;
  for (const BigRat& v : out.prefix_sums)
    if (sgn(v) < 0) out.prefix_nonnegative = false;
  return out;
}

std::vector<std::vector<RegroupedTerm>> regroup(const CoeffTable& table) {
  const long top = table.max_index();
  std::vector<std::vector<RegroupedTerm>> rows;
  for (long s = 0; s <= 2 * top; ++s) {
    std::vector<std::pair<long, long>> pairs;
    for (long j = s / 2; j >= 0 && s - j <= top; --j) pairs.emplace_back(j, s - j);
    std::vector<RegroupedTerm> row;
    BigInt prefix = 0;
    for (std::size_t t = 0; t < pairs.size(); ++t) {
      prefix += table.at(pairs[t].first, pairs[t].second);
      if (prefix == 0) continue;
      RegroupedTerm term{prefix, pairs[t], std::nullopt};
      if (t + 1 < pairs.size()) term.minus = pairs[t + 1];
      row.push_back(std::move(term));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

BigInt r_sum(long n, long i, long r) {
  if (i < 1 || i > n / 2 || r < 0)
    throw Error(ErrorCode::range,
                "r_sum needs 1 <= i <= floor(n/2), r >= 0 (n=" +
                    std::to_string(n) + ", i=" + std::to_string(i) +
                    ", r=" + std::to_string(r) + ")");
  BigInt total = 0;
  for (long j = 0; 2 * j <= r; ++j) total += c_coeff(n, i, j, r - j);
  return total;
}

}  // namespace gammalc
