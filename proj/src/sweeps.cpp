#include "gammalc/sweeps.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <string>

#include "gammalc/coefficients.hpp"
#include "gammalc/concavity.hpp"
#include "gammalc/error.hpp"
#include "gammalc/poly.hpp"

namespace gammalc {

bool SweepSummary::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const SweepCheck& c) { return c.passed(); });
}

SweepCheck& SweepSummary::check(const std::string& check_name) {
  for (SweepCheck& c : checks)
    if (c.name == check_name) return c;
  checks.push_back({check_name, 0, 0, {}});
  return checks.back();
}

namespace {

// Check references stay valid while a sweep holds them.
constexpr std::size_t kMaxChecks = 8;

std::string at(std::initializer_list<std::pair<const char*, long>> fields) {
  std::string out = "(";
  bool first = true;
  for (auto [name, value] : fields) {
    if (!first) out += ", ";
    out += std::string(name) + "=" + std::to_string(value);
    first = false;
  }
  return out + ")";
}

std::string list(std::span<const BigRat> v) { return "[" + join(v, ",") + "]"; }

// Calls visit on every vector of length len over {0..max_entry}.
void for_each_vector(std::size_t len, long max_entry,
                     const std::function<void(const std::vector<BigRat>&)>& visit) {
  std::vector<long> digits(len, 0);
  std::vector<BigRat> v(len);
  while (true) {
    for (std::size_t t = 0; t < len; ++t) v[t] = digits[t];
    visit(v);
    std::size_t t = 0;
    while (t < len && digits[t] == max_entry) digits[t++] = 0;
    if (t == len) return;
    ++digits[t];
  }
}

BigRat random_positive(std::mt19937_64& rng, long num_max, long den_max) {
  std::uniform_int_distribution<long> num(1, num_max), den(1, den_max);
  BigRat out(num(rng), den(rng));
  out.canonicalize();
  return out;
}

// Log-concave without internal zeros: positive support [lo, hi] with weakly
// decreasing successive ratios, zeros outside it.
std::vector<BigRat> random_lc_vector(std::mt19937_64& rng, std::size_t len) {
  std::vector<BigRat> out(len, BigRat(0));
  std::uniform_int_distribution<std::size_t> pick(0, len - 1);
  std::size_t lo = pick(rng), hi = pick(rng);
  if (lo > hi) std::swap(lo, hi);
  std::vector<BigRat> ratios;
  for (std::size_t t = lo; t < hi; ++t) ratios.push_back(random_positive(rng, 12, 6));
  std::sort(ratios.begin(), ratios.end(), std::greater<>());
  out[lo] = random_positive(rng, 20, 5);
  for (std::size_t t = lo + 1; t <= hi; ++t) out[t] = out[t - 1] * ratios[t - lo - 1];
  return out;
}

}  // namespace

SweepSummary sweep_coefficients(long n_max) {
  SweepSummary s{"coefficients", n_max, {}};
  s.checks.reserve(kMaxChecks);
  SweepCheck& oracle = s.check("closed_form_equals_oracle");
  SweepCheck& vanish = s.check("vanishes_beyond_i_plus_1");
  SweepCheck& near = s.check("near_diagonal_nonnegative");
  SweepCheck& mirror = s.check("symmetric_in_i");
  for (long n = 2; n <= n_max; ++n) {
    for (long i = 1; i <= n - 1; ++i) {
      for (long j = 0; j <= n / 2; ++j) {
        for (long k = j; k <= n / 2; ++k) {
          const BigInt c = c_coeff(n, i, j, k);
          const std::string where = at({{"n", n}, {"i", i}, {"j", j}, {"k", k}});
          oracle.record(c == c_coeff_oracle(n, i, j, k), where);
          if (k > i + 1) vanish.record(c == 0, where);
          if (k - j <= 1) near.record(c >= 0, where);
          mirror.record(c == c_coeff(n, n - i, j, k), where);
        }
      }
    }
  }
  return s;
}

SweepSummary sweep_diagonals(long n_max) {
  SweepSummary s{"diagonals", n_max, {}};
  s.checks.reserve(kMaxChecks);
  SweepCheck& tail = s.check("tail_sign");
  SweepCheck& signs = s.check("A_negative_B_positive");
  SweepCheck& identity = s.check("rational_identity");
  SweepCheck& follows = s.check("sign_follows_quadratic");
  for (long n = 2; n <= n_max; ++n)
    for (long i = 1; i <= n - 1; ++i)
      for (long ell = 1; 2 * ell <= i + 1; ++ell)
        for (Parity p : {Parity::even, Parity::odd}) {
          const std::string where = at({{"n", n}, {"i", i}, {"l", ell}}) + " " +
                                    to_string(p);
          tail.record(diagonal(n, i, ell, p).tail_sign_ok(), where);
        }
  for (long n = 1; n <= n_max; ++n) {
    for (long i = 1; 2 * i <= n; ++i) {
      for (long ell = 1; 2 * ell <= i + 1; ++ell) {
        for (Parity p : {Parity::even, Parity::odd}) {
          const std::string where = at({{"n", n}, {"i", i}, {"l", ell}}) + " " +
                                    to_string(p);
          std::optional<QuadraticAB> ab;
          try {
            ab = quadratic_ab(n, i, ell, p);
            signs.record(true, where);
          } catch (const Error& e) {
            signs.record(false, where + ": " + e.what());
          }
          const long j_min = p == Parity::even ? 1 : 0;
          const long j_max = p == Parity::even ? ell : ell - 1;
          for (long j = j_min; j <= j_max; ++j) {
            IdentityCheck check;
            try {
              check = rational_identity_check(n, i, ell, j, p);
            } catch (const Error& e) {
              if (e.code() == ErrorCode::range) continue;  // denominator < 0
              throw;
            }
            const std::string here = where + " j=" + std::to_string(j);
            identity.record(check.holds, here);
            if (ab && sgn(check.direct) != 0)
              follows.record(sgn(check.direct) == sgn(ab->evaluate(j)), here);
          }
        }
      }
    }
  }
  return s;
}

SweepSummary sweep_r_sums(long n_max) {
  SweepSummary s{"r_sums", n_max, {}};
  s.checks.reserve(kMaxChecks);
  SweepCheck& nonneg = s.check("nonnegative");
  SweepCheck& vanish = s.check("vanishes_for_r_above_i");
  for (long n = 2; n <= n_max; ++n)
    for (long i = 1; i <= n / 2; ++i)
      for (long r = 0; r <= 2 * i; ++r) {
        const BigInt v = r_sum(n, i, r);
        const std::string where = at({{"n", n}, {"i", i}, {"r", r}}) +
                                  " r_sum=" + to_string(v);
        nonneg.record(v >= 0, where);
        if (r >= i + 1) vanish.record(v == 0, where);
      }
  return s;
}

SweepSummary sweep_paths(long n_max, std::uint64_t cap) {
  SweepSummary s{"paths", n_max, {}};
  s.checks.reserve(kMaxChecks);
  SweepCheck& lhs_formula = s.check("lhs_paths_equal_formula");
  SweepCheck& rhs_formula = s.check("rhs_paths_equal_formula");
  SweepCheck& lhs_segment = s.check("lhs_paths_equal_segment_sum");
  SweepCheck& rhs_segment = s.check("rhs_paths_equal_segment_sum");
  SweepCheck& c1 = s.check("claim1");
  SweepCheck& c2 = s.check("claim2");
  SweepCheck& decomposition = s.check("certificate_total_equals_path_difference");
  SweepCheck& certifies = s.check("certificate_total_equals_formula");
  for (long n = 0; n <= n_max; ++n) {
    for (long i = 0; i <= n / 2; ++i) {
      for (long r = 0; r <= 2 * i; ++r) {
        const SegmentConfig cfg = make_config(n, i, r);
        const std::string where = at({{"n", n}, {"i", i}, {"r", r}});
        try {
          const BigInt lhs = lhs_by_paths(cfg, cap);
          const BigInt rhs = rhs_by_paths(cfg, cap);
          lhs_formula.record(lhs == lhs_by_formula(cfg),
                             where + " paths=" + to_string(lhs) +
                                 " formula=" + to_string(lhs_by_formula(cfg)));
          rhs_formula.record(rhs == rhs_by_formula(cfg),
                             where + " paths=" + to_string(rhs) +
                                 " formula=" + to_string(rhs_by_formula(cfg)));
          lhs_segment.record(lhs == segment_product_sum(cfg, cfg.pq()), where);
          rhs_segment.record(rhs == segment_product_sum(cfg, cfg.pq_prime()), where);
          c1.record(claim1_check(cfg, cap).holds, where);
          c2.record(claim2_check(cfg, cap).holds(), where);
          try {
            const Certificate cert = certificate(cfg, cap);
            decomposition.record(true, where);
            certifies.record(cert.certifies_formula(),
                             where + " total=" + to_string(cert.total) +
                                 " formula=" +
                                 to_string(BigInt(cert.lhs - cert.rhs)));
          } catch (const Error& e) {
            if (e.code() != ErrorCode::invariant_violation) throw;
            decomposition.record(false, where + ": " + e.what());
          }
        } catch (const Error& e) {
          if (e.code() != ErrorCode::cap_exceeded) throw;
        }
      }
    }
  }
  return s;
}

SweepSummary sweep_main_theorem(long n_max, long max_entry,
                                std::uint64_t random_cases, std::uint64_t seed) {
  SweepSummary s{"main_theorem", n_max, {}};
  s.checks.reserve(kMaxChecks);
  SweepCheck& exhaustive = s.check("exhaustive_no_violation");
  SweepCheck& round_trip = s.check("exhaustive_round_trip");
  SweepCheck& generated = s.check("random_hypothesis_holds");
  SweepCheck& random = s.check("random_no_violation");
  for (long n = 0; n <= n_max; ++n) {
    for_each_vector(static_cast<std::size_t>(n / 2 + 1), max_entry,
                    [&](const std::vector<BigRat>& g) {
                      GammaVector gamma(n, g);
                      const MainTheoremRecord rec = check_main_theorem(gamma);
                      const std::string where = "n=" + std::to_string(n) +
                                                " gamma=" + list(g);
                      exhaustive.record(!rec.violation(), where);
                      const GammaVector back = h_to_gamma(rec.h);
                      round_trip.record(std::equal(back.coeffs().begin(), back.coeffs().end(), g.begin(), g.end()), where);
                    });
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pick_n(2, 30);
  for (std::uint64_t c = 0; c < random_cases; ++c) {
    const long n = pick_n(rng);
    GammaVector gamma(n, random_lc_vector(rng, static_cast<std::size_t>(n / 2 + 1)));
    const MainTheoremRecord rec = check_main_theorem(gamma);
    const std::string where = "n=" + std::to_string(n) + " gamma=" +
                              list(gamma.coeffs());
    generated.record(rec.hypothesis(), where);
    random.record(!rec.violation(), where);
  }
  return s;
}

SweepSummary sweep_ultra_transfer(long n_max, long max_entry) {
  SweepSummary s{"ultra_transfer", n_max, {}};
  s.checks.reserve(kMaxChecks);
  SweepCheck& check = s.check("exhaustive_no_violation");
  for (long n = 0; n <= n_max; ++n)
    for_each_vector(static_cast<std::size_t>(n / 2 + 1), max_entry,
                    [&](const std::vector<BigRat>& g) {
                      const UltraTransferRecord rec =
                          check_ultra_transfer(GammaVector(n, g));
                      check.record(!rec.violation(),
                                   "n=" + std::to_string(n) + " gamma=" + list(g));
                    });
  return s;
}

SweepSummary sweep_abel(std::uint64_t cases, std::uint64_t seed) {
  SweepSummary s{"abel", 0, {}};
  s.checks.reserve(kMaxChecks);
  SweepCheck& nonneg = s.check("weighted_sum_nonnegative");
  SweepCheck& identity = s.check("summation_by_parts_identity");
  SweepCheck& unimodal = s.check("prefix_sums_unimodal");
  SweepCheck& prefix_nonneg = s.check("prefix_sums_nonnegative");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_len(1, 12);
  std::uniform_int_distribution<long> coin(0, 3);
  for (std::uint64_t c = 0; c < cases; ++c) {
    const std::size_t len = pick_len(rng);
    std::uniform_int_distribution<std::size_t> pick_split(0, len);
    const std::size_t split = pick_split(rng);
    std::vector<BigRat> a(len), b(len);
    for (std::size_t t = 0; t < len; ++t) {
      BigRat v = coin(rng) == 0 ? BigRat(0) : random_positive(rng, 30, 7);
      a[t] = t < split ? v : BigRat(-v);
      b[t] = coin(rng) == 0 ? BigRat(0) : random_positive(rng, 30, 7);
    }
    BigRat total = 0;
    for (const BigRat& v : a) total += v;
    if (total < 0) a[0] += -total + (coin(rng) == 0 ? BigRat(0) : random_positive(rng, 5, 3));
    std::sort(b.begin(), b.end(), std::greater<>());
    const std::string where = "a=" + list(a) + " b=" + list(b);
    AbelResult r;
    try {
      r = abel_sum_check(a, b);
    } catch (const Error& e) {
      nonneg.record(false, where + ": " + e.what());
      continue;
    }
    nonneg.record(r.weighted_sum >= 0, where);
    identity.record(r.identity_holds, where);
    unimodal.record(r.prefix_unimodal, where);
    prefix_nonneg.record(r.prefix_nonnegative, where);
  }
  return s;
}

SweepSummary sweep_predicates(long max_len, long max_entry) {
  SweepSummary s{"predicates", max_len, {}};
  s.checks.reserve(kMaxChecks);
  SweepCheck& pairwise = s.check("pairwise_equals_lc_without_internal_zeros");
  SweepCheck& unimodal = s.check("lc_without_internal_zeros_is_unimodal");
  SweepCheck& ulc = s.check("ulc_implies_lc");
  for (long len = 1; len <= max_len; ++len)
    for_each_vector(static_cast<std::size_t>(len), max_entry,
                    [&](const std::vector<BigRat>& a) {
                      const std::string where = list(a);
                      const bool lc = is_log_concave(a).verdict;
                      const bool zeros = has_internal_zeros(a).verdict;
                      if (!zeros) {
                        pairwise.record(pairwise_lc(a).verdict == lc, where);
                        if (lc) unimodal.record(is_unimodal(a).verdict, where);
                      }
                      for (long m = len - 1; m <= len + 1; ++m)
                        if (is_ultra_log_concave(a, m).verdict)
                          ulc.record(lc, where + " m=" + std::to_string(m));
                    });
  return s;
}

}  // namespace gammalc
