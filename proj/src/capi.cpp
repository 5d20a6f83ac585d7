#include "gammalc/gammalc.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "gammalc/coefficients.hpp"
#include "gammalc/concavity.hpp"
#include "gammalc/error.hpp"
#include "gammalc/json_io.hpp"
#include "gammalc/lattice.hpp"
#include "gammalc/poly.hpp"
#include "gammalc/render.hpp"
#include "gammalc/sweeps.hpp"
#include "json.hpp"

using namespace gammalc;

struct glc_seq {
  std::vector<BigRat> values;
};
struct glc_poly {
  SymmetricPolynomial value;
};
struct glc_gamma {
  GammaVector value;
};
struct glc_coeff_table {
  CoeffTable value;
};
struct glc_certificate {
  Certificate value;
};

namespace {

thread_local std::string last_error;

glc_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse: return GLC_ERR_PARSE;
    case ErrorCode::range: return GLC_ERR_RANGE;
    case ErrorCode::symmetry_violation: return GLC_ERR_SYMMETRY;
    case ErrorCode::negative_entry: return GLC_ERR_NEGATIVE_ENTRY;
    case ErrorCode::order_too_small: return GLC_ERR_ORDER_TOO_SMALL;
    case ErrorCode::length_mismatch: return GLC_ERR_LENGTH_MISMATCH;
    case ErrorCode::hypothesis_violation: return GLC_ERR_HYPOTHESIS;
    case ErrorCode::endpoint_mismatch: return GLC_ERR_ENDPOINT_MISMATCH;
    case ErrorCode::cap_exceeded: return GLC_ERR_CAP_EXCEEDED;
    case ErrorCode::invariant_violation: return GLC_ERR_INVARIANT;
  }
  return GLC_ERR_INTERNAL;
}

template <typename Fn>
glc_status guard(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return GLC_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown exception";
  }
  return GLC_ERR_INTERNAL;
}

glc_status null_argument(const char* name) {
  last_error = std::string("argument '") + name + "' is NULL";
  return GLC_ERR_NULL_ARGUMENT;
}

#define GLC_REQUIRE(arg) \
  if (!(arg)) return null_argument(#arg)

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Parity parity_of(glc_parity p) { return p == GLC_ODD ? Parity::odd : Parity::even; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string sweep_text(const SweepSummary& s) {
  std::ostringstream os;
  os << "sweep " << s.name << " (n_max=" << s.n_max << ")\n";
  for (const SweepCheck& c : s.checks) {
    os << "  " << (c.passed() ? "PASS" : "FAIL") << "  " << c.name << "  "
       << c.failures << "/" << c.cases << " failures";
    if (c.failures) os << "  first: " << c.first_failure;
    os << "\n";
  }
  os << (s.passed() ? "all checks passed\n" : "some checks failed\n");
  return os.str();
}

}  // namespace

extern "C" {

const char* glc_version(void) { return "1.0.0"; }

const char* glc_status_name(glc_status status) {
  switch (status) {
    case GLC_OK: return "ok";
    case GLC_ERR_PARSE: return to_string(ErrorCode::parse);
    case GLC_ERR_RANGE: return to_string(ErrorCode::range);
    case GLC_ERR_SYMMETRY: return to_string(ErrorCode::symmetry_violation);
    case GLC_ERR_NEGATIVE_ENTRY: return to_string(ErrorCode::negative_entry);
    case GLC_ERR_ORDER_TOO_SMALL: return to_string(ErrorCode::order_too_small);
    case GLC_ERR_LENGTH_MISMATCH: return to_string(ErrorCode::length_mismatch);
    case GLC_ERR_HYPOTHESIS: return to_string(ErrorCode::hypothesis_violation);
    case GLC_ERR_ENDPOINT_MISMATCH: return to_string(ErrorCode::endpoint_mismatch);
    case GLC_ERR_CAP_EXCEEDED: return to_string(ErrorCode::cap_exceeded);
    case GLC_ERR_INVARIANT: return to_string(ErrorCode::invariant_violation);
    case GLC_ERR_NULL_ARGUMENT: return "null argument";
    case GLC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* glc_last_error(void) { return last_error.c_str(); }

void glc_string_free(char* s) { std::free(s); }

glc_status glc_seq_parse(const char* text, glc_seq** out) {
  GLC_REQUIRE(text);
  GLC_REQUIRE(out);
  return guard([&] { *out = new glc_seq{parse_rational_list(text)}; });
}

glc_status glc_seq_parse_json(const char* text, long* n_out, glc_seq** out) {
  GLC_REQUIRE(text);
  GLC_REQUIRE(n_out);
  GLC_REQUIRE(out);
  return guard([&] {
    CoeffDocument d = parse_coeff_document(text);
    *n_out = d.n;
    *out = new glc_seq{std::move(d.coeffs)};
  });
}

size_t glc_seq_length(const glc_seq* seq) { return seq ? seq->values.size() : 0; }

glc_status glc_seq_get(const glc_seq* seq, size_t index, char** out) {
  GLC_REQUIRE(seq);
  GLC_REQUIRE(out);
  return guard([&] {
    if (index >= seq->values.size())
      throw Error(ErrorCode::range, "index " + std::to_string(index) +
                                        " past length " +
                                        std::to_string(seq->values.size()));
    *out = duplicate(to_string(seq->values[index]));
  });
}

glc_status glc_seq_to_string(const glc_seq* seq, char** out) {
  GLC_REQUIRE(seq);
  GLC_REQUIRE(out);
  return guard([&] { *out = duplicate(join(seq->values, ",")); });
}

void glc_seq_free(glc_seq* seq) { delete seq; }

glc_status glc_poly_new(long n, const glc_seq* coeffs, glc_poly** out) {
  GLC_REQUIRE(coeffs);
  GLC_REQUIRE(out);
  return guard([&] { *out = new glc_poly{SymmetricPolynomial(n, coeffs->values)}; });
}

glc_status glc_gamma_new(long n, const glc_seq* coeffs, glc_gamma** out) {
  GLC_REQUIRE(coeffs);
  GLC_REQUIRE(out);
  return guard([&] { *out = new glc_gamma{GammaVector(n, coeffs->values)}; });
}

glc_status glc_gamma_to_poly(const glc_gamma* gamma, glc_poly** out) {
  GLC_REQUIRE(gamma);
  GLC_REQUIRE(out);
  return guard([&] { *out = new glc_poly{gamma_to_h(gamma->value)}; });
}

glc_status glc_poly_to_gamma(const glc_poly* poly, glc_gamma** out) {
  GLC_REQUIRE(poly);
  GLC_REQUIRE(out);
  return guard([&] { *out = new glc_gamma{h_to_gamma(poly->value)}; });
}

glc_status glc_poly_coeffs(const glc_poly* poly, glc_seq** out) {
  GLC_REQUIRE(poly);
  GLC_REQUIRE(out);
  return guard([&] { *out = new glc_seq{{poly->value.coeffs().begin(), poly->value.coeffs().end()}}; });
}

glc_status glc_gamma_coeffs(const glc_gamma* gamma, glc_seq** out) {
  GLC_REQUIRE(gamma);
  GLC_REQUIRE(out);
  return guard([&] { *out = new glc_seq{{gamma->value.coeffs().begin(), gamma->value.coeffs().end()}}; });
}

glc_status glc_poly_json(const glc_poly* poly, char** out) {
  GLC_REQUIRE(poly);
  GLC_REQUIRE(out);
  return guard([&] { *out = duplicate(to_json(poly->value)); });
}

glc_status glc_gamma_json(const glc_gamma* gamma, char** out) {
  GLC_REQUIRE(gamma);
  GLC_REQUIRE(out);
  return guard([&] { *out = duplicate(to_json(gamma->value)); });
}

void glc_poly_free(glc_poly* poly) { delete poly; }
void glc_gamma_free(glc_gamma* gamma) { delete gamma; }

glc_status glc_render_h_in_gamma(long n, char** out) {
  GLC_REQUIRE(out);
  return guard([&] {
    if (n < 0) throw Error(ErrorCode::range, "n must be nonnegative");
    *out = duplicate(render_h_in_gamma(n));
  });
}

glc_status glc_check_sequence(glc_predicate predicate, const glc_seq* seq,
                              long order, int* verdict, size_t witness[3],
                              size_t* witness_len, char** json) {
  GLC_REQUIRE(seq);
  GLC_REQUIRE(verdict);
  GLC_REQUIRE(witness);
  GLC_REQUIRE(witness_len);
  return guard([&] {
    const std::vector<BigRat>& a = seq->values;
    SequenceReport report;
    switch (predicate) {
      case GLC_LOG_CONCAVE: report = is_log_concave(a); break;
      case GLC_ULTRA_LOG_CONCAVE: report = is_ultra_log_concave(a, order); break;
      case GLC_UNIMODAL: report = is_unimodal(a); break;
      case GLC_INTERNAL_ZEROS: report = has_internal_zeros(a); break;
      case GLC_PAIRWISE_LOG_CONCAVE: report = pairwise_lc(a); break;
      default: throw Error(ErrorCode::range, "unknown predicate");
    }
    *verdict = report.verdict ? 1 : 0;
    *witness_len = 0;
    if (report.witness)
      for (std::size_t idx : *report.witness)
        if (*witness_len < 3) witness[(*witness_len)++] = idx;
    if (json) *json = duplicate(to_json(report));
  });
}

glc_status glc_main_theorem(const glc_gamma* gamma, int* hypothesis,
                            int* conclusion, char** json) {
  GLC_REQUIRE(gamma);
  GLC_REQUIRE(hypothesis);
  GLC_REQUIRE(conclusion);
  return guard([&] {
    const MainTheoremRecord rec = check_main_theorem(gamma->value);
    *hypothesis = rec.hypothesis();
    *conclusion = rec.conclusion();
    if (json) *json = duplicate(to_json(rec));
  });
}

glc_status glc_ultra_transfer(const glc_gamma* gamma, int* hypothesis,
                              int* conclusion, char** json) {
  GLC_REQUIRE(gamma);
  GLC_REQUIRE(hypothesis);
  GLC_REQUIRE(conclusion);
  return guard([&] {
    const UltraTransferRecord rec = check_ultra_transfer(gamma->value);
    *hypothesis = rec.hypothesis();
    *conclusion = rec.conclusion();
    if (json) *json = duplicate(to_json(rec));
  });
}

glc_status glc_coeff(long n, long i, long j, long k, char** out) {
  GLC_REQUIRE(out);
  return guard([&] { *out = duplicate(to_string(c_coeff(n, i, j, k))); });
}

glc_status glc_coeff_oracle(long n, long i, long j, long k, char** out) {
  GLC_REQUIRE(out);
  return guard([&] { *out = duplicate(to_string(c_coeff_oracle(n, i, j, k))); });
}

glc_status glc_coeff_table_new(long n, long i, glc_coeff_table** out) {
  GLC_REQUIRE(out);
  return guard([&] { *out = new glc_coeff_table{coeff_table(n, i)}; });
}

glc_status glc_coeff_table_at(const glc_coeff_table* table, long j, long k,
                              char** out) {
  GLC_REQUIRE(table);
  GLC_REQUIRE(out);
  return guard([&] { *out = duplicate(to_string(table->value.at(j, k))); });
}

glc_status glc_coeff_table_render(const glc_coeff_table* table,
                                  glc_table_layout layout, char** out) {
  GLC_REQUIRE(table);
  GLC_REQUIRE(out);
  return guard([&] {
    *out = duplicate(layout == GLC_TABLE_REGROUPED
                         ? render_regrouped(table->value)
                         : render_coeff_table(table->value,
                                              layout == GLC_TABLE_COMPACT));
  });
}

glc_status glc_coeff_table_json(const glc_coeff_table* table, char** out) {
  GLC_REQUIRE(table);
  GLC_REQUIRE(out);
  return guard([&] { *out = duplicate(to_json(table->value)); });
}

void glc_coeff_table_free(glc_coeff_table* table) { delete table; }

glc_status glc_diagonal(long n, long i, long ell, glc_parity parity,
                        int* tail_sign_ok, glc_format format, char** out) {
  GLC_REQUIRE(tail_sign_ok);
  GLC_REQUIRE(out);
  return guard([&] {
    const DiagonalSequence seq = diagonal(n, i, ell, parity_of(parity));
    *tail_sign_ok = seq.tail_sign_ok();
    *out = duplicate(format == GLC_FORMAT_JSON ? to_json(seq)
                                               : render_diagonal(seq) + "\n");
  });
}

glc_status glc_quadratic(long n, long i, long ell, glc_parity parity,
                         glc_format format, char** out) {
  GLC_REQUIRE(out);
  return guard([&] {
    const QuadraticAB ab = quadratic_ab(n, i, ell, parity_of(parity));
    if (format == GLC_FORMAT_JSON) {
      *out = duplicate(to_json(ab, n, i, ell));
      return;
    }
    const std::string var = parity == GLC_ODD ? "(2j+1)^2" : "j^2";
    *out = duplicate("A = " + to_string(ab.a) + "\nB = " + to_string(ab.b) +
                     "\nsign follows A " + var + " + B\n");
  });
}

glc_status glc_identity(long n, long i, long ell, long j, glc_parity parity,
                        int* holds, glc_format format, char** out) {
  GLC_REQUIRE(holds);
  GLC_REQUIRE(out);
  return guard([&] {
    const IdentityCheck check =
        rational_identity_check(n, i, ell, j, parity_of(parity));
    *holds = check.holds;
    *out = duplicate(format == GLC_FORMAT_JSON
                         ? to_json(check)
                         : "direct   = " + to_string(check.direct) +
                               "\nfactored = " + to_string(check.factored) +
                               "\nholds: " + yes_no(check.holds) + "\n");
  });
}

glc_status glc_abel(const glc_seq* a, const glc_seq* b, int* ok,
                    glc_format format, char** out) {
  GLC_REQUIRE(a);
  GLC_REQUIRE(b);
  GLC_REQUIRE(ok);
  GLC_REQUIRE(out);
  return guard([&] {
    const AbelResult r = abel_sum_check(a->values, b->values);
    *ok = r.weighted_sum >= 0 && r.identity_holds && r.prefix_unimodal &&
          r.prefix_nonnegative;
    if (format == GLC_FORMAT_JSON) {
      *out = duplicate(to_json(r));
      return;
    }
    *out = duplicate("sum a_t b_t = " + to_string(r.weighted_sum) +
                     "\nby parts    = " + to_string(r.by_parts) +
                     "\nprefix sums = " + join(r.prefix_sums, ", ") +
                     "\nidentity: " + yes_no(r.identity_holds) +
                     "  prefix unimodal: " + yes_no(r.prefix_unimodal) +
                     "  prefix nonnegative: " + yes_no(r.prefix_nonnegative) +
                     "\n");
  });
}

glc_status glc_r_sum(long n, long i, long r, char** out) {
  GLC_REQUIRE(out);
  return guard([&] { *out = duplicate(to_string(r_sum(n, i, r))); });
}

glc_status glc_count_paths(long x0, long y0, long x1, long y1, char** out) {
  GLC_REQUIRE(out);
  return guard([&] { *out = duplicate(to_string(count_paths({x0, y0}, {x1, y1}))); });
}

glc_status glc_enumerate_paths(long x0, long y0, long x1, long y1, uint64_t cap,
                               glc_path_visitor visit, void* context) {
  GLC_REQUIRE(visit);
  return guard([&] {
    PathStream stream({x0, y0}, {x1, y1}, cap);
    while (auto path = stream.next())
      if (visit(path->to_string().c_str(), context)) break;
  });
}

glc_status glc_formula_sums(long n, long i, long r, glc_format format,
                            char** out) {
  GLC_REQUIRE(out);
  return guard([&] {
    const SegmentConfig cfg = make_config(n, i, r);
    const BigInt lhs = lhs_by_formula(cfg), rhs = rhs_by_formula(cfg);
    const BigInt diff = lhs - rhs;
    std::optional<BigInt> rs;
    if (i >= 1) rs = r_sum(n, i, r);
    if (format == GLC_FORMAT_JSON) {
      nlohmann::ordered_json j;
      j["schema"] = kSchemaVersion;
      j["n"] = n;
      j["i"] = i;
      j["r"] = r;
      j["lhs"] = to_string(lhs);
      j["rhs"] = to_string(rhs);
      j["difference"] = to_string(diff);
      j["r_sum"] = rs ? nlohmann::ordered_json(to_string(*rs)) : nullptr;
      *out = duplicate(j.dump());
      return;
    }
    std::string text = "LHS=" + to_string(lhs) + " RHS=" + to_string(rhs) +
                       " LHS-RHS=" + to_string(diff) + "\n";
    if (rs) text += "r_sum=" + to_string(*rs) + "\n";
    *out = duplicate(text);
  });
}

glc_status glc_path_sums(long n, long i, long r, uint64_t cap,
                         glc_format format, char** out) {
  GLC_REQUIRE(out);
  return guard([&] {
    const SegmentConfig cfg = make_config(n, i, r);
    const BigInt lf = lhs_by_formula(cfg), rf = rhs_by_formula(cfg);
    const BigInt lp = lhs_by_paths(cfg, cap), rp = rhs_by_paths(cfg, cap);
    if (format == GLC_FORMAT_JSON) {
      nlohmann::ordered_json j;
      j["schema"] = kSchemaVersion;
      j["n"] = n;
      j["i"] = i;
      j["r"] = r;
      j["lhs_formula"] = to_string(lf);
      j["lhs_paths"] = to_string(lp);
      j["rhs_formula"] = to_string(rf);
      j["rhs_paths"] = to_string(rp);
      *out = duplicate(j.dump());
      return;
    }
    *out = duplicate("LHS formula=" + to_string(lf) + " paths=" + to_string(lp) +
                     "\nRHS formula=" + to_string(rf) + " paths=" +
                     to_string(rp) + "\n");
  });
}

glc_status glc_claim1(long n, long i, long r, uint64_t cap, int* holds,
                      glc_format format, char** out) {
  GLC_REQUIRE(holds);
  GLC_REQUIRE(out);
  return guard([&] {
    const Claim1Report rep = claim1_check(make_config(n, i, r), cap);
    *holds = rep.holds;
    if (format == GLC_FORMAT_JSON) {
      *out = duplicate(to_json(rep));
      return;
    }
    std::string text = "claim 1: " + std::string(rep.holds ? "holds" : "FAILS") +
                       " (" + std::to_string(rep.paths) + " paths, " +
                       std::to_string(rep.paths_meeting_pq_prime) +
                       " meet P'Q')\n";
    if (rep.counterexample)
      text += "counterexample: " + rep.counterexample->to_string() + "\n";
    *out = duplicate(text);
  });
}

glc_status glc_claim2(long n, long i, long r, uint64_t cap, int* holds,
                      glc_format format, char** out) {
  GLC_REQUIRE(holds);
  GLC_REQUIRE(out);
  return guard([&] {
    const Claim2Report rep = claim2_check(make_config(n, i, r), cap);
    *holds = rep.holds();
    if (format == GLC_FORMAT_JSON) {
      *out = duplicate(to_json(rep));
      return;
    }
    std::ostringstream os;
    os << "claim 2: " << (rep.holds() ? "holds" : "FAILS") << " ("
       << rep.rectangles.size() << " rectangles)\n";
    for (const Claim2Rectangle& rect : rep.rectangles)
      os << "  R=" << to_string(rect.r) << " R'=" << to_string(rect.r_prime)
         << " paths=" << rect.paths << " PQ=" << to_string(rect.pq_sum)
         << " P'Q'=" << to_string(rect.pq_prime_sum)
         << (rect.holds() ? "" : "  FAIL") << "\n";
    *out = duplicate(os.str());
  });
}

glc_status glc_involution(long x0, long y0, long x1, long y1, const char* steps,
                          char** out) {
  GLC_REQUIRE(steps);
  GLC_REQUIRE(out);
  return guard([&] {
    const LatticePath path = LatticePath::parse({x0, y0}, steps);
    *out = duplicate(involution(path, {x0, y0}, {x1, y1}).to_string());
  });
}

glc_status glc_render_grid(long n, long i, long r, const char* steps,
                           char** out) {
  GLC_REQUIRE(out);
  return guard([&] {
    const SegmentConfig cfg = make_config(n, i, r);
    std::optional<LatticePath> path;
    if (steps) {
      path = LatticePath::parse(cfg.origin, steps);
      if (path->end() != cfg.target)
        throw Error(ErrorCode::endpoint_mismatch,
                    "path ends at " + to_string(path->end()) + ", expected D=" +
                        to_string(cfg.target));
    }
    *out = duplicate(render_grid(cfg, path));
  });
}

glc_status glc_certificate_new(long n, long i, long r, uint64_t cap,
                               int collect_paths, glc_certificate** out) {
  GLC_REQUIRE(out);
  return guard([&] {
    *out = new glc_certificate{
        certificate(make_config(n, i, r), cap, collect_paths != 0)};
  });
}

glc_status glc_certificate_certifies(const glc_certificate* cert,
                                     int* certifies) {
  GLC_REQUIRE(cert);
  GLC_REQUIRE(certifies);
  *certifies = cert->value.certifies_formula();
  return GLC_OK;
}

glc_status glc_certificate_render(const glc_certificate* cert, int ascii,
                                  char** out) {
  GLC_REQUIRE(cert);
  GLC_REQUIRE(out);
  return guard([&] { *out = duplicate(render_certificate(cert->value, ascii != 0)); });
}

glc_status glc_certificate_json(const glc_certificate* cert, char** out) {
  GLC_REQUIRE(cert);
  GLC_REQUIRE(out);
  return guard([&] { *out = duplicate(to_json(cert->value)); });
}

void glc_certificate_free(glc_certificate* cert) { delete cert; }

glc_status glc_sweep(const char* kind, long n_max, uint64_t cap, int* passed,
                     glc_format format, char** out) {
  GLC_REQUIRE(kind);
  GLC_REQUIRE(passed);
  GLC_REQUIRE(out);
  return guard([&] {
    const std::string k = kind;
    SweepSummary s;
    if (k == "coefficients") s = sweep_coefficients(n_max);
    else if (k == "diagonals") s = sweep_diagonals(n_max);
    else if (k == "r-sums") s = sweep_r_sums(n_max);
    else if (k == "paths") s = sweep_paths(n_max, cap);
    else if (k == "main-theorem") s = sweep_main_theorem(n_max);
    else if (k == "ultra-transfer") s = sweep_ultra_transfer(n_max);
    else if (k == "abel") s = sweep_abel();
    else if (k == "predicates") s = sweep_predicates(n_max);
    else throw Error(ErrorCode::parse, "unknown sweep '" + k + "'");
    *passed = s.passed();
    *out = duplicate(format == GLC_FORMAT_JSON ? to_json(s) : sweep_text(s));
  });
}

}  // extern "C"
