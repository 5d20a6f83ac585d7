#include "gammalc/json_io.hpp"

#include <string>

#include "gammalc/error.hpp"
#include "json.hpp"

namespace gammalc {

namespace {

using json = nlohmann::ordered_json;

json doc() {
  json j;
  j["schema"] = kSchemaVersion;
  return j;
}

json rationals(std::span<const BigRat> values) {
  json out = json::array();
  for (const BigRat& v : values) out.push_back(to_string(v));
  return out;
}

json point(LatticePoint p) { return json::array({p.x, p.y}); }

std::string dump(const json& j) { return j.dump(); }

json report_body(const SequenceReport& report) {
  json j;
  j["predicate"] = to_string(report.kind);
  j["verdict"] = report.verdict;
  j["witness"] = report.witness ? json(*report.witness) : json(nullptr);
  return j;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t t = 0; t < byte && t < text.size(); ++t) {
    if (text[t] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

CoeffDocument parse_coeff_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte points one past the offending character.
    auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw Error(ErrorCode::parse, "line " + std::to_string(line) + ", column " +
                                      std::to_string(column) +
                                      ": malformed JSON");
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw Error(ErrorCode::parse, "expected an object with integer field \"n\"");
  if (!j.contains("coeffs") || !j["coeffs"].is_array())
    throw Error(ErrorCode::parse, "expected array field \"coeffs\"");
  CoeffDocument out{j["n"].get<long>(), {}};
  std::size_t index = 0;
  for (const json& item : j["coeffs"]) {
    if (item.is_string())
      out.coeffs.push_back(parse_rational(item.get<std::string>()));
    else if (item.is_number_integer())
      out.coeffs.push_back(BigRat(item.dump()));
    else
      throw Error(ErrorCode::parse, "coeffs[" + std::to_string(index) +
                                        "] is neither a string nor an integer");
    ++index;
  }
  return out;
}

std::string to_json(long n, std::span<const BigRat> coeffs) {
  json j = doc();
  j["n"] = n;
  j["coeffs"] = rationals(coeffs);
  return dump(j);
}

std::string to_json(const SymmetricPolynomial& poly) {
  return to_json(poly.n(), poly.coeffs());
}

std::string to_json(const GammaVector& gamma) {
  return to_json(gamma.n(), gamma.coeffs());
}

std::string to_json(const SequenceReport& report) {
  json j = doc();
  j.update(report_body(report));
  return dump(j);
}

std::string to_json(const MainTheoremRecord& record) {
  json j = doc();
  j["h"] = rationals(record.h.coeffs());
  j["gamma_log_concave"] = record.gamma_log_concave;
  j["gamma_no_internal_zeros"] = record.gamma_no_internal_zeros;
  j["h_log_concave"] = record.h_log_concave;
  j["h_no_internal_zeros"] = record.h_no_internal_zeros;
  j["hypothesis"] = record.hypothesis();
  j["conclusion"] = record.conclusion();
  j["violation"] = record.violation();
  return dump(j);
}

std::string to_json(const UltraTransferRecord& record) {
  json j = doc();
  j["h"] = rationals(record.h.coeffs());
  j["gamma_ultra_log_concave"] = record.gamma_ulc;
  j["gamma_no_internal_zeros"] = record.gamma_no_internal_zeros;
  j["h_ultra_log_concave"] = record.h_ulc;
  j["h_no_internal_zeros"] = record.h_no_internal_zeros;
  j["hypothesis"] = record.hypothesis();
  j["conclusion"] = record.conclusion();
  j["violation"] = record.violation();
  return dump(j);
}

std::string to_json(const CoeffTable& table) {
  json j = doc();
  j["n"] = table.n();
  j["i"] = table.i();
  json entries = json::array();
  for (const auto& [key, c] : table.entries())
    entries.push_back(json::array({key.first, key.second, to_string(c)}));
  j["entries"] = std::move(entries);
  return dump(j);
}

std::string to_json(const DiagonalSequence& seq) {
  json j = doc();
  j["n"] = seq.n;
  j["i"] = seq.i;
  j["ell"] = seq.ell;
  j["parity"] = to_string(seq.parity);
  json values = json::array();
  for (const BigInt& v : seq.values) values.push_back(to_string(v));
  j["values"] = std::move(values);
  auto neg = seq.first_negative();
  j["first_negative"] = neg ? json(*neg) : json(nullptr);
  j["tail_sign_ok"] = seq.tail_sign_ok();
  return dump(j);
}

std::string to_json(const QuadraticAB& ab, long n, long i, long ell) {
  json j = doc();
  j["n"] = n;
  j["i"] = i;
  j["ell"] = ell;
  j["parity"] = to_string(ab.parity);
  j["A"] = to_string(ab.a);
  j["B"] = to_string(ab.b);
  return dump(j);
}

std::string to_json(const IdentityCheck& check) {
  json j = doc();
  j["holds"] = check.holds;
  j["direct"] = to_string(check.direct);
  j["factored"] = to_string(check.factored);
  return dump(j);
}

std::string to_json(const AbelResult& result) {
  json j = doc();
  j["weighted_sum"] = to_string(result.weighted_sum);
  j["by_parts"] = to_string(result.by_parts);
  j["prefix_sums"] = rationals(result.prefix_sums);
  j["identity_holds"] = result.identity_holds;
  j["prefix_unimodal"] = result.prefix_unimodal;
  j["prefix_nonnegative"] = result.prefix_nonnegative;
  return dump(j);
}

std::string to_json(const Claim1Report& report) {
  json j = doc();
  j["paths"] = report.paths;
  j["paths_meeting_pq_prime"] = report.paths_meeting_pq_prime;
  j["holds"] = report.holds;
  j["counterexample"] = report.counterexample
                            ? json(report.counterexample->to_string())
                            : json(nullptr);
  return dump(j);
}

std::string to_json(const Claim2Report& report) {
  json j = doc();
  j["holds"] = report.holds();
  json rects = json::array();
  for (const Claim2Rectangle& r : report.rectangles) {
    json x;
    x["R"] = point(r.r);
    x["R_prime"] = point(r.r_prime);
    x["paths"] = r.paths;
    x["pq_sum"] = to_string(r.pq_sum);
    x["pq_prime_sum"] = to_string(r.pq_prime_sum);
    x["involution_bijective"] = r.involution_bijective;
    x["involution_transports"] = r.involution_transports;
    x["holds"] = r.holds();
    rects.push_back(std::move(x));
  }
  j["rectangles"] = std::move(rects);
  return dump(j);
}

std::string to_json(const Certificate& cert) {
  json j = doc();
  j["n"] = cert.n;
  j["i"] = cert.i;
  j["r"] = cert.r;
  j["lhs"] = to_string(cert.lhs);
  j["rhs"] = to_string(cert.rhs);
  j["lhs_paths"] = to_string(cert.lhs_paths);
  j["rhs_paths"] = to_string(cert.rhs_paths);
  j["paths"] = cert.paths;
  j["avoiding_term"] = to_string(cert.avoiding_term);
  j["avoiding_paths"] = cert.avoiding_paths;
  json terms = json::array();
  for (const BoundaryTerm& t : cert.boundary_terms) {
    json x;
    x["R"] = point(t.r);
    x["R_prime"] = point(t.r_prime);
    x["count"] = to_string(t.count);
    x["paths"] = t.paths;
    x["prefix_paths"] = to_string(t.prefix_paths);
    x["suffix_weight"] = to_string(t.suffix_weight);
    terms.push_back(std::move(x));
  }
  j["boundary_terms"] = std::move(terms);
  j["total"] = to_string(cert.total);
  j["contributing_paths"] = cert.contributing_paths;
  j["certifies_formula"] = cert.certifies_formula();
  if (!cert.contributions.empty()) {
    json paths = json::array();
    for (const PathContribution& c : cert.contributions)
      paths.push_back({{"path", c.path.to_string()},
                       {"amount", c.amount},
                       {"avoids_pq_prime", c.avoids_pq_prime}});
    j["contributions"] = std::move(paths);
  }
  return dump(j);
}

std::string to_json(const SweepSummary& summary) {
  json j = doc();
  j["sweep"] = summary.name;
  j["n_max"] = summary.n_max;
  j["passed"] = summary.passed();
  json checks = json::array();
  for (const SweepCheck& c : summary.checks) {
    json x;
    x["name"] = c.name;
    x["cases"] = c.cases;
    x["failures"] = c.failures;
    x["first_failure"] = c.failures ? json(c.first_failure) : json(nullptr);
    checks.push_back(std::move(x));
  }
  j["checks"] = std::move(checks);
  return dump(j);
}

}  // namespace gammalc
