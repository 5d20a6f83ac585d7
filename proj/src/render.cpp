#include "gammalc/render.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

namespace gammalc {

namespace {

std::string monomial(long j, long k) {
  if (j == k) return "g" + std::to_string(j) + "^2";
  return "g" + std::to_string(j) + " g" + std::to_string(k);
}

// "c mono" with the sign carried separately; unit coefficients are dropped.
std::string scaled(const BigInt& magnitude, const std::string& body) {
  if (magnitude == 1) return body;
  return to_string(magnitude) + " " + body;
}

void append_term(std::string& out, bool first, const BigInt& c,
                 const std::string& body) {
  const bool negative = sgn(c) < 0;
  const BigInt mag = abs(c);
  if (first)
    out += (negative ? "-" : "") + scaled(mag, body);
  else
    out += (negative ? " - " : " + ") + scaled(mag, body);
}

std::string header(long i) {
  return "h_" + std::to_string(i) + "^2 - h_" + std::to_string(i - 1) + " h_" +
         std::to_string(i + 1) + " = ";
}

}  // namespace

std::string render_h_in_gamma(long n) {
  std::string out;
  for (long i = 0; i <= n / 2; ++i) {
    out += "h_" + std::to_string(i);
    if (n - i != i) out += " = h_" + std::to_string(n - i);
    out += " = ";
    bool first = true;
    for (long j = 0; j <= i; ++j) {
      BigInt c = binomial(n - 2 * j, i - j);
      if (c == 0) continue;
      append_term(out, first, c, "g" + std::to_string(j));
      first = false;
    }
    if (first) out += "0";
    out += "\n";
  }
  return out;
}

std::string render_coeff_table(const CoeffTable& table, bool compact) {
  const long top = table.max_index();
  const std::string lead = header(table.i());
  const std::string pad(lead.size(), ' ');
  std::string out;
  bool first_row = true;
  for (long s = 0; s <= 2 * top; ++s) {
    std::vector<std::pair<long, long>> pairs;
    bool any = false;
    for (long j = s / 2; j >= 0 && s - j <= top; --j) {
      pairs.emplace_back(j, s - j);
      if (table.at(j, s - j) != 0) any = true;
    }
    if (!any) continue;
    std::string row;
    bool first_term = true;
    for (auto [j, k] : pairs) {
      BigInt c = table.at(j, k);
      if (c == 0 && compact) continue;
      if (first_term && !first_row) {
        row += sgn(c) < 0 ? "- " : "+ ";
        row += c == 0 ? "0 " + monomial(j, k) : scaled(abs(c), monomial(j, k));
      } else if (c == 0) {
        row += (first_term ? "" : " + ") + std::string("0 ") + monomial(j, k);
      } else {
        append_term(row, first_term, c, monomial(j, k));
      }
      first_term = false;
    }
    out += (first_row ? lead : pad) + row + "\n";
    first_row = false;
  }
  if (first_row) out = lead + "0\n";
  return out;
}

std::string render_regrouped(const CoeffTable& table) {
  const long top = table.max_index();
  const std::string lead = header(table.i());
  const std::string pad(lead.size(), ' ');
  const auto rows = regroup(table);
  std::string out;
  bool first_row = true;
  for (std::size_t s = 0; s < rows.size(); ++s) {
    const auto& row = rows[s];
    if (row.empty()) continue;
    long width = 0;
    for (long j = static_cast<long>(s) / 2; j >= 0 && static_cast<long>(s) - j <= top; --j)
      ++width;
    const bool bracket = width > 1;
    std::string body;
    for (std::size_t t = 0; t < row.size(); ++t) {
      const RegroupedTerm& term = row[t];
      std::string mono = monomial(term.plus.first, term.plus.second);
      if (term.minus) {
        mono += " - " + monomial(term.minus->first, term.minus->second);
        const bool bare = abs(term.coefficient) == 1 && row.size() == 1;
        if (!bare) mono = "(" + mono + ")";
      }
      append_term(body, t == 0, term.coefficient, mono);
    }
    if (bracket) body = "[" + body + "]";
    out += first_row ? lead : pad + "+ ";
    out += body + "\n";
    first_row = false;
  }
  if (first_row) out = lead + "0\n";
  return out;
}

std::string render_diagonal(const DiagonalSequence& seq) {
  std::string out;
  for (std::size_t t = 0; t < seq.values.size(); ++t) {
    if (t) out += " ";
    out += to_string(seq.values[t]);
  }
  out += seq.tail_sign_ok() ? " | tail-sign: OK" : " | tail-sign: FAIL";
  return out;
}

std::string render_grid(const SegmentConfig& cfg,
                        const std::optional<LatticePath>& path) {
  const long width = std::max({cfg.target.x, cfg.q.x, cfg.q_prime.x, 0L});
  const long height = std::max({cfg.target.y, cfg.q.y, 0L});
  const DiagonalSegment pq = cfg.pq();
  const DiagonalSegment pq_prime = cfg.pq_prime();
  std::set<LatticePoint> on_path;
  if (path)
    for (LatticePoint v : path->vertices()) on_path.insert(v);
  std::string out;
  for (long y = height; y >= 0; --y) {
    std::string line = (y < 10 ? " " : "") + std::to_string(y) + " ";
    for (long x = 0; x <= width; ++x) {
      const LatticePoint p{x, y};
      const bool hit = on_path.count(p) > 0;
      char c = '.';
      if (pq.contains(p))
        c = hit ? 'O' : 'o';
      else if (pq_prime.contains(p))
        c = hit ? 'X' : 'x';
      else if (hit)
        c = '#';
      else if (p == cfg.target)
        c = 'D';
      line += ' ';
      line += c;
    }
    out += line + "\n";
  }
  out += "   ";
  for (long x = 0; x <= width; ++x) out += " " + std::to_string(x % 10);
  out += "\n";
  return out;
}

std::string render_certificate(const Certificate& cert, bool ascii) {
  const SegmentConfig cfg = make_config(cert.n, cert.i, cert.r);
  std::ostringstream os;
  os << "certificate n=" << cert.n << " i=" << cert.i << " r=" << cert.r << "\n";
  os << "  O=" << to_string(cfg.origin) << " D=" << to_string(cfg.target)
     << " P=" << to_string(cfg.p) << " Q=" << to_string(cfg.q)
     << " P'=" << to_string(cfg.p_prime) << " Q'=" << to_string(cfg.q_prime)
     << "\n";
  os << "  binomial sums: LHS=" << to_string(cert.lhs)
     << " RHS=" << to_string(cert.rhs)
     << " LHS-RHS=" << to_string(BigInt(cert.lhs - cert.rhs)) << "\n";
  os << "  path sums:     LHS=" << to_string(cert.lhs_paths)
     << " RHS=" << to_string(cert.rhs_paths) << "\n";
  os << "  paths O->D: " << cert.paths << "\n";
  os << "  avoiding P'Q': " << to_string(cert.avoiding_term) << " from "
     << cert.avoiding_paths << " paths\n";
  BigInt boundary = 0;
  for (const BoundaryTerm& t : cert.boundary_terms) {
    boundary += t.count;
    os << "  boundary R=" << to_string(t.r) << " R'=" << to_string(t.r_prime)
       << ": " << to_string(t.count) << " (" << t.paths << " paths, "
       << "prefixes " << to_string(t.prefix_paths) << " x suffix weight "
       << to_string(t.suffix_weight) << ")\n";
  }
  os << "  total " << to_string(cert.total) << " = "
     << to_string(cert.avoiding_term) << " + " << to_string(boundary) << "\n";
  os << "  " << cert.contributing_paths << " contributing paths\n";
  os << "  certifies LHS-RHS: " << (cert.certifies_formula() ? "yes" : "no")
     << "\n";
  if (ascii) os << "\n" << render_grid(cfg);
  return os.str();
}

}  // namespace gammalc
