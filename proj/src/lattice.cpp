#include "gammalc/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "gammalc/error.hpp"

namespace gammalc {

std::string to_string(LatticePoint p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

LatticePath LatticePath::parse(LatticePoint start, std::string_view steps) {
  std::vector<Step> out;
  out.reserve(steps.size());
  for (std::size_t t = 0; t < steps.size(); ++t) {
    switch (steps[t]) {
      case 'E': case 'e': out.push_back(Step::east); break;
      case 'N': case 'n': out.push_back(Step::north); break;
      default:
        throw Error(ErrorCode::parse, "step " + std::to_string(t + 1) +
                                          " is '" + std::string(1, steps[t]) +
                                          "', expected E or N");
    }
  }
  return LatticePath(start, std::move(out));
}

LatticePoint LatticePath::end() const {
  LatticePoint p = start_;
  for (Step s : steps_) (s == Step::east ? p.x : p.y) += 1;
  return p;
}

std::vector<LatticePoint> LatticePath::vertices() const {
  std::vector<LatticePoint> out;
  out.reserve(steps_.size() + 1);
  LatticePoint p = start_;
  out.push_back(p);
  for (Step s : steps_) {
    (s == Step::east ? p.x : p.y) += 1;
    out.push_back(p);
  }
  return out;
}

std::string LatticePath::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(s == Step::east ? 'E' : 'N');
  return out;
}

BigInt count_paths(LatticePoint from, LatticePoint to) {
  const long dx = to.x - from.x;
  const long dy = to.y - from.y;
  if (dx < 0 || dy < 0) return 0;
  return binomial(dx + dy, dy);
}

namespace {

std::vector<Step> first_steps(LatticePoint from, LatticePoint to,
                              std::uint64_t cap, bool& empty) {
  const long dx = to.x - from.x;
  const long dy = to.y - from.y;
  empty = dx < 0 || dy < 0;
  if (empty) return {};
  BigInt count = count_paths(from, to);
  if (count > BigInt(std::to_string(cap)))
    throw Error(ErrorCode::cap_exceeded,
                to_string(count) + " paths from " + to_string(from) + " to " +
                    to_string(to) + " exceed the enumeration cap of " +
                    std::to_string(cap));
  std::vector<Step> steps(static_cast<std::size_t>(dx), Step::east);
  steps.insert(steps.end(), static_cast<std::size_t>(dy), Step::north);
  return steps;
}

// Visits each path's vertex list; the buffer is reused between calls.
template <typename Visit>
void for_each_vertex_list(LatticePoint from, LatticePoint to, std::uint64_t cap,
                          Visit&& visit) {
  bool empty = false;
  std::vector<Step> steps = first_steps(from, to, cap, empty);
  if (empty) return;
  std::vector<LatticePoint> verts(steps.size() + 1);
  do {
    LatticePoint p = from;
    verts[0] = p;
    for (std::size_t t = 0; t < steps.size(); ++t) {
      (steps[t] == Step::east ? p.x : p.y) += 1;
      verts[t + 1] = p;
    }
    visit(static_cast<const std::vector<Step>&>(steps),
          static_cast<const std::vector<LatticePoint>&>(verts));
  } while (std::next_permutation(steps.begin(), steps.end()));
}

std::size_t count_on(const std::vector<LatticePoint>& verts, std::size_t from,
                     const DiagonalSegment& seg) {
  std::size_t c = 0;
  for (std::size_t t = from; t < verts.size(); ++t)
    if (seg.contains(verts[t])) ++c;
  return c;
}

}  // namespace

PathStream::PathStream(LatticePoint from, LatticePoint to, std::uint64_t cap)
    : from_(from), done_(false) {
  steps_ = first_steps(from, to, cap, done_);
}

std::optional<LatticePath> PathStream::next() {
  if (done_) return std::nullopt;
  LatticePath out(from_, steps_);
  done_ = !std::next_permutation(steps_.begin(), steps_.end());
  return out;
}

void for_each_path(LatticePoint from, LatticePoint to, std::uint64_t cap,
                   const std::function<void(const LatticePath&)>& visit) {
  PathStream stream(from, to, cap);
  while (auto path = stream.next()) visit(*path);
}

std::vector<LatticePoint> DiagonalSegment::points() const {
  std::vector<LatticePoint> out;
  for (long y = y_min; y <= y_max; ++y) out.push_back({offset + y, y});
  return out;
}

SegmentConfig make_config(long n, long i, long r) {
  if (n < 0 || i < 0 || i > n / 2 || r < 0)
    throw Error(ErrorCode::range,
                "path configuration needs n >= 0, 0 <= i <= floor(n/2), r >= 0 "
                "(n=" + std::to_string(n) + ", i=" + std::to_string(i) +
                    ", r=" + std::to_string(r) + ")");
  SegmentConfig cfg;
  cfg.n = n;
  cfg.i = i;
  cfg.r = r;
  cfg.origin = {0, 0};
  cfg.target = {2 * n - 2 * i - r, 2 * i - r};
  cfg.p = {n - 2 * i, 0};
  cfg.q = {n - i, i};
  cfg.p_prime = {n - 2 * i + 2, 0};
  cfg.q_prime = {n - i + 1, i - 1};
  return cfg;
}

std::vector<LatticePoint> segment_intersections(const LatticePath& path,
                                                const DiagonalSegment& segment) {
  std::vector<LatticePoint> out;
  for (LatticePoint p : path.vertices())
    if (segment.contains(p)) out.push_back(p);
  return out;
}

BigInt lhs_by_formula(const SegmentConfig& cfg) {
  const long n = cfg.n, i = cfg.i, r = cfg.r;
  BigInt total = 0;
  for (long j = std::max(0L, r - i); j <= std::min(i, r); ++j) {
    const long k = r - j;
    total += binomial(n - 2 * j, i - j) * binomial(n - 2 * k, i - k);
  }
  return total;
}

BigInt rhs_by_formula(const SegmentConfig& cfg) {
  const long n = cfg.n, i = cfg.i, r = cfg.r;
  BigInt total = 0;
  for (long j = std::max(0L, r - i - 1); j <= std::min(i + 1, r); ++j) {
    const long k = r - j;
    total += binomial(n - 2 * j, i - 1 - j) * binomial(n - 2 * k, i + 1 - k);
  }
  return total;
}

BigInt segment_product_sum(const SegmentConfig& cfg,
                           const DiagonalSegment& segment) {
  BigInt total = 0;
  for (LatticePoint a : segment.points())
    total += count_paths(cfg.origin, a) * count_paths(a, cfg.target);
  return total;
}

BigInt lhs_by_paths(const SegmentConfig& cfg, std::uint64_t cap) {
  std::uint64_t total = 0;
  const DiagonalSegment pq = cfg.pq();
  for_each_vertex_list(cfg.origin, cfg.target, cap,
                       [&](const auto&, const auto& verts) {
                         total += count_on(verts, 0, pq);
                       });
  return BigInt(std::to_string(total));
}

BigInt rhs_by_paths(const SegmentConfig& cfg, std::uint64_t cap) {
  std::uint64_t total = 0;
  const DiagonalSegment pq_prime = cfg.pq_prime();
  for_each_vertex_list(cfg.origin, cfg.target, cap,
                       [&](const auto&, const auto& verts) {
                         total += count_on(verts, 0, pq_prime);
                       });
  return BigInt(std::to_string(total));
}

Claim1Report claim1_check(const SegmentConfig& cfg, std::uint64_t cap) {
  Claim1Report report;
  const DiagonalSegment pq = cfg.pq();
  const DiagonalSegment pq_prime = cfg.pq_prime();
  for_each_vertex_list(
      cfg.origin, cfg.target, cap, [&](const auto& steps, const auto& verts) {
        ++report.paths;
        std::optional<LatticePoint> first_pq, last_pq_prime;
        for (LatticePoint v : verts) {
          if (!first_pq && pq.contains(v)) first_pq = v;
          if (pq_prime.contains(v)) last_pq_prime = v;
        }
        if (!last_pq_prime) return;
        ++report.paths_meeting_pq_prime;
        const bool ok = first_pq && dominated_by(*first_pq, *last_pq_prime);
        if (!ok && report.holds) {
          report.holds = false;
          report.counterexample = LatticePath(cfg.origin, steps);
        }
      });
  return report;
}

LatticePath involution(const LatticePath& path, LatticePoint from,
                       LatticePoint to) {
  if (path.start() != from || path.end() != to)
    throw Error(ErrorCode::endpoint_mismatch,
                "path runs " + to_string(path.start()) + " -> " +
                    to_string(path.end()) + ", expected " + to_string(from) +
                    " -> " + to_string(to));
  std::vector<Step> reversed(path.steps().rbegin(), path.steps().rend());
  return LatticePath(from, std::move(reversed));
}

bool Claim2Report::holds() const {
  return std::all_of(rectangles.begin(), rectangles.end(),
                     [](const Claim2Rectangle& r) { return r.holds(); });
}

Claim2Report claim2_check(const SegmentConfig& cfg, std::uint64_t cap) {
  Claim2Report report;
  const DiagonalSegment pq = cfg.pq();
  const DiagonalSegment pq_prime = cfg.pq_prime();
  for (LatticePoint r : pq.points()) {
    for (LatticePoint rp : pq_prime.points()) {
      if (!dominated_by(r, rp)) continue;
      Claim2Rectangle rect{r, rp, 0, 0, 0, true, true};
      std::set<std::vector<Step>> images;
      std::uint64_t pq_total = 0, pq_prime_total = 0;
      for_each_path(r, rp, cap, [&](const LatticePath& alpha) {
        ++rect.paths;
        const auto on_pq = segment_intersections(alpha, pq).size();
        pq_total += on_pq;
        pq_prime_total += segment_intersections(alpha, pq_prime).size();
        LatticePath image = involution(alpha, r, rp);
        if (segment_intersections(image, pq_prime).size() != on_pq)
          rect.involution_transports = false;
        if (involution(image, r, rp) != alpha) rect.involution_bijective = false;
        images.insert(image.steps());
      });
      if (images.size() != rect.paths) rect.involution_bijective = false;
      rect.pq_sum = BigInt(std::to_string(pq_total));
      rect.pq_prime_sum = BigInt(std::to_string(pq_prime_total));
      report.rectangles.push_back(std::move(rect));
    }
  }
  return report;
}

Certificate certificate(const SegmentConfig& cfg, std::uint64_t cap,
                        bool collect_paths) {
  Certificate cert;
  cert.n = cfg.n;
  cert.i = cfg.i;
  cert.r = cfg.r;
  cert.lhs = lhs_by_formula(cfg);
  cert.rhs = rhs_by_formula(cfg);
  const DiagonalSegment pq = cfg.pq();
  const DiagonalSegment pq_prime = cfg.pq_prime();

  struct Group {
    std::uint64_t count = 0;
    std::uint64_t paths = 0;
  };
  std::map<std::pair<LatticePoint, LatticePoint>, Group> groups;
  std::uint64_t lhs_paths = 0, rhs_paths = 0, avoiding = 0;
  std::optional<std::string> broken;

  for_each_vertex_list(
      cfg.origin, cfg.target, cap, [&](const auto& steps, const auto& verts) {
        ++cert.paths;
        std::optional<std::size_t> first_pq, last_pq_prime;
        std::size_t on_pq = 0, on_pq_prime = 0;
        for (std::size_t t = 0; t < verts.size(); ++t) {
          if (pq.contains(verts[t])) {
            ++on_pq;
            if (!first_pq) first_pq = t;
          }
          if (pq_prime.contains(verts[t])) {
            ++on_pq_prime;
            last_pq_prime = t;
          }
        }
        lhs_paths += on_pq;
        rhs_paths += on_pq_prime;
        long amount = 0;
        bool avoids = !last_pq_prime;
        if (avoids) {
          avoiding += on_pq;
          amount = static_cast<long>(on_pq);
          if (on_pq > 0) ++cert.avoiding_paths;
        } else {
          if (!first_pq || !dominated_by(verts[*first_pq], verts[*last_pq_prime])) {
            if (!broken)
              broken = "path " + LatticePath(cfg.origin, steps).to_string() +
                       " meets P'Q' without an earlier point of PQ";
            return;
          }
          const std::size_t suffix = count_on(verts, *last_pq_prime, pq);
          Group& g = groups[{verts[*first_pq], verts[*last_pq_prime]}];
          g.count += suffix;
          ++g.paths;
          amount = static_cast<long>(suffix);
        }
        if (amount > 0) {
          ++cert.contributing_paths;
          if (collect_paths)
            cert.contributions.push_back(
                {LatticePath(cfg.origin, steps), amount, avoids});
        }
      });
  if (broken)
    throw Error(ErrorCode::invariant_violation, "DECOMPOSITION-MISMATCH: " + *broken);

  cert.lhs_paths = BigInt(std::to_string(lhs_paths));
  cert.rhs_paths = BigInt(std::to_string(rhs_paths));
  cert.avoiding_term = BigInt(std::to_string(avoiding));
  cert.total = cert.avoiding_term;

  for (const auto& [key, g] : groups) {
    auto [r, rp] = key;
    BoundaryTerm term;
    term.r = r;
    term.r_prime = rp;
    term.count = BigInt(std::to_string(g.count));
    term.paths = g.paths;
    // alpha_1: O -> R meeting PQ only at R.
    std::uint64_t first_legs = 0;
    for_each_vertex_list(cfg.origin, r, cap, [&](const auto&, const auto& verts) {
      if (count_on(verts, 0, pq) == 1) ++first_legs;
    });
    term.prefix_paths = BigInt(std::to_string(first_legs)) * count_paths(r, rp);
    // alpha_3: R' -> D meeting P'Q' only at R'.
    std::uint64_t weight = 0;
    for_each_vertex_list(rp, cfg.target, cap, [&](const auto&, const auto& verts) {
      if (count_on(verts, 0, pq_prime) == 1) weight += count_on(verts, 0, pq);
    });
    term.suffix_weight = BigInt(std::to_string(weight));
    if (term.count != term.prefix_paths * term.suffix_weight)
      throw Error(ErrorCode::invariant_violation,
                  "DECOMPOSITION-MISMATCH: boundary term at R=" + to_string(r) +
                      ", R'=" + to_string(rp) + " is " + to_string(term.count) +
                      " but prefixes x suffix weight = " +
                      to_string(term.prefix_paths) + " x " +
                      to_string(term.suffix_weight));
    if (term.count == 0) continue;
    cert.total += term.count;
    cert.boundary_terms.push_back(std::move(term));
  }
  if (cert.total != cert.lhs_paths - cert.rhs_paths)
    throw Error(ErrorCode::invariant_violation,
                "DECOMPOSITION-MISMATCH: total " + to_string(cert.total) +
                    " != path LHS - RHS = " +
                    to_string(BigInt(cert.lhs_paths - cert.rhs_paths)));
  return cert;
}

}  // namespace gammalc
