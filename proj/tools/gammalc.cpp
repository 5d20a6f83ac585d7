// gammalc: command-line front end over the C API.
//
// Exit codes: 0 success or verdict true, 1 verdict false, 2 usage or input
// error, 3 internal invariant violation.

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gammalc/gammalc.h"
#include "json.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

constexpr const char* kCapVariable = "GAMMALC_PATH_CAP";

struct Failure {
  int code;
  std::string message;
};

int exit_for(glc_status status) {
  switch (status) {
    case GLC_ERR_INVARIANT:
    case GLC_ERR_INTERNAL:
    case GLC_ERR_NULL_ARGUMENT:
      return kInternal;
    default:
      return kUsage;
  }
}

void ensure(glc_status status) {
  if (status == GLC_OK) return;
  std::string message = std::string(glc_status_name(status)) + ": " + glc_last_error();
  if (status == GLC_ERR_CAP_EXCEEDED) message += " (use --formula-only or raise --cap)";
  throw Failure{exit_for(status), message};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  glc_string_free(s);
  return out;
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Seq = std::unique_ptr<glc_seq, Deleter<glc_seq, glc_seq_free>>;
using Poly = std::unique_ptr<glc_poly, Deleter<glc_poly, glc_poly_free>>;
using Gamma = std::unique_ptr<glc_gamma, Deleter<glc_gamma, glc_gamma_free>>;
using Table = std::unique_ptr<glc_coeff_table,
                              Deleter<glc_coeff_table, glc_coeff_table_free>>;
using Cert = std::unique_ptr<glc_certificate,
                             Deleter<glc_certificate, glc_certificate_free>>;

void emit(const std::string& text) {
  std::cout << text;
  if (text.empty() || text.back() != '\n') std::cout << '\n';
}

glc_format format_of(bool json) { return json ? GLC_FORMAT_JSON : GLC_FORMAT_TEXT; }

std::uint64_t parse_cap(const std::string& text, const std::string& source) {
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value == 0)
    throw Failure{kUsage, source + " must be a positive integer, got '" + text + "'"};
  return value;
}

std::uint64_t resolve_cap(const std::optional<std::string>& flag) {
  if (flag) return parse_cap(*flag, "--cap");
  if (const char* env = std::getenv(kCapVariable)) return parse_cap(env, kCapVariable);
  return GLC_DEFAULT_PATH_CAP;
}

std::string read_file(const std::string& path) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw Failure{kUsage, "cannot read '" + path + "'"};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// A coefficient list given inline or as a JSON document.
struct SequenceInput {
  std::string inline_list;
  std::string input_file;
  std::optional<long> n;

  void add_to(CLI::App* cmd) {
    cmd->add_option("coeffs", inline_list, "Comma separated rationals, e.g. 1,2/3,1");
    cmd->add_option("--input", input_file,
                    "JSON file {\"n\":..,\"coeffs\":[..]} ('-' for stdin)");
    cmd->add_option("--n", n, "Symmetry parameter n");
  }

  Seq load(bool needs_n) {
    glc_seq* raw = nullptr;
    if (!input_file.empty()) {
      if (!inline_list.empty())
        throw Failure{kUsage, "give either an inline list or --input, not both"};
      long doc_n = 0;
      ensure(glc_seq_parse_json(read_file(input_file).c_str(), &doc_n, &raw));
      if (n && *n != doc_n)
        throw Failure{kUsage, "--n " + std::to_string(*n) +
                                  " disagrees with n=" + std::to_string(doc_n) +
                                  " in the input document"};
      n = doc_n;
      return Seq(raw);
    }
    if (inline_list.empty()) throw Failure{kUsage, "missing coefficient list"};
    if (needs_n && !n) throw Failure{kUsage, "--n is required"};
    ensure(glc_seq_parse(inline_list.c_str(), &raw));
    return Seq(raw);
  }
};

std::string seq_text(const glc_seq* seq) {
  char* out = nullptr;
  ensure(glc_seq_to_string(seq, &out));
  return take(out);
}

// ---- gamma ----

struct GammaCmd {
  SequenceInput input;
  bool to_h = false;
  bool to_gamma = false;

  int run(bool json) {
    Seq seq = input.load(true);
    if (to_h == to_gamma) throw Failure{kUsage, "choose exactly one of --to-h, --to-gamma"};
    if (to_h) {
      glc_gamma* g = nullptr;
      ensure(glc_gamma_new(*input.n, seq.get(), &g));
      Gamma gamma(g);
      glc_poly* p = nullptr;
      ensure(glc_gamma_to_poly(gamma.get(), &p));
      Poly poly(p);
      char* out = nullptr;
      if (json) {
        ensure(glc_poly_json(poly.get(), &out));
        emit(take(out));
      } else {
        glc_seq* c = nullptr;
        ensure(glc_poly_coeffs(poly.get(), &c));
        Seq coeffs(c);
        emit("h = " + seq_text(coeffs.get()));
      }
    } else {
      glc_poly* p = nullptr;
      ensure(glc_poly_new(*input.n, seq.get(), &p));
      Poly poly(p);
      glc_gamma* g = nullptr;
      ensure(glc_poly_to_gamma(poly.get(), &g));
      Gamma gamma(g);
      char* out = nullptr;
      if (json) {
        ensure(glc_gamma_json(gamma.get(), &out));
        emit(take(out));
      } else {
        glc_seq* c = nullptr;
        ensure(glc_gamma_coeffs(gamma.get(), &c));
        Seq coeffs(c);
        emit("gamma = " + seq_text(coeffs.get()));
      }
    }
    return kOk;
  }
};

// ---- check ----

struct CheckCmd {
  SequenceInput input;
  bool lc = false;
  std::optional<long> ulc;
  bool unimodal = false;
  bool no_internal_zeros = false;
  bool pairwise = false;
  bool main_theorem = false;
  bool ultra_transfer = false;

  int run(bool json) {
    const bool transfer = main_theorem || ultra_transfer;
    Seq seq = input.load(transfer);
    if (!(lc || ulc || unimodal || no_internal_zeros || pairwise || transfer))
      throw Failure{kUsage, "no predicate requested"};
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();
    std::string text;
    bool all = true;

    auto sequence = [&](glc_predicate p, const char* label, long order, bool negate) {
      int verdict = 0;
      size_t witness[3] = {0, 0, 0};
      size_t witness_len = 0;
      char* js = nullptr;
      ensure(glc_check_sequence(p, seq.get(), order, &verdict, witness, &witness_len,
                                &js));
      const std::string doc = take(js);
      const bool ok = negate ? !verdict : verdict;
      all = all && ok;
      auto j = nlohmann::ordered_json::parse(doc);
      j.erase("schema");
      if (negate) {
        j["predicate"] = label;
        j["verdict"] = ok;
      }
      reports.push_back(j);
      text += std::string(label) + ": " + (ok ? "true" : "false");
      if (witness_len) {
        text += negate ? " (internal zero" : " (witness";
        for (size_t t = 0; t < witness_len; ++t) text += " " + std::to_string(witness[t]);
        text += ")";
      }
      text += "\n";
    };
    if (lc) sequence(GLC_LOG_CONCAVE, "log_concave", 0, false);
    if (ulc) sequence(GLC_ULTRA_LOG_CONCAVE, "ultra_log_concave", *ulc, false);
    if (unimodal) sequence(GLC_UNIMODAL, "unimodal", 0, false);
    if (no_internal_zeros) sequence(GLC_INTERNAL_ZEROS, "no_internal_zeros", 0, true);
    if (pairwise) sequence(GLC_PAIRWISE_LOG_CONCAVE, "pairwise_log_concave", 0, false);

    bool violated = false;
    auto transfer_check = [&](bool ultra) {
      glc_gamma* g = nullptr;
      ensure(glc_gamma_new(*input.n, seq.get(), &g));
      Gamma gamma(g);
      int hyp = 0, con = 0;
      char* js = nullptr;
      ensure(ultra ? glc_ultra_transfer(gamma.get(), &hyp, &con, &js)
                   : glc_main_theorem(gamma.get(), &hyp, &con, &js));
      auto j = nlohmann::ordered_json::parse(take(js));
      j.erase("schema");
      j["predicate"] = ultra ? "ultra_transfer" : "main_theorem";
      reports.push_back(j);
      if (hyp && !con) violated = true;
      std::string h;
      for (const auto& v : j["h"]) h += (h.empty() ? "" : ",") + v.get<std::string>();
      text += std::string(ultra ? "ultra_transfer" : "main_theorem") +
              ": hypothesis " + (hyp ? "yes" : "no") + ", conclusion " +
              (con ? "yes" : "no") + "  h = " + h + "\n";
    };
    if (main_theorem) transfer_check(false);
    if (ultra_transfer) transfer_check(true);

    if (json) {
      nlohmann::ordered_json out;
      out["schema"] = "1";
      out["reports"] = reports;
      out["all_hold"] = all && !violated;
      emit(out.dump());
    } else {
      emit(text);
    }
    if (violated) {
      std::cerr << "gammalc: invariant violation: hypothesis holds but conclusion fails\n";
      return kInternal;
    }
    return all ? kOk : kFalse;
  }
};

// ---- coefficients ----

struct BasisCmd {
  long n = 0;
  int run(bool) {
    char* out = nullptr;
    ensure(glc_render_h_in_gamma(n, &out));
    emit(take(out));
    return kOk;
  }
};

struct CoeffsCmd {
  long n = 0, i = 0;
  bool compact = false, regroup = false;
  int run(bool json) {
    glc_coeff_table* raw = nullptr;
    ensure(glc_coeff_table_new(n, i, &raw));
    Table table(raw);
    char* out = nullptr;
    if (json) {
      ensure(glc_coeff_table_json(table.get(), &out));
    } else {
      const glc_table_layout layout = regroup   ? GLC_TABLE_REGROUPED
                                      : compact ? GLC_TABLE_COMPACT
                                                : GLC_TABLE_FULL;
      ensure(glc_coeff_table_render(table.get(), layout, &out));
    }
    emit(take(out));
    return kOk;
  }
};

struct CoeffCmd {
  long n = 0, i = 0, j = 0, k = 0;
  bool oracle = false;
  int run(bool json) {
    char* out = nullptr;
    ensure(oracle ? glc_coeff_oracle(n, i, j, k, &out) : glc_coeff(n, i, j, k, &out));
    const std::string value = take(out);
    if (json) {
      nlohmann::ordered_json doc{{"schema", "1"}, {"n", n}, {"i", i},
                                 {"j", j},        {"k", k}, {"c", value}};
      emit(doc.dump());
    } else {
      emit(value);
    }
    return kOk;
  }
};

glc_parity parity_flag(bool even, bool odd) {
  if (even && odd) throw Failure{kUsage, "--even and --odd are exclusive"};
  return odd ? GLC_ODD : GLC_EVEN;
}

struct DiagonalCmd {
  long n = 0, i = 0, ell = 0;
  bool even = false, odd = false;
  int run(bool json) {
    int ok = 0;
    char* out = nullptr;
    ensure(glc_diagonal(n, i, ell, parity_flag(even, odd), &ok, format_of(json), &out));
    emit(take(out));
    return ok ? kOk : kInternal;
  }
};

struct QuadraticCmd {
  long n = 0, i = 0, ell = 0;
  bool even = false, odd = false;
  int run(bool json) {
    char* out = nullptr;
    ensure(glc_quadratic(n, i, ell, parity_flag(even, odd), format_of(json), &out));
    emit(take(out));
    return kOk;
  }
};

struct IdentityCmd {
  long n = 0, i = 0, ell = 0, j = 0;
  bool even = false, odd = false;
  int run(bool json) {
    int holds = 0;
    char* out = nullptr;
    ensure(glc_identity(n, i, ell, j, parity_flag(even, odd), &holds, format_of(json),
                        &out));
    emit(take(out));
    return holds ? kOk : kInternal;
  }
};

struct RSumCmd {
  long n = 0, i = 0, r = 0;
  int run(bool json) {
    char* out = nullptr;
    ensure(glc_r_sum(n, i, r, &out));
    const std::string value = take(out);
    if (json)
      emit(nlohmann::ordered_json{{"schema", "1"}, {"n", n}, {"i", i}, {"r", r},
                                  {"r_sum", value}}
               .dump());
    else
      emit(value);
    return kOk;
  }
};

struct AbelCmd {
  std::string a, b;
  int run(bool json) {
    glc_seq* ra = nullptr;
    ensure(glc_seq_parse(a.c_str(), &ra));
    Seq sa(ra);
    glc_seq* rb = nullptr;
    ensure(glc_seq_parse(b.c_str(), &rb));
    Seq sb(rb);
    int ok = 0;
    char* out = nullptr;
    ensure(glc_abel(sa.get(), sb.get(), &ok, format_of(json), &out));
    emit(take(out));
    return ok ? kOk : kInternal;
  }
};

// ---- lattice paths ----

struct CertifyCmd {
  long n = 0, i = 0, r = 0;
  bool ascii = false, formula_only = false, list_paths = false;
  std::optional<std::string> cap;
  int run(bool json) {
    char* out = nullptr;
    if (formula_only) {
      ensure(glc_formula_sums(n, i, r, format_of(json), &out));
      emit(take(out));
      return kOk;
    }
    glc_certificate* raw = nullptr;
    ensure(glc_certificate_new(n, i, r, resolve_cap(cap), list_paths, &raw));
    Cert cert(raw);
    ensure(json ? glc_certificate_json(cert.get(), &out)
                : glc_certificate_render(cert.get(), ascii, &out));
    emit(take(out));
    int certifies = 0;
    ensure(glc_certificate_certifies(cert.get(), &certifies));
    if (!certifies) {
      std::cerr << "gammalc: the path sums over the full segments differ from the "
                   "binomial sums here, so the certified total is not LHS - RHS\n";
      return kFalse;
    }
    return kOk;
  }
};

struct PathsCmd {
  long n = 0, i = 0, r = 0;
  std::optional<std::string> cap;
  int run(bool json) {
    const std::uint64_t limit = resolve_cap(cap);
    const glc_format fmt = format_of(json);
    char* sums = nullptr;
    ensure(glc_path_sums(n, i, r, limit, fmt, &sums));
    int h1 = 0, h2 = 0;
    char* c1 = nullptr;
    ensure(glc_claim1(n, i, r, limit, &h1, fmt, &c1));
    char* c2 = nullptr;
    ensure(glc_claim2(n, i, r, limit, &h2, fmt, &c2));
    if (json) {
      nlohmann::ordered_json out;
      out["schema"] = "1";
      out["sums"] = nlohmann::ordered_json::parse(take(sums));
      out["claim1"] = nlohmann::ordered_json::parse(take(c1));
      out["claim2"] = nlohmann::ordered_json::parse(take(c2));
      emit(out.dump());
    } else {
      emit(take(sums) + take(c1) + take(c2));
    }
    if (!h1 || !h2) return kInternal;
    return kOk;
  }
};

struct GridCmd {
  long n = 0, i = 0, r = 0;
  std::string path;
  int run(bool) {
    char* out = nullptr;
    ensure(glc_render_grid(n, i, r, path.empty() ? nullptr : path.c_str(), &out));
    emit(take(out));
    return kOk;
  }
};

struct EnumerateCmd {
  std::vector<long> coords;
  bool count_only = false;
  std::optional<std::string> cap;
  int run(bool json) {
    char* count = nullptr;
    ensure(glc_count_paths(coords[0], coords[1], coords[2], coords[3], &count));
    const std::string total = take(count);
    if (count_only) {
      emit(json ? nlohmann::ordered_json{{"schema", "1"}, {"count", total}}.dump()
                : total);
      return kOk;
    }
    std::vector<std::string> paths;
    auto visit = [](const char* steps, void* ctx) {
      static_cast<std::vector<std::string>*>(ctx)->emplace_back(steps);
      return 0;
    };
    ensure(glc_enumerate_paths(coords[0], coords[1], coords[2], coords[3],
                               resolve_cap(cap), visit, &paths));
    if (json) {
      emit(nlohmann::ordered_json{{"schema", "1"}, {"count", total}, {"paths", paths}}
               .dump());
    } else {
      std::string text;
      for (const auto& p : paths) text += p + "\n";
      emit(text.empty() ? "(no paths)" : text);
    }
    return kOk;
  }
};

struct InvolutionCmd {
  std::vector<long> coords;
  std::string steps;
  int run(bool json) {
    char* out = nullptr;
    ensure(glc_involution(coords[0], coords[1], coords[2], coords[3], steps.c_str(),
                          &out));
    const std::string image = take(out);
    emit(json ? nlohmann::ordered_json{{"schema", "1"}, {"path", steps}, {"image", image}}
                    .dump()
              : image);
    return kOk;
  }
};

// ---- sweeps ----

struct SweepCmd {
  std::string kind;
  long n_max = 10;
  std::optional<std::string> cap;
  int run(bool json) {
    int passed = 0;
    char* out = nullptr;
    ensure(glc_sweep(kind.c_str(), n_max, resolve_cap(cap), &passed, format_of(json),
                     &out));
    emit(take(out));
    return passed ? kOk : kFalse;
  }
};

void add_parity(CLI::App* cmd, bool& even, bool& odd) {
  cmd->add_flag("--even", even, "Even diagonal j + k = 2l (default)");
  cmd->add_flag("--odd", odd, "Odd diagonal j + k = 2l - 1");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for gamma vectors, log-concavity and lattice path certificates"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit JSON instead of text");
  app.set_version_flag("--version", glc_version());

  GammaCmd gamma;
  auto* g = app.add_subcommand("gamma", "Convert between h and gamma coefficients");
  gamma.input.add_to(g);
  g->add_flag("--to-h", gamma.to_h, "Input is gamma, print h");
  g->add_flag("--to-gamma", gamma.to_gamma, "Input is h, print gamma");

  CheckCmd check;
  auto* c = app.add_subcommand("check", "Sequence predicates and transfer theorems");
  check.input.add_to(c);
  c->add_flag("--lc", check.lc, "Log-concave");
  c->add_option("--ulc", check.ulc, "Ultra log-concave of order M");
  c->add_flag("--unimodal", check.unimodal, "Unimodal");
  c->add_flag("--no-internal-zeros", check.no_internal_zeros, "No internal zeros");
  c->add_flag("--pairwise", check.pairwise, "a_i a_{j-1} >= a_{i-1} a_j for i <= j");
  c->add_flag("--main-theorem", check.main_theorem,
              "Input is gamma: LC without internal zeros carries over to h");
  c->add_flag("--ultra-transfer", check.ultra_transfer,
              "Input is gamma: ultra log-concavity carries over to h");

  BasisCmd basis;
  auto* b = app.add_subcommand("basis", "h_i written in terms of the gammas");
  b->add_option("n", basis.n)->required();

  CoeffsCmd coeffs;
  auto* cs = app.add_subcommand("coeffs", "Table of c_jk for h_i^2 - h_{i-1} h_{i+1}");
  cs->add_option("n", coeffs.n)->required();
  cs->add_option("i", coeffs.i)->required();
  auto* compact = cs->add_flag("--compact", coeffs.compact, "Omit zero coefficients");
  cs->add_flag("--regroup", coeffs.regroup, "Regrouped nonnegative form")->excludes(compact);

  CoeffCmd coeff;
  auto* cf = app.add_subcommand("coeff", "Single coefficient c_jk");
  cf->add_option("n", coeff.n)->required();
  cf->add_option("i", coeff.i)->required();
  cf->add_option("j", coeff.j)->required();
  cf->add_option("k", coeff.k)->required();
  cf->add_flag("--oracle", coeff.oracle, "Use the brute-force expansion");

  DiagonalCmd diag;
  auto* d = app.add_subcommand("diagonal", "Diagonal sequence with tail-sign check");
  d->add_option("n", diag.n)->required();
  d->add_option("i", diag.i)->required();
  d->add_option("l", diag.ell)->required();
  add_parity(d, diag.even, diag.odd);

  QuadraticCmd quad;
  auto* q = app.add_subcommand("quadratic", "Coefficients A, B governing a diagonal's sign");
  q->add_option("n", quad.n)->required();
  q->add_option("i", quad.i)->required();
  q->add_option("l", quad.ell)->required();
  add_parity(q, quad.even, quad.odd);

  IdentityCmd ident;
  auto* id = app.add_subcommand("identity", "Check the factored form of a diagonal entry");
  id->add_option("n", ident.n)->required();
  id->add_option("i", ident.i)->required();
  id->add_option("l", ident.ell)->required();
  id->add_option("j", ident.j)->required();
  add_parity(id, ident.even, ident.odd);

  RSumCmd rsum;
  auto* rs = app.add_subcommand("rsum", "Coefficient of u^r when gamma_j = u^j");
  rs->add_option("n", rsum.n)->required();
  rs->add_option("i", rsum.i)->required();
  rs->add_option("r", rsum.r)->required();

  AbelCmd abel;
  auto* ab = app.add_subcommand("abel", "Summation by parts check");
  ab->add_option("--a", abel.a, "Tail-signed sequence")->required();
  ab->add_option("--b", abel.b, "Weakly decreasing nonnegative sequence")->required();

  CertifyCmd cert;
  auto* ce = app.add_subcommand("certify", "Path certificate for the binomial inequality");
  ce->add_option("n", cert.n)->required();
  ce->add_option("i", cert.i)->required();
  ce->add_option("r", cert.r)->required();
  ce->add_flag("--ascii", cert.ascii, "Append the grid figure");
  ce->add_flag("--formula-only", cert.formula_only, "Binomial sums only, no enumeration");
  ce->add_flag("--paths", cert.list_paths, "Include contributing paths (JSON)");
  ce->add_option("--cap", cert.cap, "Enumeration cap");

  PathsCmd paths;
  auto* ps = app.add_subcommand("paths", "Path sums and the two intersection claims");
  ps->add_option("n", paths.n)->required();
  ps->add_option("i", paths.i)->required();
  ps->add_option("r", paths.r)->required();
  ps->add_option("--cap", paths.cap, "Enumeration cap");

  GridCmd grid;
  auto* gr = app.add_subcommand("grid", "ASCII grid of a path configuration");
  gr->add_option("n", grid.n)->required();
  gr->add_option("i", grid.i)->required();
  gr->add_option("r", grid.r)->required();
  gr->add_option("--path", grid.path, "Steps from O, e.g. EENENE");

  EnumerateCmd en;
  auto* e = app.add_subcommand("enumerate", "North-east paths between two points");
  e->add_option("coords", en.coords, "x0 y0 x1 y1")->required()->expected(4);
  e->add_flag("--count", en.count_only, "Print the count only");
  e->add_option("--cap", en.cap, "Enumeration cap");

  InvolutionCmd inv;
  auto* iv = app.add_subcommand("involution", "Rotate a path about its rectangle's centre");
  iv->add_option("coords", inv.coords, "x0 y0 x1 y1")->required()->expected(4);
  iv->add_option("--steps", inv.steps, "Steps, e.g. ENNE")->required();

  SweepCmd sweep;
  auto* sw = app.add_subcommand("sweep", "Run a property suite");
  sw->add_option("kind", sweep.kind,
                 "coefficients|diagonals|r-sums|paths|main-theorem|ultra-transfer|"
                 "abel|predicates")
      ->required();
  sw->add_option("--nmax", sweep.n_max, "Largest n (sequence length for predicates)");
  sw->add_option("--cap", sweep.cap, "Enumeration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*g) return gamma.run(json);
    if (*c) return check.run(json);
    if (*b) return basis.run(json);
    if (*cs) return coeffs.run(json);
    if (*cf) return coeff.run(json);
    if (*d) return diag.run(json);
    if (*q) return quad.run(json);
    if (*id) return ident.run(json);
    if (*rs) return rsum.run(json);
    if (*ab) return abel.run(json);
    if (*ce) return cert.run(json);
    if (*ps) return paths.run(json);
    if (*gr) return grid.run(json);
    if (*e) return en.run(json);
    if (*iv) return inv.run(json);
    if (*sw) return sweep.run(json);
  } catch (const Failure& f) {
    std::cerr << "gammalc: error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& ex) {
    std::cerr << "gammalc: error: " << ex.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
