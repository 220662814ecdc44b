#include "sgcm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "sgcm/curve.hpp"
#include "sgcm/fourgen.hpp"
#include "sgcm/hilbert.hpp"
#include "sgcm/oracle.hpp"
#include "sgcm/report.hpp"

namespace sgcm {

using nlohmann::json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Overflow:
    case ErrorCode::BudgetExceeded:
      return kExitUnavailable;
    case ErrorCode::NonTermination:
    case ErrorCode::IdentityViolation:
    case ErrorCode::Disagreement:
      return kExitSoftware;
    case ErrorCode::Io:
      return kExitIo;
    default:
      return kExitData;
  }
}

namespace {

struct Globals {
  bool json = false;
  bool trace = false;
  bool oracle = false;
  std::uint64_t budget = 10'000'000;
};

std::string show(ExpVec v) { return "(" + std::to_string(v.alpha) + "," + std::to_string(v.beta) + ")"; }
std::string show(LatticePair p) { return "<" + std::to_string(p.a) + "," + std::to_string(p.b) + ">"; }
const char* yes_no(bool v) { return v ? "true" : "false"; }

std::string trace_line(const TraceRecord& t, bool curve) {
  std::ostringstream out;
  out << "step=" << t.step << " base=" << t.base << " a*=" << t.a_star << " b*=" << t.b_star;
  if (curve) {
    out << " c*=" << t.c_star;
  } else {
    out << " g*=" << t.g_star;
  }
  out << " h*=" << t.h_star << " |B|=" << t.size;
  return out.str();
}

std::string emit(const json& j) { return j.dump(2) + "\n"; }

int cm_exit(bool is_cm) { return is_cm ? kExitCm : kExitNotCm; }

CliResult cmd_analyze(const Globals& g, const std::string& ring, bool with_basis) {
  const RingSpec spec = validate(parse_ring(ring));
  AnalyzeOptions opts;
  opts.oracle = g.oracle;
  opts.with_basis = with_basis;
  opts.with_trace = g.trace;
  opts.budget = g.budget;
  const AnalysisReport r = analyze(spec, opts);
  CliResult res;
  res.exit_code = r.disagreement ? kExitSoftware : cm_exit(r.is_cm);
  if (g.json) {
    res.out = emit(to_json(r));
  } else {
    std::ostringstream out;
    out << "ring: " << compact_ring(spec) << "\n"
        << "subgroup_size: " << r.subgroup_size << "\n"
        << "length: " << r.length << "\n"
        << "multiplicity: " << r.multiplicity << "\n"
        << "constant_C: " << r.constant_C << "\n"
        << "stabilization_N: " << r.stabilization_N << "\n"
        << "hilbert_polynomial: " << r.multiplicity << "n+" << r.multiplicity + r.constant_C << "\n"
        << "is_cm: " << yes_no(r.is_cm) << "\n";
    for (const CriterionVerdict& c : r.criteria) out << "criterion " << c.name << ": " << yes_no(c.is_cm) << "\n";
    out << "oracle_checked: " << yes_no(r.oracle_checked) << "\n";
    if (r.basis) {
      out << "basis:";
      for (const ExpVec& v : *r.basis) out << " " << show(v);
      out << "\n";
    }
    if (r.trace) {
      for (const TraceRecord& t : *r.trace) out << trace_line(t, false) << "\n";
    }
    res.out = out.str();
  }
  if (r.disagreement) res.err = "error: Disagreement: " + *r.disagreement + "\n";
  return res;
}

struct CurveFlags {
  std::int64_t n = 0;
  std::int64_t l = 0;
  std::int64_t m = 0;
  std::size_t given = 0;
};

CliResult cmd_basis(const Globals& g, const std::string& ring, const CurveFlags& cf, bool log, bool plot) {
  const bool curve = cf.given > 0;
  if (curve && !ring.empty()) return {kExitUsage, "", "error: give either a ring or --n --l --m, not both\n"};
  if (curve && cf.given != 3) return {kExitUsage, "", "error: curve mode needs all of --n --l --m\n"};
  if (!curve && ring.empty()) return {kExitUsage, "", "error: basis needs a ring or --n --l --m\n"};

  FourGenConstants fc;
  BasisResult basis;
  bool is_cm = false;
  if (curve) {
    const CurveConstants cc = curve_constants(make_curve(cf.n, cf.l, cf.m));
    basis = curve_basis(cc);
    fc = as_fourgen(cc);
    is_cm = is_cm_curve(cc);
  } else {
    const RingSpec spec = validate(parse_ring(ring));
    if (spec.gens().size() != 2) {
      throw Error(ErrorCode::NotFourGen,
                  "basis needs exactly two middle generators, got " + std::to_string(spec.gens().size()));
    }
    fc = fourgen_constants(spec.a(), spec.b(), spec.gens()[0], spec.gens()[1]);
    basis = basis_algorithm(fc);
    is_cm = is_cm_fourgen(fc);
  }

  std::vector<TraceRecord> trace{basis.initial};
  trace.insert(trace.end(), basis.trace.begin(), basis.trace.end());

  CliResult res;
  res.exit_code = cm_exit(is_cm);
  if (g.json) {
    json j;
    json items = json::array();
    if (log) {
      for (const LatticePair& p : basis.lattice) items.push_back({p.a, p.b});
      j["lattice"] = items;
    } else {
      for (const ExpVec& v : basis.monomials) items.push_back({v.alpha, v.beta});
      j["basis"] = items;
    }
    j["size"] = basis.size();
    j["is_cm"] = is_cm;
    if (g.trace) {
      json t = json::array();
      for (const TraceRecord& rec : trace) t.push_back(to_json(rec, curve));
      j["trace"] = t;
    }
    res.out = emit(j);
    return res;
  }
  std::ostringstream out;
  if (log) {
    for (const LatticePair& p : basis.lattice) out << show(p) << "\n";
  } else {
    for (const ExpVec& v : basis.monomials) out << show(v) << "\n";
  }
  if (g.trace) {
    for (const TraceRecord& rec : trace) out << trace_line(rec, curve) << "\n";
  }
  if (plot) out << render_lattice(basis, candidate_basis_B0(fc));
  res.out = out.str();
  return res;
}

CliResult cmd_construct(const Globals& g, std::int64_t a, std::int64_t b, const std::string& gens_text,
                        std::int64_t constant, std::int64_t stab) {
  std::vector<ClassVec> gens;
  try {
    const json j = json::parse(gens_text);
    if (!j.is_array()) throw Error(ErrorCode::Parse, "--subgroup-gens must be a JSON array of [p,q]");
    for (const json& item : j) {
      if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() || !item[1].is_number_integer()) {
        throw Error(ErrorCode::Parse, "--subgroup-gens entries must be [p,q] integer pairs");
      }
      gens.push_back({item[0].get<std::int64_t>(), item[1].get<std::int64_t>()});
    }
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
  const RingSpec spec = construct_ring(a, b, gens, constant, stab);
  // Constructed rings carry one generator per class, far too many for the
  // candidate product, so the verification walks the corner closure instead.
  OracleOptions oo;
  oo.candidate_budget = g.budget;
  oo.enumeration = CornerEnumeration::Closure;
  const HilbertData hd = hilbert_data(spec, oo);
  CliResult res;
  if (g.json) {
    res.out = emit(json{{"spec", ring_to_json(spec)},
                        {"verification",
                         {{"multiplicity", hd.multiplicity},
                          {"constant_C", hd.constant_C},
                          {"stabilization_N", hd.stabilization_N}}}});
  } else {
    res.out = "spec: " + ring_to_json(spec).dump() + "\n" + "compact: " + compact_ring(spec) + "\n" +
              "verification: (" + std::to_string(hd.multiplicity) + ", " + std::to_string(hd.constant_C) + ", " +
              std::to_string(hd.stabilization_N) + ")\n";
  }
  return res;
}

CliResult cmd_batch(const Globals& g, bool curves, std::int64_t max_n, std::optional<std::int64_t> oracle_up_to,
                    const std::string& out_path) {
  if (!curves) return {kExitUsage, "", "error: batch currently supports --curves only\n"};
  BatchOptions opts;
  opts.oracle_up_to = oracle_up_to.value_or(g.oracle ? max_n : 0);
  const std::vector<BatchRow> rows = batch_classify(max_n, opts);

  std::string body;
  if (g.json) {
    json arr = json::array();
    for (const BatchRow& r : rows) arr.push_back(to_json(r));
    body = emit(arr);
  } else {
    body = batch_csv_header() + "\n";
    for (const BatchRow& r : rows) body += batch_csv_row(r) + "\n";
  }
  CliResult res;
  if (out_path.empty()) {
    res.out = body;
    return res;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw Error(ErrorCode::Io, "cannot open " + out_path + " for writing");
  file << body;
  file.close();
  if (!file) throw Error(ErrorCode::Io, "failed writing " + out_path);
  if (g.json) {
    res.out = emit(json{{"rows", rows.size()}, {"out", out_path}});
  } else {
    res.out = "wrote " + std::to_string(rows.size()) + " rows to " + out_path + "\n";
  }
  return res;
}

std::optional<std::pair<std::int64_t, std::int64_t>> parse_range(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw Error(ErrorCode::Parse, "--hf-range must look like lo..hi");
  auto number = [&](std::string_view s) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() || v < 0) {
      throw Error(ErrorCode::Parse, "bad --hf-range bound '" + std::string(s) + "'");
    }
    return v;
  };
  const std::string_view view(text);
  const std::int64_t lo = number(view.substr(0, dots));
  const std::int64_t hi = number(view.substr(dots + 2));
  if (lo > hi) throw Error(ErrorCode::Parse, "--hf-range needs lo <= hi");
  return std::pair{lo, hi};
}

CliResult cmd_verify(const Globals& g, const std::string& ring, const std::string& range) {
  const RingSpec spec = validate(parse_ring(ring));
  const VerifyReport rep = verify(spec, parse_range(range), g.budget);
  CliResult res;
  res.exit_code = rep.all_passed() ? kExitCm : kExitSoftware;
  if (g.json) {
    res.out = emit(to_json(rep));
    return res;
  }
  std::ostringstream out;
  for (const VerifyCheck& c : rep.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  out << (rep.all_passed() ? "all checks passed" : "some checks failed") << "\n";
  res.out = out.str();
  return res;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Cohen-Macaulay tests, Hilbert data and monomial bases for 2-dimensional semigroup rings", "sgcm"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable JSON on standard output");
  app.add_flag("--trace", g.trace, "Include the basis-extension trace");
  app.add_flag("--oracle", g.oracle, "Cross-check fast paths against the brute-force oracle");
  app.add_option("--budget", g.budget, "Candidate budget for the oracle")->check(CLI::PositiveNumber);

  std::string ring;
  bool with_basis = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Hilbert data and CM verdict for a ring");
  analyze_cmd->fallthrough();
  analyze_cmd->add_option("ring", ring, "Ring as JSON or A,B;p:q,...")->required();
  analyze_cmd->add_flag("--with-basis", with_basis, "Include the monomial basis");

  CurveFlags cf;
  bool log = false;
  bool plot = false;
  auto* basis_cmd = app.add_subcommand("basis", "Monomial basis of R/(x^a,y^b) for four generators or a curve");
  basis_cmd->fallthrough();
  basis_cmd->add_option("ring", ring, "Ring with exactly two middle generators");
  auto* n_opt = basis_cmd->add_option("--n", cf.n, "Curve degree");
  auto* l_opt = basis_cmd->add_option("--l", cf.l, "Smaller middle exponent");
  auto* m_opt = basis_cmd->add_option("--m", cf.m, "Larger middle exponent");
  basis_cmd->add_flag("--log", log, "Print lattice pairs <a,b> instead of exponents");
  basis_cmd->add_flag("--plot", plot, "ASCII picture of the lattice basis (text mode only)");

  std::int64_t ca = 0, cb = 0, constant = 0, stab = 0;
  std::string subgroup_gens;
  auto* construct_cmd = app.add_subcommand("construct", "Build a ring with prescribed Hilbert data");
  construct_cmd->fallthrough();
  construct_cmd->add_option("--a", ca, "x-exponent of the pure power")->required();
  construct_cmd->add_option("--b", cb, "y-exponent of the pure power")->required();
  construct_cmd->add_option("--subgroup-gens", subgroup_gens, "JSON list of classes [[p,q],...]")->required();
  construct_cmd->add_option("--constant", constant, "Constant C of the Hilbert polynomial");
  construct_cmd->add_option("--stab", stab, "Stabilization index");

  bool curves = false;
  std::int64_t max_n = 0;
  std::int64_t oracle_up_to = 0;
  std::string out_path;
  auto* batch_cmd = app.add_subcommand("batch", "Classify every curve up to a degree");
  batch_cmd->fallthrough();
  batch_cmd->add_flag("--curves", curves, "Enumerate curves 0 < l < m < n");
  batch_cmd->add_option("--max-n", max_n, "Largest n")->required();
  auto* oracle_opt = batch_cmd->add_option("--oracle-up-to", oracle_up_to, "Oracle cross-check for n <= K");
  batch_cmd->add_option("--out", out_path, "Write the table to a file");

  std::string range;
  auto* verify_cmd = app.add_subcommand("verify", "Fast paths against the oracle on one ring");
  verify_cmd->fallthrough();
  verify_cmd->add_option("ring", ring, "Ring as JSON or A,B;p:q,...")->required();
  verify_cmd->add_option("--hf-range", range, "Hilbert function range lo..hi");

  std::ostringstream cli_out, cli_err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, cli_out, cli_err);
    return {code == 0 ? 0 : kExitUsage, cli_out.str(), cli_err.str()};
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(g, ring, with_basis);
    if (basis_cmd->parsed()) {
      cf.given = n_opt->count() + l_opt->count() + m_opt->count();
      return cmd_basis(g, ring, cf, log, plot);
    }
    if (construct_cmd->parsed()) return cmd_construct(g, ca, cb, subgroup_gens, constant, stab);
    if (batch_cmd->parsed()) {
      return cmd_batch(g, curves, max_n, oracle_opt->count() ? std::optional(oracle_up_to) : std::nullopt, out_path);
    }
    return cmd_verify(g, ring, range);
  } catch (const Error& e) {
    CliResult res{exit_code_for(e.code()), "", std::string("error: ") + e.what() + "\n"};
    if (g.json) {
      res.out = emit(json{{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}});
    }
    return res;
  } catch (const std::bad_alloc&) {
    return {kExitUnavailable, "", "error: out of memory\n"};
  }
}

}  // namespace sgcm
