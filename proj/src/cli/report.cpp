#include "sgcm/report.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "sgcm/checked.hpp"
#include "sgcm/error.hpp"
#include "sgcm/hilbert.hpp"
#include "sgcm/oracle.hpp"

namespace sgcm {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::int64_t parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorCode::Parse, "bad integer for " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

std::int64_t json_int(const json& j, std::string_view what) {
  if (!j.is_number_integer()) throw Error(ErrorCode::Parse, std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

RawRing parse_json_ring(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
  if (!j.is_object() || !j.contains("a") || !j.contains("b")) {
    throw Error(ErrorCode::Parse, "ring JSON needs integer fields \"a\" and \"b\"");
  }
  RawRing raw;
  raw.a = json_int(j["a"], "a");
  raw.b = json_int(j["b"], "b");
  if (j.contains("gens")) {
    if (!j["gens"].is_array()) throw Error(ErrorCode::Parse, "\"gens\" must be an array");
    for (const json& g : j["gens"]) {
      if (!g.is_array() || g.size() != 2) throw Error(ErrorCode::Parse, "each generator must be [p,q]");
      raw.gens.emplace_back(json_int(g[0], "p"), json_int(g[1], "q"));
    }
  }
  return raw;
}

RawRing parse_compact_ring(std::string_view text) {
  const auto semi = text.find(';');
  const std::string_view head = text.substr(0, semi);
  const std::string_view tail = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
  const auto comma = head.find(',');
  if (comma == std::string_view::npos) throw Error(ErrorCode::Parse, "compact ring must start with 'A,B'");
  RawRing raw;
  raw.a = parse_int(head.substr(0, comma), "a");
  raw.b = parse_int(head.substr(comma + 1), "b");
  std::string_view rest = trim(tail);
  while (!rest.empty()) {
    const auto next = rest.find(',');
    const std::string_view item = trim(rest.substr(0, next));
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) throw Error(ErrorCode::Parse, "generator must be 'p:q'");
    raw.gens.emplace_back(parse_int(item.substr(0, colon), "p"), parse_int(item.substr(colon + 1), "q"));
    if (next == std::string_view::npos) break;
    rest = rest.substr(next + 1);
  }
  return raw;
}

json vec_list(const std::vector<ExpVec>& vs) {
  json arr = json::array();
  for (const ExpVec& v : vs) arr.push_back({v.alpha, v.beta});
  return arr;
}

std::vector<ExpVec> vec_list_from(const json& j) {
  std::vector<ExpVec> out;
  for (const json& v : j) out.push_back({v.at(0).get<std::int64_t>(), v.at(1).get<std::int64_t>()});
  return out;
}

TraceRecord trace_from_json(const json& j) {
  TraceRecord t;
  t.step = j.at("step").get<int>();
  t.base = j.at("base").get<std::int64_t>();
  t.a_star = j.at("a_star").get<std::int64_t>();
  t.b_star = j.at("b_star").get<std::int64_t>();
  t.g_star = j.at("g_star").get<std::int64_t>();
  t.h_star = j.at("h_star").get<std::int64_t>();
  t.c_star = j.value("c_star", std::int64_t{0});
  t.added = j.at("added").get<std::size_t>();
  t.size = j.at("size").get<std::size_t>();
  return t;
}

std::vector<TraceRecord> full_trace(const BasisResult& r) {
  std::vector<TraceRecord> out{r.initial};
  out.insert(out.end(), r.trace.begin(), r.trace.end());
  return out;
}

std::string csv_opt(const std::optional<bool>& v) { return v ? (*v ? "true" : "false") : ""; }

}  // namespace

RawRing parse_ring(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw Error(ErrorCode::Parse, "empty ring description");
  return text.front() == '{' ? parse_json_ring(text) : parse_compact_ring(text);
}

json ring_to_json(const RingSpec& spec) {
  return json{{"a", spec.a()}, {"b", spec.b()}, {"gens", vec_list(spec.gens())}};
}

std::string compact_ring(const RingSpec& spec) {
  std::string out = std::to_string(spec.a()) + "," + std::to_string(spec.b()) + ";";
  for (std::size_t i = 0; i < spec.gens().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(spec.gens()[i].alpha) + ":" + std::to_string(spec.gens()[i].beta);
  }
  return out;
}

std::optional<CurveSpec> as_curve(const RingSpec& spec) {
  if (spec.a() != spec.b() || spec.gens().size() != 2) return std::nullopt;
  const std::int64_t n = spec.a();
  std::vector<std::int64_t> ys;
  for (const ExpVec& g : spec.gens()) {
    if (g.alpha + g.beta != n || g.beta <= 0 || g.beta >= n) return std::nullopt;
    ys.push_back(g.beta);
  }
  std::sort(ys.begin(), ys.end());
  return CurveSpec{n, ys[0], ys[1]};
}

AnalysisReport analyze(const RingSpec& spec, const AnalyzeOptions& opts) {
  OracleOptions oo;
  oo.candidate_budget = opts.budget;
  const CornerSet cs = corners(spec, oo);
  const HilbertData hd = hilbert_data(spec, cs);

  AnalysisReport r;
  r.a = spec.a();
  r.b = spec.b();
  r.gens = spec.gens();
  r.subgroup_size = hd.multiplicity;
  r.length = static_cast<std::int64_t>(cs.size());
  r.multiplicity = hd.multiplicity;
  r.constant_C = hd.constant_C;
  r.stabilization_N = hd.stabilization_N;
  r.is_cm = is_cm_general(cs);
  r.criteria.push_back({"corner_uniqueness", r.is_cm});
  r.criteria.push_back({"length_equals_multiplicity", r.length == r.multiplicity});

  std::vector<std::string> problems;
  std::optional<BasisResult> fast_basis;
  std::vector<ExpVec> basis_monomials = cs.corners;
  const auto& gens = spec.gens();
  if (gens.size() == 2) {
    const FourGenConstants c = fourgen_constants(spec.a(), spec.b(), gens[0], gens[1]);
    r.criteria.push_back({"fourgen_relation_sign", is_cm_fourgen(c)});
    fast_basis = basis_algorithm(c);
    basis_monomials = fast_basis->monomials;
    if (static_cast<std::int64_t>(fast_basis->size()) != r.length) problems.push_back("basis size differs from length");
  } else if (gens.size() == 1) {
    r.criteria.push_back({"three_generator", true});
    basis_monomials = threegen_basis(spec.a(), spec.b(), gens[0]);
  }
  if (auto curve = as_curve(spec)) r.criteria.push_back({"curve_b2_vs_a2_plus_c2", is_cm_curve(curve_constants(*curve))});

  if (opts.oracle) {
    r.oracle_checked = true;
    r.criteria.push_back({"gsw", gsw_cm_check(spec, cs).cohen_macaulay});
    OracleOptions dp = oo;
    dp.filter = CornerFilter::DynamicProgramming;
    if (corners(spec, dp).corners != cs.corners) problems.push_back("corner filters disagree");
    if (basis_monomials != cs.corners) problems.push_back("fast basis differs from oracle corners");
    const auto hf = hilbert_function_range(spec, cs, 0, hd.stabilization_N + 3);
    for (std::int64_t n = 0; n < static_cast<std::int64_t>(hf.size()); ++n) {
      const bool equal = hf[static_cast<std::size_t>(n)] == hd.polynomial(n);
      if (equal != (n >= hd.stabilization_N)) {
        problems.push_back("Hilbert function vs polynomial at n=" + std::to_string(n));
      }
    }
  }

  std::sort(r.criteria.begin(), r.criteria.end(),
            [](const CriterionVerdict& x, const CriterionVerdict& y) { return x.name < y.name; });
  for (const CriterionVerdict& c : r.criteria) {
    if (c.is_cm != r.is_cm) {
      r.criteria_agree = false;
      problems.push_back("criterion " + c.name + " disagrees");
    }
  }
  if (!problems.empty()) {
    std::string text;
    for (const std::string& p : problems) text += (text.empty() ? "" : "; ") + p;
    r.disagreement = text;
  }
  if (opts.with_basis) r.basis = basis_monomials;
  if (opts.with_trace && fast_basis) r.trace = full_trace(*fast_basis);
  return r;
}

json to_json(const TraceRecord& t, bool curve) {
  json j{{"step", t.step},       {"base", t.base},       {"a_star", t.a_star}, {"b_star", t.b_star},
         {"g_star", t.g_star},   {"h_star", t.h_star},   {"added", t.added},   {"size", t.size}};
  if (curve) j["c_star"] = t.c_star;
  return j;
}

json to_json(const AnalysisReport& r) {
  json j;
  j["spec"] = {{"a", r.a}, {"b", r.b}, {"gens", vec_list(r.gens)}};
  j["subgroup_size"] = r.subgroup_size;
  j["length"] = r.length;
  j["multiplicity"] = r.multiplicity;
  j["constant_C"] = r.constant_C;
  j["stabilization_N"] = r.stabilization_N;
  j["hilbert_polynomial"] = {{"slope", r.multiplicity}, {"intercept", r.multiplicity + r.constant_C}};
  j["is_cm"] = r.is_cm;
  json crit = json::object();
  for (const CriterionVerdict& c : r.criteria) crit[c.name] = c.is_cm;
  j["criteria"] = crit;
  j["criteria_agree"] = r.criteria_agree;
  if (r.disagreement) j["disagreement"] = *r.disagreement;
  if (r.basis) j["basis"] = vec_list(*r.basis);
  if (r.trace) {
    json t = json::array();
    for (const TraceRecord& rec : *r.trace) t.push_back(to_json(rec, false));
    j["trace"] = t;
  }
  j["oracle_checked"] = r.oracle_checked;
  return j;
}

AnalysisReport analysis_from_json(const json& j) {
  AnalysisReport r;
  try {
    r.a = j.at("spec").at("a").get<std::int64_t>();
    r.b = j.at("spec").at("b").get<std::int64_t>();
    r.gens = vec_list_from(j.at("spec").at("gens"));
    r.subgroup_size = j.at("subgroup_size").get<std::int64_t>();
    r.length = j.at("length").get<std::int64_t>();
    r.multiplicity = j.at("multiplicity").get<std::int64_t>();
    r.constant_C = j.at("constant_C").get<std::int64_t>();
    r.stabilization_N = j.at("stabilization_N").get<std::int64_t>();
    r.is_cm = j.at("is_cm").get<bool>();
    for (const auto& [name, v] : j.at("criteria").items()) r.criteria.push_back({name, v.get<bool>()});
    r.criteria_agree = j.at("criteria_agree").get<bool>();
    if (j.contains("disagreement")) r.disagreement = j["disagreement"].get<std::string>();
    if (j.contains("basis")) r.basis = vec_list_from(j["basis"]);
    if (j.contains("trace")) {
      std::vector<TraceRecord> t;
      for (const json& rec : j["trace"]) t.push_back(trace_from_json(rec));
      r.trace = t;
    }
    r.oracle_checked = j.at("oracle_checked").get<bool>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("analysis report: ") + e.what());
  }
  return r;
}

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

VerifyReport verify(const RingSpec& spec, std::optional<std::pair<std::int64_t, std::int64_t>> hf_range,
                    std::uint64_t budget) {
  OracleOptions oo;
  oo.candidate_budget = budget;
  const CornerSet cs = corners(spec, oo);
  const HilbertData hd = hilbert_data(spec, cs);
  const bool cm = is_cm_general(cs);
  VerifyReport rep;
  auto add = [&rep](std::string name, bool passed, std::string detail) {
    rep.checks.push_back({std::move(name), passed, std::move(detail)});
  };

  OracleOptions dp = oo;
  dp.filter = CornerFilter::DynamicProgramming;
  const CornerSet cs_dp = corners(spec, dp);
  add("corner_filters_agree", cs_dp.corners == cs.corners,
      std::to_string(cs.size()) + " corners by candidates, " + std::to_string(cs_dp.size()) + " by table");

  add("length_at_least_multiplicity", static_cast<std::int64_t>(cs.size()) >= hd.multiplicity,
      "length " + std::to_string(cs.size()) + ", multiplicity " + std::to_string(hd.multiplicity));

  const auto [lo, hi] = hf_range.value_or(std::pair<std::int64_t, std::int64_t>{0, hd.stabilization_N + 3});
  {
    const auto hf = hilbert_function_range(spec, cs, lo, hi);
    bool ok = true;
    std::ostringstream detail;
    detail << "P(n)=" << hd.multiplicity << "n+" << hd.polynomial.intercept << " N=" << hd.stabilization_N << " HF:";
    for (std::int64_t n = lo; n <= hi; ++n) {
      const std::int64_t value = hf[static_cast<std::size_t>(n - lo)];
      const std::int64_t p = hd.polynomial(n);
      detail << " " << value;
      if (n >= hd.stabilization_N ? value != p : value >= p) ok = false;
    }
    add("hilbert_function", ok, detail.str());
  }

  std::vector<CriterionVerdict> verdicts{{"corner_uniqueness", cm},
                                         {"length_equals_multiplicity",
                                          static_cast<std::int64_t>(cs.size()) == hd.multiplicity},
                                         {"gsw", gsw_cm_check(spec, cs).cohen_macaulay}};
  const auto& gens = spec.gens();
  if (gens.size() == 2) {
    const FourGenConstants fast = fourgen_constants(spec.a(), spec.b(), gens[0], gens[1]);
    const FourGenConstants slow = fourgen_constants_bruteforce(spec.a(), spec.b(), gens[0], gens[1]);
    add("fourgen_constants", fast == slow,
        "a1,b1=" + std::to_string(fast.both.a) + "," + std::to_string(fast.both.b) + " a2,b2=" +
            std::to_string(fast.trade_second.a) + "," + std::to_string(fast.trade_second.b) + " a3,b3=" +
            std::to_string(fast.trade_first.a) + "," + std::to_string(fast.trade_first.b));
    const BasisResult basis = basis_algorithm(fast);
    add("basis_equals_corners", basis.monomials == cs.corners,
        std::to_string(basis.size()) + " basis monomials, " + std::to_string(basis.iterations()) + " iterations");
    const LengthBound lb = length_bound_check(fast, basis);
    add("length_bound", lb.within && basis.iterations() <= static_cast<std::size_t>(fast.trade_first.a),
        std::to_string(lb.length) + " <= " + std::to_string(lb.bound));
    verdicts.push_back({"fourgen_relation_sign", is_cm_fourgen(fast)});
  } else if (gens.size() == 1) {
    add("basis_equals_corners", threegen_basis(spec.a(), spec.b(), gens[0]) == cs.corners, "three generators");
    verdicts.push_back({"three_generator", true});
  }
  if (auto curve = as_curve(spec)) {
    const CurveConstants cc = curve_constants(*curve);
    bool identities = true;
    try {
      determinant_identities(cc);
    } catch (const Error&) {
      identities = false;
    }
    add("determinant_identities", identities, "d=" + std::to_string(cc.d));
    add("curve_constants_coincide",
        as_fourgen(cc) == fourgen_constants(spec.a(), spec.b(), spec.gens()[0], spec.gens()[1]) ||
            as_fourgen(cc) == fourgen_constants(spec.a(), spec.b(), spec.gens()[1], spec.gens()[0]),
        "");
    verdicts.push_back({"curve_b2_vs_a2_plus_c2", is_cm_curve(cc)});
  }
  {
    bool agree = true;
    std::string detail;
    for (const CriterionVerdict& v : verdicts) {
      agree = agree && v.is_cm == cm;
      detail += (detail.empty() ? "" : " ") + v.name + "=" + (v.is_cm ? "true" : "false");
    }
    add("cm_criteria_agree", agree, detail);
  }
  add("cm_has_trivial_constants", !cm || (hd.constant_C == 0 && hd.stabilization_N == 0),
      "C=" + std::to_string(hd.constant_C) + " N=" + std::to_string(hd.stabilization_N));
  return rep;
}

json to_json(const VerifyReport& r) {
  json checks = json::array();
  for (const VerifyCheck& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return json{{"checks", checks}, {"all_passed", r.all_passed()}};
}

json to_json(const BatchRow& row) {
  json j{{"n", row.n},
         {"l", row.l},
         {"m", row.m},
         {"is_cm", row.is_cm},
         {"H", row.subgroup_order},
         {"basis_size", row.basis_size},
         {"bound_attained", row.bound_attained},
         {"oracle_checked", row.oracle_checked}};
  j["special_case_agrees"] = row.special_case_agrees ? json(*row.special_case_agrees) : json(nullptr);
  j["oracle_agrees"] = row.oracle_agrees ? json(*row.oracle_agrees) : json(nullptr);
  return j;
}

std::string batch_csv_header() {
  return "n,l,m,is_cm,H,basis_size,bound_attained,special_case_agrees,oracle_checked,oracle_agrees";
}

std::string batch_csv_row(const BatchRow& row) {
  std::ostringstream out;
  out << row.n << ',' << row.l << ',' << row.m << ',' << (row.is_cm ? "true" : "false") << ','
      << row.subgroup_order << ',' << row.basis_size << ',' << (row.bound_attained ? "true" : "false") << ','
      << csv_opt(row.special_case_agrees) << ',' << (row.oracle_checked ? "true" : "false") << ','
      << csv_opt(row.oracle_agrees);
  return out.str();
}

std::string render_lattice(const BasisResult& basis, const std::vector<LatticePair>& start) {
  std::int64_t width = 0, height = 0;
  for (const LatticePair& p : basis.lattice) {
    width = std::max(width, p.a + 1);
    height = std::max(height, p.b + 1);
  }
  const std::set<LatticePair> initial(start.begin(), start.end());
  const std::set<LatticePair> all(basis.lattice.begin(), basis.lattice.end());
  std::ostringstream out;
  for (std::int64_t b = 0; b < height; ++b) {
    for (std::int64_t a = 0; a < width; ++a) {
      const LatticePair p{a, b};
      out << (initial.count(p) ? '#' : all.count(p) ? '+' : '.');
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace sgcm
