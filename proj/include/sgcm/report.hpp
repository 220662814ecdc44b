#pragma once

// Ring parsing, whole-ring analysis and the JSON forms of every report.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sgcm/core.hpp"
#include "sgcm/curve.hpp"
#include "sgcm/fourgen.hpp"

namespace sgcm {

/// Accepts {"a":A,"b":B,"gens":[[p,q],...]} or the compact "A,B;p1:q1,p2:q2".
RawRing parse_ring(std::string_view text);

nlohmann::json ring_to_json(const RingSpec& spec);
std::string compact_ring(const RingSpec& spec);

/// If the ring is k[x^n, x^{n-l}y^l, x^{n-m}y^m, y^n] with 0 < l < m < n.
std::optional<CurveSpec> as_curve(const RingSpec& spec);

struct CriterionVerdict {
  std::string name;
  bool is_cm = false;

  friend bool operator==(const CriterionVerdict&, const CriterionVerdict&) = default;
};

struct AnalysisReport {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::vector<ExpVec> gens;
  std::int64_t subgroup_size = 0;
  std::int64_t length = 0;
  std::int64_t multiplicity = 0;
  std::int64_t constant_C = 0;
  std::int64_t stabilization_N = 0;
  bool is_cm = false;
  std::vector<CriterionVerdict> criteria;
  bool criteria_agree = true;
  std::optional<std::string> disagreement;
  std::optional<std::vector<ExpVec>> basis;
  std::optional<std::vector<TraceRecord>> trace;  // initial state first
  bool oracle_checked = false;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct AnalyzeOptions {
  bool oracle = false;
  bool with_basis = false;
  bool with_trace = false;
  std::uint64_t budget = 10'000'000;
};

AnalysisReport analyze(const RingSpec& spec, const AnalyzeOptions& opts = {});

nlohmann::json to_json(const AnalysisReport& r);
AnalysisReport analysis_from_json(const nlohmann::json& j);

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_passed() const;
};

/// Fast paths against the oracle on one ring. The Hilbert-function check
/// covers n = hf_lo..hf_hi; with no range it uses 0..N+3.
VerifyReport verify(const RingSpec& spec, std::optional<std::pair<std::int64_t, std::int64_t>> hf_range,
                    std::uint64_t budget = 10'000'000);

nlohmann::json to_json(const VerifyReport& r);
nlohmann::json to_json(const TraceRecord& t, bool curve);
nlohmann::json to_json(const BatchRow& row);

/// Stable CSV header and rows for curve batches.
std::string batch_csv_header();
std::string batch_csv_row(const BatchRow& row);

/// ASCII picture of a lattice basis: rows are b (downwards), columns a.
/// '#' marks the starting rectangles, '+' the cells added by the extension loop.
std::string render_lattice(const BasisResult& basis, const std::vector<LatticePair>& start);

}  // namespace sgcm
