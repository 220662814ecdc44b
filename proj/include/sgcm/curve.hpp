#pragma once

// Projective monomial curves in P^3: R = k[x^n, x^{n-l} y^l, x^{n-m} y^m, y^n]
// with 0 < l < m < n. The relations are written in integers:
//   both:          a1 l + b1 m = c1 n
//   trade_second: -a2 l + b2 m = c2 n
//   trade_first:   a3 l - b3 m = c3 n

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "sgcm/core.hpp"
#include "sgcm/fourgen.hpp"
#include "sgcm/parallel.hpp"

namespace sgcm {

struct CurveSpec {
  std::int64_t n = 0;
  std::int64_t l = 0;
  std::int64_t m = 0;

  friend bool operator==(const CurveSpec&, const CurveSpec&) = default;
};

/// Throws InvalidCurve unless 0 < l < m < n.
CurveSpec make_curve(std::int64_t n, std::int64_t l, std::int64_t m);

RingSpec curve_ring(const CurveSpec& spec);

struct CurveRelation {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  friend bool operator==(const CurveRelation&, const CurveRelation&) = default;
};

struct CurveConstants {
  CurveSpec spec;
  CurveRelation both;
  CurveRelation trade_second;
  CurveRelation trade_first;
  std::int64_t d = 0;  // gcd(l, m, n)

  std::int64_t h_both() const { return both.c * spec.n; }
  std::int64_t h_trade_second() const { return trade_second.c * spec.n; }
  std::int64_t h_trade_first() const { return trade_first.c * spec.n; }
};

CurveConstants curve_constants(const CurveSpec& spec);

/// Cohen-Macaulay iff b2 >= a2 + c2.
bool is_cm_curve(const CurveConstants& c);

/// Each of n, m, l expressed three ways as d times a 2x2 determinant of the
/// relation coefficients. Throws IdentityViolation if any value disagrees.
struct DeterminantIdentities {
  std::array<std::int64_t, 3> n_values{};
  std::array<std::int64_t, 3> m_values{};
  std::array<std::int64_t, 3> l_values{};
};

DeterminantIdentities determinant_identities(const CurveConstants& c);

/// Closed forms: for l = 1 with n = qm + r, CM iff r = 0 or q + r >= m; for
/// gcd(l,m) = 1 and l + m = n, CM iff m = l + 1. Empty when neither applies.
std::optional<bool> cm_special_cases(const CurveSpec& spec);

/// Monomial basis of R/(x^n, y^n), with c* carried in the trace.
BasisResult curve_basis(const CurveConstants& c);
BasisResult curve_basis(const CurveSpec& spec);

/// The four-generator view (d, n, e, l, f, m) = (n, n, n-l, l, n-m, m).
FourGenConstants as_fourgen(const CurveConstants& c);

struct BatchRow {
  std::int64_t n = 0;
  std::int64_t l = 0;
  std::int64_t m = 0;
  bool is_cm = false;
  std::int64_t subgroup_order = 0;
  std::int64_t basis_size = 0;
  bool bound_attained = false;
  std::optional<bool> special_case_agrees;
  bool oracle_checked = false;
  std::optional<bool> oracle_agrees;

  friend bool operator==(const BatchRow&, const BatchRow&) = default;
};

struct BatchOptions {
  std::int64_t oracle_up_to = 0;  // cross-check against the oracle for n <= this
  Execution execution = Execution::Parallel;
};

/// One row per curve with 0 < l < m < n <= n_max, ordered by (n, l, m).
std::vector<BatchRow> batch_classify(std::int64_t n_max, const BatchOptions& opts = {});

/// Evaluates a single row; shared by both execution paths.
BatchRow classify_curve(const CurveSpec& spec, bool with_oracle);

}  // namespace sgcm
