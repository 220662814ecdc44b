#include "sgcm/curve.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "extension.hpp"
#include "sgcm/checked.hpp"
#include "sgcm/error.hpp"
#include "sgcm/hilbert.hpp"
#include "sgcm/oracle.hpp"

namespace sgcm {

namespace {

// Inverse of x modulo mod, for gcd(x, mod) = 1 and mod >= 1.
std::int64_t inverse_mod(std::int64_t x, std::int64_t mod) {
  std::int64_t old_r = mod_floor(x, mod), r = mod, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  return mod_floor(old_s, mod);
}

// The unique k in [0, n/gcd(coef,n)) with k*coef = rhs (mod n), if any.
std::optional<std::int64_t> solve_linear(std::int64_t coef, std::int64_t rhs, std::int64_t n) {
  const std::int64_t g = std::gcd(coef, n);
  const std::int64_t r = mod_floor(rhs, n);
  if (r % g != 0) return std::nullopt;
  const std::int64_t mod = n / g;
  if (mod == 1) return 0;
  const __int128 k = static_cast<__int128>(r / g) * inverse_mod(coef / g, mod) % mod;
  return static_cast<std::int64_t>(k);
}

void sign_violation(const CurveSpec& s) {
  throw Error(ErrorCode::IdentityViolation, "sign implication failed for curve (" + std::to_string(s.n) + "," +
                                                std::to_string(s.l) + "," + std::to_string(s.m) + ")");
}

struct CStar {
  std::int64_t c = 0;
  CStar operator+(const CStar& o) const { return {checked_add(c, o.c)}; }
};

}  // namespace

CurveSpec make_curve(std::int64_t n, std::int64_t l, std::int64_t m) {
  if (!(0 < l && l < m && m < n)) {
    throw Error(ErrorCode::InvalidCurve, "need 0 < l < m < n, got n=" + std::to_string(n) +
                                             " l=" + std::to_string(l) + " m=" + std::to_string(m));
  }
  return {n, l, m};
}

RingSpec curve_ring(const CurveSpec& spec) {
  return validate({spec.n, spec.n, {{spec.n - spec.l, spec.l}, {spec.n - spec.m, spec.m}}});
}

CurveConstants curve_constants(const CurveSpec& raw) {
  const CurveSpec spec = make_curve(raw.n, raw.l, raw.m);
  const std::int64_t n = spec.n, l = spec.l, m = spec.m;
  CurveConstants c;
  c.spec = spec;
  c.d = std::gcd(std::gcd(l, m), n);

  // Least b with some 0 <= a < n/gcd(l,n) and c > 0 in -a l + b m = c n.
  // b = n/gcd(m,n) always works with a = 0.
  const std::int64_t b_limit = n / std::gcd(m, n);
  bool found = false;
  for (std::int64_t b = 1; b <= b_limit && !found; ++b) {
    const auto a = solve_linear(l, checked_mul(b, m), n);
    if (!a) continue;
    const std::int64_t cc = (checked_mul(b, m) - checked_mul(*a, l)) / n;
    // x-coordinate of -a(n-l,l) + b(n-m,m) is (b - a - c) n.
    if (b - *a - cc >= 0 && cc <= 0) sign_violation(spec);
    if (cc > 0) {
      c.trade_second = {*a, b, cc};
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::NonTermination, "no relation -a l + b m = c n with c > 0");

  // Least a > 0 with some 0 <= b < n/gcd(m,n) and c >= 0 in a l - b m = c n.
  const std::int64_t a_limit = n / std::gcd(l, n);
  found = false;
  for (std::int64_t a = 1; a <= a_limit && !found; ++a) {
    const auto b = solve_linear(m, checked_mul(a, l), n);
    if (!b) continue;
    const std::int64_t cc = div_floor(checked_mul(a, l) - checked_mul(*b, m), n);
    if (cc >= 0 && a - *b - cc <= 0) sign_violation(spec);
    if (cc >= 0) {
      c.trade_first = {a, *b, cc};
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::NonTermination, "no relation a l - b m = c n with c >= 0");

  c.both = {c.trade_first.a - c.trade_second.a, c.trade_second.b - c.trade_first.b,
            c.trade_second.c + c.trade_first.c};
  return c;
}

bool is_cm_curve(const CurveConstants& c) { return c.trade_second.b >= c.trade_second.a + c.trade_second.c; }

DeterminantIdentities determinant_identities(const CurveConstants& c) {
  const std::int64_t a1 = c.both.a, b1 = c.both.b, c1 = c.both.c;
  const std::int64_t a2 = c.trade_second.a, b2 = c.trade_second.b, c2 = c.trade_second.c;
  const std::int64_t a3 = c.trade_first.a, b3 = c.trade_first.b, c3 = c.trade_first.c;
  const std::int64_t d = c.d;
  auto det = [](std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
    return checked_sub(checked_mul(p, s), checked_mul(q, r));
  };

  DeterminantIdentities out;
  out.n_values = {d * det(a3, -b3, -a2, b2), d * det(a3, -b3, a1, b1), d * det(a1, b1, -a2, b2)};
  out.m_values = {d * det(a3, c3, -a2, c2), d * det(a3, c3, a1, c1), d * det(a1, c1, -a2, c2)};
  out.l_values = {d * det(c3, -b3, c2, b2), d * det(c3, -b3, c1, b1), d * det(c1, b1, c2, b2)};

  auto all_equal = [](const std::array<std::int64_t, 3>& v, std::int64_t target) {
    return v[0] == target && v[1] == target && v[2] == target;
  };
  if (!all_equal(out.n_values, c.spec.n) || !all_equal(out.m_values, c.spec.m) ||
      !all_equal(out.l_values, c.spec.l)) {
    throw Error(ErrorCode::IdentityViolation, "determinant identity failed for curve (" +
                                                  std::to_string(c.spec.n) + "," + std::to_string(c.spec.l) + "," +
                                                  std::to_string(c.spec.m) + ")");
  }
  return out;
}

std::optional<bool> cm_special_cases(const CurveSpec& raw) {
  const CurveSpec s = make_curve(raw.n, raw.l, raw.m);
  if (s.l == 1) {
    const std::int64_t q = s.n / s.m;
    const std::int64_t r = s.n % s.m;
    return r == 0 || q + r >= s.m;
  }
  if (std::gcd(s.l, s.m) == 1 && s.l + s.m == s.n) return s.m == s.l + 1;
  return std::nullopt;
}

BasisResult curve_basis(const CurveConstants& c) {
  detail::ExtensionShape shape{c.both.a, c.both.b, c.trade_second.a, c.trade_second.b, c.trade_first.a,
                               c.trade_first.b};
  const std::int64_t n = c.spec.n;
  const auto guard = static_cast<std::size_t>(n / c.d) + 1;
  BasisResult r = detail::run_extension(
      shape, CStar{c.trade_second.c}, CStar{c.both.c}, CStar{c.trade_second.c},
      [](std::int64_t a_star, std::int64_t b_star, const CStar& p) { return b_star < a_star + p.c; },
      [n](TraceRecord& rec, const CStar& p) {
        rec.c_star = p.c;
        rec.g_star = (rec.b_star - rec.a_star - p.c) * n;
        rec.h_star = p.c * n;
      },
      guard);
  const ExpVec first{n - c.spec.l, c.spec.l};
  const ExpVec second{n - c.spec.m, c.spec.m};
  r.monomials.reserve(r.lattice.size());
  for (const LatticePair& p : r.lattice) {
    r.monomials.push_back({checked_add(checked_mul(p.a, first.alpha), checked_mul(p.b, second.alpha)),
                           checked_add(checked_mul(p.a, first.beta), checked_mul(p.b, second.beta))});
  }
  std::sort(r.monomials.begin(), r.monomials.end(), beta_then_alpha);
  return r;
}

BasisResult curve_basis(const CurveSpec& spec) { return curve_basis(curve_constants(spec)); }

FourGenConstants as_fourgen(const CurveConstants& c) {
  const std::int64_t n = c.spec.n;
  FourGenConstants f;
  f.d = n;
  f.n = n;
  f.first = {n - c.spec.l, c.spec.l};
  f.second = {n - c.spec.m, c.spec.m};
  f.trade_second = {c.trade_second.a, c.trade_second.b,
                    (c.trade_second.b - c.trade_second.a - c.trade_second.c) * n, c.trade_second.c * n};
  f.trade_first = {c.trade_first.a, c.trade_first.b, (c.trade_first.a - c.trade_first.b - c.trade_first.c) * n,
                   c.trade_first.c * n};
  f.both = {c.both.a, c.both.b, f.trade_second.g + f.trade_first.g, c.both.c * n};
  return f;
}

BatchRow classify_curve(const CurveSpec& spec, bool with_oracle) {
  const CurveConstants c = curve_constants(spec);
  const BasisResult basis = curve_basis(c);
  BatchRow row;
  row.n = spec.n;
  row.l = spec.l;
  row.m = spec.m;
  row.is_cm = is_cm_curve(c);
  row.subgroup_order = spec.n / c.d;
  row.basis_size = static_cast<std::int64_t>(basis.size());
  row.bound_attained = row.basis_size == row.subgroup_order * (row.subgroup_order + 1) / 2;
  if (auto special = cm_special_cases(spec)) row.special_case_agrees = (*special == row.is_cm);
  if (with_oracle) {
    const RingSpec ring = curve_ring(spec);
    const CornerSet cs = corners(ring);
    const GswResult gsw = gsw_cm_check(ring, cs);
    row.oracle_checked = true;
    row.oracle_agrees = cs.corners == basis.monomials && gsw.cohen_macaulay == row.is_cm &&
                        is_cm_general(cs) == row.is_cm;
  }
  return row;
}

std::vector<BatchRow> batch_classify(std::int64_t n_max, const BatchOptions& opts) {
  if (n_max < 3) throw Error(ErrorCode::InvalidCurve, "n_max must be at least 3");
  std::vector<CurveSpec> specs;
  for (std::int64_t n = 3; n <= n_max; ++n)
    for (std::int64_t l = 1; l < n; ++l)
      for (std::int64_t m = l + 1; m < n; ++m) specs.push_back({n, l, m});
  std::vector<BatchRow> rows(specs.size());
  for_each_index(specs.size(), opts.execution,
                 [&](std::size_t i) { rows[i] = classify_curve(specs[i], specs[i].n <= opts.oracle_up_to); });
  return rows;
}

}  // namespace sgcm
