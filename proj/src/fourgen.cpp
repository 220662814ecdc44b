#include "sgcm/fourgen.hpp"

#include <algorithm>

#include "extension.hpp"
#include "sgcm/checked.hpp"
#include "sgcm/error.hpp"

namespace sgcm {

namespace {

constexpr std::int64_t kMaxResidueTable = std::int64_t{1} << 24;

// For each class of Z/d + Z/n, the least k in [0, ord(v)) with k*v in that
// class, or -1 when the class is not a multiple of v.
class MultipleTable {
 public:
  MultipleTable(std::int64_t d, std::int64_t n, ExpVec v) : d_(d), n_(n) {
    index_.assign(static_cast<std::size_t>(d * n), -1);
    const std::int64_t p = v.alpha % d;
    const std::int64_t q = v.beta % n;
    std::int64_t x = 0, y = 0, k = 0;
    while (index_[slot(x, y)] < 0) {
      index_[slot(x, y)] = k++;
      x = (x + p) % d;
      y = (y + q) % n;
    }
    order_ = k;
  }

  std::int64_t order() const { return order_; }
  std::int64_t lookup(std::int64_t x, std::int64_t y) const { return index_[slot(x % d_, y % n_)]; }

 private:
  std::size_t slot(std::int64_t x, std::int64_t y) const { return static_cast<std::size_t>(x * n_ + y); }

  std::int64_t d_;
  std::int64_t n_;
  std::int64_t order_ = 0;
  std::vector<std::int64_t> index_;
};

struct GH {
  std::int64_t g = 0;
  std::int64_t h = 0;
  GH operator+(const GH& o) const { return {checked_add(g, o.g), checked_add(h, o.h)}; }
};

}  // namespace

std::int64_t FourGenConstants::subgroup_order() const {
  return checked_sub(checked_mul(trade_first.a, trade_second.b), checked_mul(trade_second.a, trade_first.b));
}

ExpVec FourGenConstants::image(LatticePair p) const {
  return {checked_add(checked_mul(p.a, first.alpha), checked_mul(p.b, second.alpha)),
          checked_add(checked_mul(p.a, first.beta), checked_mul(p.b, second.beta))};
}

FourGenConstants fourgen_constants(std::int64_t d, std::int64_t n, ExpVec first, ExpVec second) {
  if (d < 1 || n < 1) throw Error(ErrorCode::InvalidDN, "d and n must be positive");
  if (first.alpha < 0 || first.beta < 0 || second.alpha < 0 || second.beta < 0) {
    throw Error(ErrorCode::NegativeExponent, "generator exponents must be nonnegative");
  }
  if (first == ExpVec{0, 0}) throw Error(ErrorCode::ZeroGenerator, "(e,l) = (0,0)");
  if (second == ExpVec{0, 0}) {
    throw Error(ErrorCode::ZeroGeneratorPair, "(f,m) = (0,0); use the three-generator path");
  }
  if (d > kMaxResidueTable / n) throw Error(ErrorCode::BudgetExceeded, "residue table for (d,n) too large");

  const MultipleTable of_first(d, n, first);
  const MultipleTable of_second(d, n, second);

  FourGenConstants c;
  c.d = d;
  c.n = n;
  c.first = first;
  c.second = second;

  // b2: the first multiple of (f,m) congruent to a multiple of (e,l) whose
  // difference has a positive coordinate or vanishes. At b = ord(f,m) the
  // multiple a = 0 always qualifies.
  bool found = false;
  for (std::int64_t b = 1; b <= of_second.order() && !found; ++b) {
    const std::int64_t a = of_first.lookup(checked_mul(b, second.alpha), checked_mul(b, second.beta));
    if (a < 0) continue;
    const std::int64_t g = checked_sub(checked_mul(b, second.alpha), checked_mul(a, first.alpha));
    const std::int64_t h = checked_sub(checked_mul(b, second.beta), checked_mul(a, first.beta));
    if (g > 0 || h > 0 || (g == 0 && h == 0)) {
      c.trade_second = {a, b, g, h};
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::NonTermination, "no relation for (f,m)");

  found = false;
  for (std::int64_t a = 1; a <= of_first.order() && !found; ++a) {
    const std::int64_t b = of_second.lookup(checked_mul(a, first.alpha), checked_mul(a, first.beta));
    if (b < 0) continue;
    const std::int64_t g = checked_sub(checked_mul(a, first.alpha), checked_mul(b, second.alpha));
    const std::int64_t h = checked_sub(checked_mul(a, first.beta), checked_mul(b, second.beta));
    if (g >= 0 && h >= 0 && (g != 0 || h != 0)) {
      c.trade_first = {a, b, g, h};
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::NonTermination, "no relation for (e,l)");

  c.both = {c.trade_first.a - c.trade_second.a, c.trade_second.b - c.trade_first.b,
            checked_add(c.trade_second.g, c.trade_first.g), checked_add(c.trade_second.h, c.trade_first.h)};
  return c;
}

std::vector<LatticePair> candidate_basis_B0(const FourGenConstants& c) {
  detail::ExtensionShape s{c.both.a, c.both.b, c.trade_second.a, c.trade_second.b, c.trade_first.a,
                           c.trade_first.b};
  return detail::rectangle_union(s);
}

bool is_cm_fourgen(const FourGenConstants& c) { return c.trade_second.g >= 0 && c.trade_second.h >= 0; }

BasisResult basis_algorithm(const FourGenConstants& c) {
  detail::ExtensionShape s{c.both.a, c.both.b, c.trade_second.a, c.trade_second.b, c.trade_first.a,
                           c.trade_first.b};
  const auto guard = static_cast<std::size_t>(c.subgroup_order()) + 1;
  BasisResult r = detail::run_extension(
      s, GH{c.trade_second.g, c.trade_second.h}, GH{c.both.g, c.both.h}, GH{c.trade_second.g, c.trade_second.h},
      [](std::int64_t, std::int64_t, const GH& p) { return p.g < 0 || p.h < 0; },
      [](TraceRecord& rec, const GH& p) {
        rec.g_star = p.g;
        rec.h_star = p.h;
      },
      guard);
  r.monomials.reserve(r.lattice.size());
  for (const LatticePair& p : r.lattice) r.monomials.push_back(c.image(p));
  std::sort(r.monomials.begin(), r.monomials.end(), beta_then_alpha);
  return r;
}

LengthBound length_bound_check(const FourGenConstants& c, const BasisResult& basis) {
  LengthBound lb;
  lb.length = static_cast<std::int64_t>(basis.size());
  lb.subgroup_order = c.subgroup_order();
  lb.bound = checked_mul(lb.subgroup_order, lb.subgroup_order + 1) / 2;
  lb.within = lb.length <= lb.bound && lb.subgroup_order <= checked_mul(c.d, c.n);
  lb.attained = lb.length == lb.bound;
  return lb;
}

std::vector<ExpVec> threegen_basis(std::int64_t d, std::int64_t n, ExpVec first) {
  if (d < 1 || n < 1) throw Error(ErrorCode::InvalidDN, "d and n must be positive");
  if (first.alpha < 0 || first.beta < 0) throw Error(ErrorCode::NegativeExponent, "negative exponent");
  if (first == ExpVec{0, 0}) throw Error(ErrorCode::ZeroGenerator, "(e,l) = (0,0)");
  const std::int64_t ord = order_of({first.alpha % d, first.beta % n}, d, n);
  std::vector<ExpVec> out;
  out.reserve(static_cast<std::size_t>(ord));
  for (std::int64_t k = 0; k < ord; ++k) out.push_back({checked_mul(k, first.alpha), checked_mul(k, first.beta)});
  std::sort(out.begin(), out.end(), beta_then_alpha);
  return out;
}

}  // namespace sgcm
