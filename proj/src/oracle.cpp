#include "sgcm/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <set>
#include <tuple>
#include <string>

#include "sgcm/checked.hpp"
#include "sgcm/error.hpp"

namespace sgcm {

namespace {

struct Candidate {
  std::size_t cls;  // dense class index
  ExpVec v;
};

bool candidate_less(const Candidate& x, const Candidate& y) {
  if (x.cls != y.cls) return x.cls < y.cls;
  return beta_then_alpha(x.v, y.v);
}

// All sums c_1 g_1 + ... + c_t g_t with 0 <= c_i < ord(g_i). A generator
// used ord(g_i) times lands in (a,0)N + (0,b)N, so these sums together with
// (a,0) and (0,b) still generate S.
std::vector<Candidate> enumerate_candidates(const RingSpec& spec, const OracleOptions& opts) {
  const auto& gens = spec.gens();
  std::vector<std::int64_t> radix;
  radix.reserve(gens.size());
  std::uint64_t total = 1;
  for (const ExpVec& g : gens) {
    std::int64_t o = order_of(class_of(g, spec), spec.a(), spec.b());
    radix.push_back(o);
    if (total > opts.candidate_budget / static_cast<std::uint64_t>(o)) {
      throw Error(ErrorCode::BudgetExceeded,
                  "corner candidates exceed budget of " + std::to_string(opts.candidate_budget));
    }
    total *= static_cast<std::uint64_t>(o);
  }
  std::vector<Candidate> out(total);
  const std::int64_t b = spec.b();
  const std::int64_t a = spec.a();
  for_each_index(out.size(), opts.execution, [&](std::size_t idx) {
    std::uint64_t rest = idx;
    ExpVec v{0, 0};
    for (std::size_t k = 0; k < gens.size(); ++k) {
      auto digit = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(radix[k]));
      rest /= static_cast<std::uint64_t>(radix[k]);
      v.alpha = checked_add(v.alpha, checked_mul(digit, gens[k].alpha));
      v.beta = checked_add(v.beta, checked_mul(digit, gens[k].beta));
    }
    out[idx] = {static_cast<std::size_t>((v.alpha % a) * b + (v.beta % b)), v};
  });
  return out;
}

// Pareto-minimal points per class of a (class, beta, alpha)-sorted,
// duplicate-free candidate list.
std::vector<ExpVec> minimal_per_class(const std::vector<Candidate>& sorted) {
  std::vector<ExpVec> out;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t cls = sorted[i].cls;
    std::int64_t min_alpha = std::numeric_limits<std::int64_t>::max();
    for (; i < sorted.size() && sorted[i].cls == cls; ++i) {
      if (sorted[i].v.alpha < min_alpha) {
        out.push_back(sorted[i].v);
        min_alpha = sorted[i].v.alpha;
      }
    }
  }
  return out;
}

std::vector<ExpVec> filter_with_table(const RingSpec& spec, const std::vector<Candidate>& sorted) {
  Semigroup sg(spec);
  std::vector<ExpVec> out;
  for (const Candidate& c : sorted) {
    ExpVec v = c.v;
    bool left = v.alpha >= spec.a() && sg.contains({v.alpha - spec.a(), v.beta});
    bool down = v.beta >= spec.b() && sg.contains({v.alpha, v.beta - spec.b()});
    if (!left && !down) out.push_back(v);
  }
  return out;
}

// Points are taken off the heap by weighted degree, and every corner below a
// point has smaller degree, so the corners found so far settle membership.
std::vector<ExpVec> closure_corners(const RingSpec& spec, const OracleOptions& opts) {
  using Entry = std::tuple<std::int64_t, std::int64_t, std::int64_t>;  // degree, beta, alpha
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  std::set<ExpVec> seen{{0, 0}};
  std::map<ClassVec, std::vector<ExpVec>> found;
  std::vector<ExpVec> out;
  heap.emplace(0, 0, 0);
  while (!heap.empty()) {
    const auto [deg, beta, alpha] = heap.top();
    heap.pop();
    const ExpVec v{alpha, beta};
    auto& same = found[class_of(v, spec)];
    const bool covered = std::any_of(same.begin(), same.end(), [&](const ExpVec& c) { return divides(c, v); });
    if (covered) continue;
    same.push_back(v);
    out.push_back(v);
    for (const ExpVec& g : spec.gens()) {
      const ExpVec w = v + g;
      if (!seen.insert(w).second) continue;
      if (seen.size() > opts.candidate_budget) {
        throw Error(ErrorCode::BudgetExceeded,
                    "corner closure exceeds budget of " + std::to_string(opts.candidate_budget));
      }
      heap.emplace(weighted_degree(w, spec), w.beta, w.alpha);
    }
  }
  return out;
}

class StaircaseMembership {
 public:
  StaircaseMembership(const RingSpec& spec, const CornerSet& cs)
      : a_(spec.a()), b_(spec.b()), per_class_(static_cast<std::size_t>(spec.a() * spec.b()), nullptr) {
    for (const auto& [cls, list] : cs.by_class) per_class_[static_cast<std::size_t>(cls.p * b_ + cls.q)] = &list;
  }

  bool contains(LatticeVec v) const {
    if (v.x < 0 || v.y < 0) return false;
    const auto* list = per_class_[static_cast<std::size_t>((v.x % a_) * b_ + (v.y % b_))];
    if (list == nullptr) return false;
    for (const ExpVec& c : *list) {
      if (c.beta > v.y) break;
      if (c.alpha <= v.x) return true;
    }
    return false;
  }

 private:
  std::int64_t a_;
  std::int64_t b_;
  std::vector<const std::vector<ExpVec>*> per_class_;
};

void check_fourgen_input(std::int64_t d, std::int64_t n, ExpVec first, ExpVec second) {
  if (d < 1 || n < 1) throw Error(ErrorCode::InvalidDN, "d and n must be positive");
  if (first.alpha < 0 || first.beta < 0 || second.alpha < 0 || second.beta < 0) {
    throw Error(ErrorCode::NegativeExponent, "generator exponents must be nonnegative");
  }
  if (first == ExpVec{0, 0}) throw Error(ErrorCode::ZeroGenerator, "(e,l) = (0,0)");
  if (second == ExpVec{0, 0}) throw Error(ErrorCode::ZeroGeneratorPair, "(f,m) = (0,0)");
}

}  // namespace

ExpVec CornerSet::max_extent() const {
  ExpVec m{0, 0};
  for (const ExpVec& c : corners) {
    m.alpha = std::max(m.alpha, c.alpha);
    m.beta = std::max(m.beta, c.beta);
  }
  return m;
}

CornerSet corners(const RingSpec& spec, const OracleOptions& opts) {
  CornerSet cs;
  if (opts.enumeration == CornerEnumeration::Closure) {
    cs.corners = closure_corners(spec, opts);
  } else {
    std::vector<Candidate> cand = enumerate_candidates(spec, opts);
    std::sort(cand.begin(), cand.end(), candidate_less);
    cand.erase(std::unique(cand.begin(), cand.end(),
                           [](const Candidate& x, const Candidate& y) { return x.cls == y.cls && x.v == y.v; }),
               cand.end());
    cs.corners = opts.filter == CornerFilter::Candidates ? minimal_per_class(cand) : filter_with_table(spec, cand);
  }
  for (const ExpVec& c : cs.corners) cs.by_class[class_of(c, spec)].push_back(c);
  std::sort(cs.corners.begin(), cs.corners.end(), beta_then_alpha);
  for (auto& [cls, list] : cs.by_class) std::sort(list.begin(), list.end(), beta_then_alpha);
  return cs;
}

std::int64_t length_mod_parameters(const RingSpec& spec, const OracleOptions& opts) {
  return static_cast<std::int64_t>(corners(spec, opts).size());
}

std::vector<std::int64_t> hilbert_function_range(const RingSpec& spec, const CornerSet& cs, std::int64_t lo,
                                                 std::int64_t hi) {
  if (lo < 0 || hi < lo) return {};
  const std::int64_t a = spec.a();
  const std::int64_t b = spec.b();
  const ExpVec ext = cs.max_extent();
  const std::int64_t alpha_bound = checked_add(ext.alpha, checked_mul(checked_add(hi, 1), a));
  const std::int64_t beta_bound = checked_add(ext.beta, checked_mul(checked_add(hi, 1), b));

  std::vector<std::int64_t> counts(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& [cls, list] : cs.by_class) {
    for (std::int64_t alpha = cls.p; alpha <= alpha_bound; alpha += a) {
      for (std::int64_t beta = cls.q; beta <= beta_bound; beta += b) {
        // Order of the monomial in the (X,Y)-adic filtration.
        std::int64_t order = -1;
        for (const ExpVec& c : list) {
          if (c.beta > beta) break;
          if (c.alpha > alpha) continue;
          order = std::max(order, (alpha - c.alpha) / a + (beta - c.beta) / b);
        }
        if (order >= lo && order <= hi) ++counts[static_cast<std::size_t>(order - lo)];
      }
    }
  }
  return counts;
}

std::int64_t hilbert_function(const RingSpec& spec, std::int64_t n, const OracleOptions& opts) {
  if (n < 0) return 0;
  return hilbert_function_range(spec, corners(spec, opts), n, n).front();
}

GswResult gsw_cm_check(const RingSpec& spec, const CornerSet& cs) {
  const Lattice group(spec);
  const StaircaseMembership in_s(spec, cs);
  const ExpVec ext = cs.max_extent();
  const std::int64_t a = spec.a();
  const std::int64_t b = spec.b();
  for (std::int64_t y = -b; y <= ext.beta; ++y) {
    for (std::int64_t x = -a; x <= ext.alpha; ++x) {
      LatticeVec v{x, y};
      if (!group.contains(v)) continue;
      if (in_s.contains(v)) continue;
      if (in_s.contains({x + a, y}) && in_s.contains({x, y + b})) return {false, v};
    }
  }
  return {true, std::nullopt};
}

GswResult gsw_cm_check(const RingSpec& spec, const OracleOptions& opts) {
  return gsw_cm_check(spec, corners(spec, opts));
}

FourGenConstants fourgen_constants_bruteforce(std::int64_t d, std::int64_t n, ExpVec first, ExpVec second) {
  check_fourgen_input(d, n, first, second);
  const std::int64_t e = first.alpha, l = first.beta, f = second.alpha, m = second.beta;
  const std::int64_t ord_first = order_of({first.alpha % d, first.beta % n}, d, n);
  const std::int64_t ord_second = order_of({second.alpha % d, second.beta % n}, d, n);
  auto in_lattice = [&](std::int64_t g, std::int64_t h) { return g % d == 0 && h % n == 0; };

  FourGenConstants out;
  out.d = d;
  out.n = n;
  out.first = first;
  out.second = second;

  bool found = false;
  for (std::int64_t bb = 1; bb <= ord_second && !found; ++bb) {
    for (std::int64_t aa = 0; aa < ord_first; ++aa) {
      std::int64_t g = checked_sub(checked_mul(bb, f), checked_mul(aa, e));
      std::int64_t h = checked_sub(checked_mul(bb, m), checked_mul(aa, l));
      if (!in_lattice(g, h)) continue;
      if (g > 0 || h > 0 || (g == 0 && h == 0)) {
        out.trade_second = {aa, bb, g, h};
        found = true;
        break;
      }
    }
  }
  if (!found) throw Error(ErrorCode::NonTermination, "no relation for (f,m) within its order");

  found = false;
  for (std::int64_t aa = 1; aa <= ord_first && !found; ++aa) {
    for (std::int64_t bb = 0; bb < ord_second; ++bb) {
      std::int64_t g = checked_sub(checked_mul(aa, e), checked_mul(bb, f));
      std::int64_t h = checked_sub(checked_mul(aa, l), checked_mul(bb, m));
      if (!in_lattice(g, h)) continue;
      if (g >= 0 && h >= 0 && (g != 0 || h != 0)) {
        out.trade_first = {aa, bb, g, h};
        found = true;
        break;
      }
    }
  }
  if (!found) throw Error(ErrorCode::NonTermination, "no relation for (e,l) within its order");

  // Smallest (g,h) under "h first, then g" with a, b > 0 and b <= b2. For a
  // fixed b the valid a form one residue class mod ord(e,l), so a <= ord(e,l).
  found = false;
  Relation best;
  for (std::int64_t bb = 1; bb <= out.trade_second.b; ++bb) {
    for (std::int64_t aa = 1; aa <= ord_first; ++aa) {
      std::int64_t g = checked_add(checked_mul(aa, e), checked_mul(bb, f));
      std::int64_t h = checked_add(checked_mul(aa, l), checked_mul(bb, m));
      if (!in_lattice(g, h)) continue;
      if (!found || h < best.h || (h == best.h && g < best.g)) {
        best = {aa, bb, g, h};
        found = true;
      }
    }
  }
  if (!found) throw Error(ErrorCode::NonTermination, "no combined relation with b <= b2");
  out.both = best;
  return out;
}

}  // namespace sgcm
