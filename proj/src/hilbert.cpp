#include "sgcm/hilbert.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "sgcm/checked.hpp"
#include "sgcm/error.hpp"

namespace sgcm {

namespace {

// Length of the longest run skipped by the greedy chain that starts at the
// top of the ladder and repeatedly steps down to the largest lower index whose
// degree does not exceed the current one. Index 0 has the least degree, so
// the chain always ends there.
std::int64_t longest_skip(const std::vector<std::int64_t>& degrees) {
  std::int64_t longest = 0;
  auto cur = static_cast<std::int64_t>(degrees.size()) - 1;
  while (cur > 0) {
    std::int64_t next = cur - 1;
    while (next > 0 && degrees[static_cast<std::size_t>(next)] > degrees[static_cast<std::size_t>(cur)]) --next;
    longest = std::max(longest, cur - next - 1);
    cur = next;
  }
  return longest;
}

}  // namespace

std::int64_t HilbertPolynomial::operator()(std::int64_t n) const {
  return checked_add(checked_mul(slope, n), intercept);
}

StaircaseClass class_staircase(const RingSpec& spec, const CornerSet& cs, ClassVec cls) {
  auto it = cs.by_class.find(cls);
  if (it == cs.by_class.end() || it->second.empty()) {
    throw Error(ErrorCode::ClassNotInSubgroup,
                "class (" + std::to_string(cls.p) + "," + std::to_string(cls.q) + ") is not in H");
  }
  const std::int64_t a = spec.a();
  const std::int64_t b = spec.b();

  StaircaseClass st;
  st.cls = cls;
  st.corners = it->second;

  st.alpha_pq = st.corners.front();
  std::int64_t best = weighted_degree(st.alpha_pq, spec);
  for (const ExpVec& c : st.corners) {
    const std::int64_t deg = weighted_degree(c, spec);
    if (deg < best || (deg == best && beta_then_alpha(c, st.alpha_pq))) {
      best = deg;
      st.alpha_pq = c;
    }
  }

  // Corners run with beta ascending and alpha descending.
  const std::int64_t min_beta = st.corners.front().beta;
  const std::int64_t min_alpha = st.corners.back().alpha;
  st.s = (st.alpha_pq.beta - min_beta) / b;
  st.t = (st.alpha_pq.alpha - min_alpha) / a;

  std::vector<std::int64_t> down{best};
  for (std::int64_t i = 1; i <= st.s; ++i) {
    const std::int64_t row = st.alpha_pq.beta - i * b;
    std::int64_t alpha = std::numeric_limits<std::int64_t>::max();
    for (const ExpVec& c : st.corners)
      if (c.beta <= row) alpha = std::min(alpha, c.alpha);
    st.beta_ladder.push_back({alpha, row});
    down.push_back(weighted_degree(st.beta_ladder.back(), spec));
  }

  std::vector<std::int64_t> left{best};
  for (std::int64_t i = 1; i <= st.t; ++i) {
    const std::int64_t col = st.alpha_pq.alpha - i * a;
    std::int64_t beta = std::numeric_limits<std::int64_t>::max();
    for (const ExpVec& c : st.corners)
      if (c.alpha <= col) beta = std::min(beta, c.beta);
    st.underbeta_ladder.push_back({col, beta});
    left.push_back(weighted_degree(st.underbeta_ladder.back(), spec));
  }

  st.u = longest_skip(down);
  st.u_prime = longest_skip(left);
  st.n_pq = std::max(st.u, st.u_prime);
  return st;
}

StaircaseClass class_staircase(const RingSpec& spec, ClassVec cls, const OracleOptions& opts) {
  return class_staircase(spec, corners(spec, opts), cls);
}

HilbertData hilbert_data(const RingSpec& spec, const CornerSet& cs) {
  const ClassGroup group = subgroup(spec);
  HilbertData hd;
  hd.multiplicity = static_cast<std::int64_t>(group.size());
  for (const ClassVec& cls : group.elements()) {
    const StaircaseClass st = class_staircase(spec, cs, cls);
    hd.constant_C = checked_add(hd.constant_C, st.s + st.t);
    hd.stabilization_N = std::max(hd.stabilization_N, st.n_pq);
  }
  hd.polynomial = {hd.multiplicity, checked_add(hd.multiplicity, hd.constant_C)};
  return hd;
}

HilbertData hilbert_data(const RingSpec& spec, const OracleOptions& opts) {
  return hilbert_data(spec, corners(spec, opts));
}

bool is_cm_general(const CornerSet& cs) {
  return std::all_of(cs.by_class.begin(), cs.by_class.end(), [](const auto& kv) { return kv.second.size() == 1; });
}

bool is_cm_general(const RingSpec& spec, const OracleOptions& opts) { return is_cm_general(corners(spec, opts)); }

RingSpec construct_ring(std::int64_t a, std::int64_t b, const std::vector<ClassVec>& subgroup_gens,
                        std::int64_t constant, std::int64_t stab) {
  if (constant < 0 || stab < 0) throw Error(ErrorCode::NegativeExponent, "C and m must be nonnegative");
  const ClassGroup group = subgroup_generated_by(a, b, subgroup_gens);
  if (group.size() <= 1) throw Error(ErrorCode::TrivialSubgroup, "the generated subgroup is {(0,0)}");

  // elements() is sorted, so index 1 is the lex-least nonzero class.
  const ClassVec pivot = group.elements()[1];
  const std::int64_t big = checked_add(checked_add(constant, stab), 1);
  const std::int64_t top = checked_add(big, checked_add(constant, stab));

  RawRing raw;
  raw.a = a;
  raw.b = b;
  for (const ClassVec& c : group.elements()) {
    if (c == ClassVec{0, 0}) continue;
    raw.gens.emplace_back(checked_add(c.p, checked_mul(big, a)), checked_add(c.q, checked_mul(top, b)));
  }
  auto add_step = [&](std::int64_t j) {
    raw.gens.emplace_back(checked_add(pivot.p, checked_mul(big + j, a)),
                          checked_add(pivot.q, checked_mul(top - j, b)));
  };
  for (std::int64_t j = 0; j < constant; ++j) add_step(j);
  add_step(constant + stab);
  return validate(raw);
}

}  // namespace sgcm
