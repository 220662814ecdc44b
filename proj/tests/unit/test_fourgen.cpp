#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "sgcm/error.hpp"
#include "sgcm/fourgen.hpp"
#include "sgcm/hilbert.hpp"
#include "sgcm/oracle.hpp"

using namespace sgcm;
using sgcm::testing::ring;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Disagreement;
}

bool downward_closed(const std::vector<LatticePair>& cells) {
  const std::set<LatticePair> s(cells.begin(), cells.end());
  for (const LatticePair& p : cells) {
    if (p.a > 0 && !s.count({p.a - 1, p.b})) return false;
    if (p.b > 0 && !s.count({p.a, p.b - 1})) return false;
  }
  return true;
}

// Every four-generator ring with d, n <= max_dn and distinct nonzero (e,l), (f,m) in [0, max_exp]^2.
template <class F>
void for_each_fourgen(std::int64_t max_dn, std::int64_t max_exp, F f) {
  std::vector<ExpVec> pts;
  for (std::int64_t p = 0; p <= max_exp; ++p)
    for (std::int64_t q = 0; q <= max_exp; ++q)
      if (p || q) pts.push_back({p, q});
  for (std::int64_t d = 1; d <= max_dn; ++d)
    for (std::int64_t n = 1; n <= max_dn; ++n)
      for (const ExpVec& x : pts)
        for (const ExpVec& y : pts)
          if (x != y) f(d, n, x, y);
}

}  // namespace

TEST_SUITE("fourgen") {
  TEST_CASE("constants of k[x^2, x^11 y, x y^11, y^3]") {
    const FourGenConstants c = fourgen_constants(2, 3, {11, 1}, {1, 11});
    CHECK(c.trade_second == Relation{5, 1, -54, 6});
    CHECK(c.trade_first == Relation{6, 0, 66, 6});
    CHECK(c.both == Relation{1, 1, 12, 12});
    CHECK(c.subgroup_order() == 6);
    CHECK_FALSE(is_cm_fourgen(c));
    CHECK(c.image({2, 3}) == ExpVec{25, 35});
    CHECK(candidate_basis_B0(c).size() == 6);
  }

  TEST_CASE("basis of k[x^2, x^11 y, x y^11, y^3]") {
    const BasisResult r = basis_algorithm(fourgen_constants(2, 3, {11, 1}, {1, 11}));
    const std::vector<ExpVec> expected{{0, 0},  {11, 1}, {22, 2}, {33, 3},  {44, 4},  {55, 5},
                                       {1, 11}, {2, 22}, {3, 33}, {4, 44}, {5, 55}};
    CHECK(std::set<ExpVec>(r.monomials.begin(), r.monomials.end()) ==
          std::set<ExpVec>(expected.begin(), expected.end()));
    CHECK(r.size() == 11);
    CHECK(r.initial.size == 6);
    REQUIRE(r.iterations() == 5);
    for (const TraceRecord& t : r.trace) {
      CHECK(t.step == 4);
      CHECK(t.added == 1);
    }
    CHECK(r.trace.back().a_star == 0);
    CHECK(r.trace.back().b_star == 6);
    CHECK(r.trace.back().g_star == 6);
  }

  TEST_CASE("basis of k[x^2, x^7 y, x y^7, y^3] fills the triangle") {
    const FourGenConstants c = fourgen_constants(2, 3, {7, 1}, {1, 7});
    const BasisResult r = basis_algorithm(c);
    std::set<ExpVec> expected;
    for (std::int64_t u = 0; u <= 5; ++u)
      for (std::int64_t v = 0; u + v <= 5; ++v) expected.insert({7 * u + v, u + 7 * v});
    CHECK(r.size() == 21);
    CHECK(std::set<ExpVec>(r.monomials.begin(), r.monomials.end()) == expected);
    const LengthBound lb = length_bound_check(c, r);
    CHECK(lb.bound == 21);
    CHECK(lb.within);
    CHECK(lb.attained);
  }

  TEST_CASE("Macaulay ring as a four-generator ring") {
    const FourGenConstants c = fourgen_constants(4, 4, {3, 1}, {1, 3});
    CHECK(c.trade_second.a == 2);
    CHECK(c.trade_second.b == 2);
    CHECK(c.trade_second.g == -4);
    CHECK_FALSE(is_cm_fourgen(c));
    CHECK(basis_algorithm(c).size() == 5);
  }

  TEST_CASE("three-generator basis") {
    CHECK(threegen_basis(4, 4, {3, 1}) == std::vector<ExpVec>{{0, 0}, {3, 1}, {6, 2}, {9, 3}});
    CHECK(threegen_basis(2, 3, {2, 0}) == std::vector<ExpVec>{{0, 0}});
    CHECK(threegen_basis(4, 4, {3, 1}) == corners(ring(4, 4, {{3, 1}})).corners);
  }

  TEST_CASE("argument errors") {
    CHECK(code_of([] { fourgen_constants(0, 3, {1, 1}, {1, 2}); }) == ErrorCode::InvalidDN);
    CHECK(code_of([] { fourgen_constants(2, 3, {0, 0}, {1, 2}); }) == ErrorCode::ZeroGenerator);
    CHECK(code_of([] { fourgen_constants(2, 3, {1, 1}, {0, 0}); }) == ErrorCode::ZeroGeneratorPair);
    CHECK(code_of([] { fourgen_constants(2, 3, {-1, 1}, {1, 2}); }) == ErrorCode::NegativeExponent);
    CHECK(code_of([] { fourgen_constants(1 << 13, 1 << 13, {1, 1}, {1, 2}); }) == ErrorCode::BudgetExceeded);
    CHECK(code_of([] { threegen_basis(2, 0, {1, 1}); }) == ErrorCode::InvalidDN);
  }

  TEST_CASE("fast constants equal the brute-force search") {
    for_each_fourgen(4, 6, [](std::int64_t d, std::int64_t n, ExpVec x, ExpVec y) {
      CHECK(fourgen_constants(d, n, x, y) == fourgen_constants_bruteforce(d, n, x, y));
    });
  }

  TEST_CASE("structural invariants of the constants and B_0") {
    for_each_fourgen(4, 6, [](std::int64_t d, std::int64_t n, ExpVec x, ExpVec y) {
      const FourGenConstants c = fourgen_constants(d, n, x, y);
      const Relation& r1 = c.both;
      const Relation& r2 = c.trade_second;
      const Relation& r3 = c.trade_first;
      CHECK(r3.a > r2.a);
      CHECK(r2.a >= 0);
      CHECK(r2.b > r3.b);
      CHECK(r3.b >= 0);
      CHECK(r1.a == r3.a - r2.a);
      CHECK(r1.b == r2.b - r3.b);
      CHECK(r3.g >= 0);
      CHECK(r3.h >= 0);
      CHECK((r3.g != 0 || r3.h != 0));
      CHECK(-r2.a * x.alpha + r2.b * y.alpha == r2.g);
      CHECK(-r2.a * x.beta + r2.b * y.beta == r2.h);
      CHECK(r3.a * x.alpha - r3.b * y.alpha == r3.g);
      CHECK(r1.a * x.beta + r1.b * y.beta == r1.h);
      CHECK(r2.g % d == 0);
      CHECK(r2.h % n == 0);
      CHECK(c.subgroup_order() == static_cast<std::int64_t>(subgroup(ring(d, n, {{x.alpha, x.beta}, {y.alpha, y.beta}})).size()));
      const auto b0 = candidate_basis_B0(c);
      CHECK(static_cast<std::int64_t>(b0.size()) == c.subgroup_order());
      CHECK(downward_closed(b0));
    });
  }

  TEST_CASE("basis equals the oracle corners") {
    for_each_fourgen(4, 6, [](std::int64_t d, std::int64_t n, ExpVec x, ExpVec y) {
      const RingSpec spec = ring(d, n, {{x.alpha, x.beta}, {y.alpha, y.beta}});
      const FourGenConstants c = fourgen_constants(d, n, x, y);
      const BasisResult r = basis_algorithm(c);
      const CornerSet cs = corners(spec);
      CHECK(r.monomials == cs.corners);
      CHECK(downward_closed(r.lattice));
      CHECK(std::set<ExpVec>(r.monomials.begin(), r.monomials.end()).size() == r.size());
      CHECK(r.iterations() <= static_cast<std::size_t>(c.trade_first.a));
      CHECK(is_cm_fourgen(c) == is_cm_general(cs));
      CHECK(is_cm_fourgen(c) == (r.iterations() == 0));
      const LengthBound lb = length_bound_check(c, r);
      CHECK(lb.within);
      std::size_t added = r.initial.size;
      for (const TraceRecord& t : r.trace) {
        added += t.added;
        CHECK(t.size == added);
        CHECK(t.base >= 1);
      }
      CHECK(added == r.size());
    });
  }
}
