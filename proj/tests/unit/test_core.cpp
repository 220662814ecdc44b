#include <doctest.h>

#include <limits>
#include <set>

#include "helpers.hpp"
#include "sgcm/checked.hpp"
#include "sgcm/core.hpp"
#include "sgcm/error.hpp"

using namespace sgcm;
using sgcm::testing::macaulay;
using sgcm::testing::ring;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Parse;
}

// Membership by closing the generator set under addition inside a box.
std::set<ExpVec> closure_in_box(const RingSpec& spec, std::int64_t max_alpha, std::int64_t max_beta) {
  std::set<ExpVec> seen{{0, 0}};
  std::vector<ExpVec> frontier{{0, 0}};
  const auto gens = spec.all_generators();
  while (!frontier.empty()) {
    const ExpVec v = frontier.back();
    frontier.pop_back();
    for (const ExpVec& g : gens) {
      const ExpVec w{v.alpha + g.alpha, v.beta + g.beta};
      if (w.alpha > max_alpha || w.beta > max_beta) continue;
      if (seen.insert(w).second) frontier.push_back(w);
    }
  }
  return seen;
}

}  // namespace

TEST_SUITE("core") {
  TEST_CASE("validation rejects bad specs") {
    CHECK(code_of([] { ring(0, 3); }) == ErrorCode::NonPositiveAB);
    CHECK(code_of([] { ring(2, -1); }) == ErrorCode::NonPositiveAB);
    CHECK(code_of([] { ring(2, 3, {{0, 0}}); }) == ErrorCode::ZeroGenerator);
    CHECK(code_of([] { ring(2, 3, {{-1, 2}}); }) == ErrorCode::NegativeExponent);
  }

  TEST_CASE("validation keeps order and drops repeats") {
    const RingSpec r = ring(2, 3, {{5, 1}, {1, 5}, {5, 1}});
    REQUIRE(r.gens().size() == 2);
    CHECK(r.gens()[0] == ExpVec{5, 1});
    CHECK(r.gens()[1] == ExpVec{1, 5});
    CHECK(r.all_generators() == std::vector<ExpVec>{{2, 0}, {5, 1}, {1, 5}, {0, 3}});
    CHECK(ring(2, 3).gens().empty());
  }

  TEST_CASE("classes and subgroups") {
    const RingSpec m = macaulay();
    CHECK(class_of(ExpVec{7, 9}, m) == ClassVec{3, 1});
    CHECK(class_of(LatticeVec{-1, -5}, 4, 4) == ClassVec{3, 3});
    const ClassGroup h = subgroup(m);
    CHECK(h.elements() == std::vector<ClassVec>{{0, 0}, {1, 3}, {2, 2}, {3, 1}});
    CHECK(h.contains({2, 2}));
    CHECK_FALSE(h.contains({1, 1}));
    CHECK(subgroup(ring(2, 3)).size() == 1);
    CHECK(subgroup_generated_by(2, 3, {{1, 1}}).size() == 6);
    CHECK(subgroup_generated_by(4, 4, {{2, 0}, {0, 2}}).size() == 4);
    CHECK(order_of({1, 1}, 2, 3) == 6);
    CHECK(order_of({2, 0}, 4, 4) == 2);
    CHECK(order_of({0, 0}, 4, 4) == 1);
  }

  TEST_CASE("subgroup order divides ab and matches the closure") {
    for (std::int64_t a = 1; a <= 6; ++a) {
      for (std::int64_t b = 1; b <= 6; ++b) {
        for (std::int64_t p = 0; p < a; ++p) {
          for (std::int64_t q = 0; q < b; ++q) {
            const ClassGroup h = subgroup_generated_by(a, b, {{p, q}});
            CHECK((a * b) % static_cast<std::int64_t>(h.size()) == 0);
            CHECK(static_cast<std::int64_t>(h.size()) == order_of({p, q}, a, b));
          }
        }
      }
    }
  }

  TEST_CASE("weighted degree gives X and Y equal degree") {
    const RingSpec r = ring(2, 3, {{11, 1}});
    CHECK(weighted_degree({2, 0}, r) == 6);
    CHECK(weighted_degree({0, 3}, r) == 6);
    CHECK(weighted_degree({11, 1}, r) == 35);
  }

  TEST_CASE("semigroup membership on the Macaulay ring") {
    const RingSpec m = macaulay();
    CHECK(semigroup_contains(m, {0, 0}));
    CHECK(semigroup_contains(m, {4, 4}));
    CHECK(semigroup_contains(m, {2, 6}));
    CHECK_FALSE(semigroup_contains(m, {2, 2}));
    CHECK_FALSE(semigroup_contains(m, {1, 0}));
    Semigroup s(m);
    CHECK(s.contains({6, 2}));
    CHECK_FALSE(s.contains({2, 2}));
    CHECK_FALSE(s.contains({-1, 5}));
  }

  TEST_CASE("DP membership and the lazily grown table agree with closure") {
    const std::vector<RingSpec> specs{macaulay(), ring(2, 3, {{11, 1}, {1, 11}}), ring(3, 5, {{2, 7}}),
                                      ring(5, 4, {{1, 1}, {3, 0}}), ring(1, 1)};
    for (const RingSpec& spec : specs) {
      const auto closure = closure_in_box(spec, 30, 30);
      Semigroup grown(spec);
      // Query in an order that forces the table to grow several times.
      for (std::int64_t k = 0; k <= 30; ++k) {
        for (std::int64_t i = 0; i <= k; ++i) {
          const ExpVec v{i, k};
          const ExpVec w{k, i};
          CHECK(grown.contains(v) == closure.count(v));
          CHECK(grown.contains(w) == closure.count(w));
          CHECK(semigroup_contains(spec, v) == static_cast<bool>(closure.count(v)));
        }
      }
    }
  }

  TEST_CASE("lattice in Hermite normal form") {
    const Lattice l(macaulay());
    CHECK(l.first() == 1);
    CHECK(l.offset() == 3);
    CHECK(l.second() == 4);
    CHECK(l.contains({2, 2}));
    CHECK(l.contains({-1, 1}));
    CHECK_FALSE(l.contains({1, 0}));
    CHECK(lattice_contains(ring(2, 3), {4, -3}));
    CHECK_FALSE(lattice_contains(ring(2, 3), {1, 0}));
  }

  TEST_CASE("lattice membership matches small integer combinations") {
    const std::vector<RingSpec> specs{macaulay(), ring(6, 4, {{2, 1}}), ring(3, 5, {{2, 7}, {4, 4}}), ring(2, 2)};
    for (const RingSpec& spec : specs) {
      const auto gens = spec.all_generators();
      std::set<LatticeVec> reached;
      // Coefficients in [-8, 8] reach every point of the box below for these rings.
      std::vector<std::int64_t> coef(gens.size(), -8);
      while (true) {
        LatticeVec v;
        for (std::size_t i = 0; i < gens.size(); ++i) {
          v.x += coef[i] * gens[i].alpha;
          v.y += coef[i] * gens[i].beta;
        }
        reached.insert(v);
        std::size_t k = 0;
        while (k < coef.size() && ++coef[k] > 8) coef[k++] = -8;
        if (k == coef.size()) break;
      }
      const Lattice l(spec);
      for (std::int64_t x = -3; x <= 3; ++x)
        for (std::int64_t y = -3; y <= 3; ++y) CHECK(l.contains({x, y}) == static_cast<bool>(reached.count({x, y})));
    }
  }

  TEST_CASE("checked arithmetic refuses to wrap") {
    constexpr auto big = std::numeric_limits<std::int64_t>::max();
    CHECK(code_of([] { checked_add(big, 1); }) == ErrorCode::Overflow);
    CHECK(code_of([] { checked_mul(big / 2, 3); }) == ErrorCode::Overflow);
    CHECK(code_of([] { checked_sub(-big, 2); }) == ErrorCode::Overflow);
    CHECK(mod_floor(-7, 4) == 1);
    CHECK(div_floor(-7, 4) == -2);
    CHECK(div_floor(8, 4) == 2);
    CHECK(checked_lcm(4, 6) == 12);
    CHECK(code_of([] { ExpVec{big, 0} + ExpVec{1, 0}; }) == ErrorCode::Overflow);
  }
}
