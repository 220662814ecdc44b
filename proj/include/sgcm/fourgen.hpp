#pragma once

// Four-generator rings R = k[x^d, x^e y^l, x^f y^m, y^n].
//
// Write <a,b> = a(e,l) + b(f,m). Three integer relations modulo the lattice
// dZ + nZ drive everything here:
//   both:          a1(e,l) + b1(f,m) = (g1,h1)
//   trade_second: -a2(e,l) + b2(f,m) = (g2,h2)   (b2 minimal)
//   trade_first:   a3(e,l) - b3(f,m) = (g3,h3)   (a3 minimal)
// with `both` = `trade_second` + `trade_first`.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sgcm/core.hpp"

namespace sgcm {

/// Lattice coordinates (a,b) in N^2, standing for the monomial at <a,b>.
struct LatticePair {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend auto operator<=>(const LatticePair&, const LatticePair&) = default;
  friend bool operator==(const LatticePair&, const LatticePair&) = default;
};

struct Relation {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t g = 0;
  std::int64_t h = 0;

  friend bool operator==(const Relation&, const Relation&) = default;
};

struct FourGenConstants {
  std::int64_t d = 0;
  std::int64_t n = 0;
  ExpVec first;   // (e,l)
  ExpVec second;  // (f,m)
  Relation both;
  Relation trade_second;
  Relation trade_first;

  /// |H| = a3*b2 - a2*b3.
  std::int64_t subgroup_order() const;
  ExpVec image(LatticePair p) const;

  friend bool operator==(const FourGenConstants&, const FourGenConstants&) = default;
};

FourGenConstants fourgen_constants(std::int64_t d, std::int64_t n, ExpVec first, ExpVec second);

/// The rectangle union {a < a1, b < b2} U {a < a3, b < b1}, sorted by (b, a).
std::vector<LatticePair> candidate_basis_B0(const FourGenConstants& c);

bool is_cm_fourgen(const FourGenConstants& c);

/// One row of the basis-extension trace. Values are those after the step.
/// Step 1 denotes the initial state; 4, 5 and 6 are the three branches.
struct TraceRecord {
  int step = 0;
  std::int64_t base = 0;
  std::int64_t a_star = 0;
  std::int64_t b_star = 0;
  std::int64_t g_star = 0;
  std::int64_t h_star = 0;
  std::int64_t c_star = 0;  // curves only
  std::size_t added = 0;
  std::size_t size = 0;

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

struct BasisResult {
  std::vector<LatticePair> lattice;  // sorted by (b, a)
  std::vector<ExpVec> monomials;     // sorted by (beta, alpha)
  TraceRecord initial;
  std::vector<TraceRecord> trace;    // one record per loop iteration

  std::size_t size() const { return lattice.size(); }
  std::size_t iterations() const { return trace.size(); }
};

BasisResult basis_algorithm(const FourGenConstants& c);

struct LengthBound {
  std::int64_t length = 0;
  std::int64_t subgroup_order = 0;
  std::int64_t bound = 0;  // |H|(|H|+1)/2
  bool within = false;     // length <= bound and |H| <= d*n
  bool attained = false;   // length == bound
};

LengthBound length_bound_check(const FourGenConstants& c, const BasisResult& basis);

/// k[x^d, x^e y^l, y^n] is always Cohen-Macaulay; its monomial basis modulo
/// (x^d, y^n) is k(e,l) for 0 <= k < ord((e,l)).
std::vector<ExpVec> threegen_basis(std::int64_t d, std::int64_t n, ExpVec first);

}  // namespace sgcm
