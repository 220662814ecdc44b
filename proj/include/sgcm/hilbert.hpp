#pragma once

// Hilbert polynomial of the parameter ideal (X,Y) = (x^a, y^b):
//   P(n) = |H|(n+1) + sum over classes of (s + t),
// and the index from which the Hilbert function agrees with it.

#include <cstdint>
#include <vector>

#include "sgcm/core.hpp"
#include "sgcm/oracle.hpp"

namespace sgcm {

/// Per-class staircase data.
///
/// `alpha_pq` is a corner of least weighted degree (ties: smaller beta, then
/// smaller alpha). The ladder below it, `beta_ladder[i-1]`, sits i rows of
/// height b lower at the least alpha available in S on that row; the ladder to
/// its left, `underbeta_ladder`, is the mirror image in the other coordinate.
/// `u` and `u_prime` are the longest runs skipped by the greedy degree chain
/// through each ladder, and the class contributes s + t to the constant term.
struct StaircaseClass {
  ClassVec cls;
  ExpVec alpha_pq;
  std::vector<ExpVec> corners;  // sorted by beta ascending
  std::int64_t s = 0;
  std::int64_t t = 0;
  std::vector<ExpVec> beta_ladder;       // rows below alpha_pq, i = 1..s
  std::vector<ExpVec> underbeta_ladder;  // columns left of alpha_pq, i = 1..t
  std::int64_t u = 0;
  std::int64_t u_prime = 0;
  std::int64_t n_pq = 0;
};

struct HilbertPolynomial {
  std::int64_t slope = 0;
  std::int64_t intercept = 0;

  std::int64_t operator()(std::int64_t n) const;
  friend bool operator==(const HilbertPolynomial&, const HilbertPolynomial&) = default;
};

struct HilbertData {
  std::int64_t multiplicity = 0;     // |H|
  std::int64_t constant_C = 0;       // sum of s + t
  std::int64_t stabilization_N = 0;  // max of n_pq
  HilbertPolynomial polynomial;      // P(n) = |H|(n+1) + C

  friend bool operator==(const HilbertData&, const HilbertData&) = default;
};

StaircaseClass class_staircase(const RingSpec& spec, ClassVec cls, const OracleOptions& opts = {});
StaircaseClass class_staircase(const RingSpec& spec, const CornerSet& cs, ClassVec cls);

HilbertData hilbert_data(const RingSpec& spec, const OracleOptions& opts = {});
HilbertData hilbert_data(const RingSpec& spec, const CornerSet& cs);

/// Cohen-Macaulay iff every class of H has exactly one corner.
bool is_cm_general(const RingSpec& spec, const OracleOptions& opts = {});
bool is_cm_general(const CornerSet& cs);

/// A ring whose parameter ideal has Hilbert polynomial |H|(n+1) + C and whose
/// Hilbert function agrees with it exactly from n = m on.
RingSpec construct_ring(std::int64_t a, std::int64_t b, const std::vector<ClassVec>& subgroup_gens,
                        std::int64_t constant, std::int64_t stab);

}  // namespace sgcm
