#pragma once

// Brute-force ground truth. Nothing in here calls the fast paths of the
// hilbert, fourgen or curve modules; tests compare the two sides.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sgcm/core.hpp"
#include "sgcm/fourgen.hpp"
#include "sgcm/parallel.hpp"

namespace sgcm {

/// How candidate corners are tested for "v - (a,0) in S" and "v - (0,b) in S".
enum class CornerFilter {
  /// Against the candidate set itself: every element of S is a candidate plus
  /// a nonnegative combination of (a,0) and (0,b).
  Candidates,
  /// Against the reachability table of `Semigroup`.
  DynamicProgramming,
};

/// Where the corner candidates come from.
enum class CornerEnumeration {
  /// Every sum c_1 g_1 + ... + c_t g_t with 0 <= c_i < ord(g_i). The budget
  /// bounds the product of the orders.
  Candidates,
  /// Sums of middle generators grown outward from 0 in order of weighted
  /// degree, extending only from corners. A corner minus a middle generator
  /// that stays in S is again a corner, so nothing is missed. The budget
  /// bounds the number of points visited. Ignores `filter`.
  Closure,
};

struct OracleOptions {
  std::uint64_t candidate_budget = 10'000'000;
  CornerFilter filter = CornerFilter::Candidates;
  CornerEnumeration enumeration = CornerEnumeration::Candidates;
  Execution execution = Execution::Serial;
};

/// The monomials of R outside (x^a, y^b): the unique monomial k-basis of R/(x^a,y^b).
struct CornerSet {
  std::vector<ExpVec> corners;                     // sorted by (beta, alpha)
  std::map<ClassVec, std::vector<ExpVec>> by_class;  // each sorted by beta ascending

  std::size_t size() const { return corners.size(); }
  ExpVec max_extent() const;  // (max alpha, max beta) over all corners
};

CornerSet corners(const RingSpec& spec, const OracleOptions& opts = {});

std::int64_t length_mod_parameters(const RingSpec& spec, const OracleOptions& opts = {});

/// lambda((X,Y)^n / (X,Y)^{n+1}) by direct counting.
std::int64_t hilbert_function(const RingSpec& spec, std::int64_t n, const OracleOptions& opts = {});

/// Values for n = lo..hi in one counting pass.
std::vector<std::int64_t> hilbert_function_range(const RingSpec& spec, const CornerSet& cs, std::int64_t lo,
                                                 std::int64_t hi);

struct GswResult {
  bool cohen_macaulay = true;
  std::optional<LatticeVec> witness;
};

/// Searches G for v outside S with v + (a,0) and v + (0,b) both in S.
GswResult gsw_cm_check(const RingSpec& spec, const OracleOptions& opts = {});
GswResult gsw_cm_check(const RingSpec& spec, const CornerSet& cs);

/// The three minimal relations found by literal double loops; the combined
/// relation is searched directly under the (h, then g) order with b1 <= b2.
FourGenConstants fourgen_constants_bruteforce(std::int64_t d, std::int64_t n, ExpVec first, ExpVec second);

}  // namespace sgcm
