#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "sgcm/core.hpp"

namespace sgcm::testing {

inline RingSpec ring(std::int64_t a, std::int64_t b, std::vector<std::pair<std::int64_t, std::int64_t>> gens = {}) {
  return validate({a, b, std::move(gens)});
}

inline RingSpec macaulay() { return ring(4, 4, {{3, 1}, {1, 3}}); }

/// Calls f on every ring with a, b <= max_ab and up to two distinct middle
/// generators from [0, max_exp]^2 \ {(0,0)}, the second lex-after the first.
inline void for_each_small_ring(std::int64_t max_ab, std::int64_t max_exp, int max_gens,
                                const std::function<void(const RingSpec&)>& f) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pts;
  for (std::int64_t p = 0; p <= max_exp; ++p)
    for (std::int64_t q = 0; q <= max_exp; ++q)
      if (p || q) pts.emplace_back(p, q);
  for (std::int64_t a = 1; a <= max_ab; ++a) {
    for (std::int64_t b = 1; b <= max_ab; ++b) {
      f(ring(a, b));
      if (max_gens < 1) continue;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        f(ring(a, b, {pts[i]}));
        if (max_gens < 2) continue;
        for (std::size_t j = i + 1; j < pts.size(); ++j) f(ring(a, b, {pts[i], pts[j]}));
      }
    }
  }
}

}  // namespace sgcm::testing
