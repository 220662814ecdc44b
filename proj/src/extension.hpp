#pragma once

// The basis-extension loop shared by four-generator rings and curves. The two
// callers differ only in the payload carried along with (a*, b*) and in the
// stopping rule; everything else is the same sequence of three branches.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sgcm/error.hpp"
#include "sgcm/fourgen.hpp"

namespace sgcm::detail {

struct ExtensionShape {
  std::int64_t a1 = 0;
  std::int64_t b1 = 0;
  std::int64_t a2 = 0;
  std::int64_t b2 = 0;
  std::int64_t a3 = 0;
  std::int64_t b3 = 0;
};

inline std::vector<LatticePair> rectangle_union(const ExtensionShape& s) {
  std::vector<LatticePair> out;
  for (std::int64_t b = 0; b < s.b2; ++b) {
    const std::int64_t width = b < s.b1 ? s.a3 : s.a1;
    for (std::int64_t a = 0; a < width; ++a) out.push_back({a, b});
  }
  return out;
}

/// Payload must provide operator+. `keep_going(a*, b*, payload)` is the loop
/// condition and `fill(record, payload)` copies the payload into a trace row.
template <class Payload, class KeepGoing, class Fill>
BasisResult run_extension(const ExtensionShape& s, Payload start, Payload step_both, Payload step_trade,
                          KeepGoing keep_going, Fill fill, std::size_t iteration_guard) {
  BasisResult result;
  result.lattice = rectangle_union(s);

  std::int64_t base = s.a1;
  std::int64_t a_star = s.a2;
  std::int64_t b_star = s.b2;
  Payload payload = start;

  result.initial.step = 1;
  result.initial.base = base;
  result.initial.a_star = a_star;
  result.initial.b_star = b_star;
  result.initial.added = result.lattice.size();
  result.initial.size = result.lattice.size();
  fill(result.initial, payload);

  while (keep_going(a_star, b_star, payload)) {
    if (result.trace.size() >= iteration_guard) {
      throw Error(ErrorCode::NonTermination,
                  "basis extension exceeded " + std::to_string(iteration_guard) + " iterations");
    }
    if (base < 1) throw Error(ErrorCode::NonTermination, "base dropped below 1");

    // Every right-hand side below reads the values from before this iteration.
    const std::int64_t old_base = base;
    const std::int64_t old_a = a_star;
    const std::int64_t old_b = b_star;
    const std::size_t before = result.lattice.size();
    int step = 0;

    if (old_a >= s.a1) {
      step = 4;
      for (std::int64_t v = 0; v < s.b1; ++v)
        for (std::int64_t u = 0; u < old_base; ++u) result.lattice.push_back({u, old_b + v});
      a_star = old_a - s.a1;
      b_star = old_b + s.b1;
      payload = payload + step_both;
    } else if (old_a <= s.a1 - old_base) {
      step = 5;
      for (std::int64_t v = 0; v < s.b2; ++v)
        for (std::int64_t u = 0; u < old_base; ++u) result.lattice.push_back({u, old_b + v});
      a_star = old_a + s.a2;
      b_star = old_b + s.b2;
      payload = payload + step_trade;
    } else {
      step = 6;
      const std::int64_t narrow = s.a1 - old_a;
      const std::int64_t rows = std::max(s.b1, s.b2);
      const std::int64_t cols = std::max(old_base, narrow);
      for (std::int64_t v = 0; v < rows; ++v) {
        for (std::int64_t u = 0; u < cols; ++u) {
          if ((u < old_base && v < s.b1) || (u < narrow && v < s.b2)) result.lattice.push_back({u, old_b + v});
        }
      }
      a_star = old_a + s.a2;
      b_star = old_b + s.b2;
      payload = payload + step_trade;
      base = narrow;
    }

    TraceRecord rec;
    rec.step = step;
    rec.base = base;
    rec.a_star = a_star;
    rec.b_star = b_star;
    rec.added = result.lattice.size() - before;
    rec.size = result.lattice.size();
    fill(rec, payload);
    result.trace.push_back(rec);
  }

  std::sort(result.lattice.begin(), result.lattice.end(),
            [](const LatticePair& x, const LatticePair& y) { return x.b != y.b ? x.b < y.b : x.a < y.a; });
  return result;
}

}  // namespace sgcm::detail
