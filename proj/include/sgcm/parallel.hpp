#pragma once

// Index-space loops with an OpenMP kernel and a serial reference path.
// Both paths call the body once per index; callers write results into
// per-index slots so the merged output is order-preserving either way.

#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>

#ifdef SGCM_HAVE_OPENMP
#include <omp.h>
#endif

namespace sgcm {

enum class Execution { Serial, Parallel };

inline bool parallel_available() {
#ifdef SGCM_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

inline int worker_count() {
#ifdef SGCM_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

template <class Body>
void for_each_index(std::size_t count, Execution exec, Body&& body) {
  if (exec == Execution::Serial || !parallel_available()) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
#ifdef SGCM_HAVE_OPENMP
  // Exceptions must not cross the parallel region; keep the one with the
  // smallest index so the reported failure matches the serial path.
  std::exception_ptr failure;
  std::size_t failure_index = count;
  std::mutex failure_mutex;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (static_cast<std::size_t>(i) < failure_index) {
        failure_index = static_cast<std::size_t>(i);
        failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
#endif
}

}  // namespace sgcm
