#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace clawham {

/// Serial is the reference path; parallel runs the same kernel under OpenMP.
/// Both produce identical, index-ordered output.
enum class ExecutionPolicy { kSerial, kParallel };

/// out[i] = fn(i) for i in [0, count).
template <class R, class Fn>
std::vector<R> indexed_map(std::size_t count, Fn&& fn, ExecutionPolicy policy) {
  std::vector<R> out(count);
  if (policy == ExecutionPolicy::kSerial) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  const long long n = static_cast<long long>(count);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 8)
  for (long long i = 0; i < n; ++i) {
    try {
      out[i] = fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(clawham_indexed_map)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

inline int worker_count(ExecutionPolicy policy) {
#ifdef _OPENMP
  return policy == ExecutionPolicy::kParallel ? omp_get_max_threads() : 1;
#else
  (void)policy;
  return 1;
#endif
}

}  // namespace clawham
