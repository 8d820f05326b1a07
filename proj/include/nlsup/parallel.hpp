#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nlsup {

enum class Exec { Serial, Parallel };

// Thread budget: OpenMP's max threads, capped by the NLSUP_THREADS
// environment variable when it is set to a positive integer.
int thread_budget();

// Installs the budget as the OpenMP thread count. Safe to call repeatedly;
// a no-op in builds without OpenMP.
void apply_thread_budget();

// Runs f(0..n-1). The parallel path is a plain static-schedule loop, so any
// kernel whose iterations write disjoint state produces bitwise-identical
// results under both policies.
template <class F>
void par_for(std::size_t n, Exec exec, F&& f) {
#ifdef _OPENMP
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      f(static_cast<std::size_t>(i));
    }
    return;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < n; ++i) f(i);
}

}  // namespace nlsup
