#include "nlsup/parallel.hpp"

#include <cstdlib>
#include <string>

namespace nlsup {

int thread_budget() {
#ifdef _OPENMP
  int budget = omp_get_max_threads();
#else
  int budget = 1;
#endif
  if (const char* env = std::getenv("NLSUP_THREADS")) {
    try {
      int cap = std::stoi(env);
      if (cap > 0 && cap < budget) budget = cap;
    } catch (...) {
      // Malformed values leave the budget unchanged.
    }
  }
  return budget;
}

void apply_thread_budget() {
#ifdef _OPENMP
  omp_set_num_threads(thread_budget());
#endif
}

}  // namespace nlsup
