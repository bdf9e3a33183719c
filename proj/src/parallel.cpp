#include "flatwitness/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace flatwitness {

int configure_threads_from_env() {
  if (const char* env = std::getenv("FLATWITNESS_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap > 0 && cap < omp_get_max_threads()) omp_set_num_threads(cap);
    } catch (const std::exception&) {
      // ignored: an unparsable cap leaves the OpenMP default in place
    }
  }
  return omp_get_max_threads();
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace flatwitness
