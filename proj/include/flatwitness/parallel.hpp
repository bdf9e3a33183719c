#pragma once

#include <cstddef>
#include <cstdint>

namespace flatwitness {

/// Selects the OpenMP kernel or the serial reference path of a pointwise
/// operation. Both paths produce bit-identical results.
enum class Execution { parallel, serial };

/// Caps the OpenMP team size using FLATWITNESS_THREADS when it is set to a
/// positive integer. Returns the resulting maximum thread count.
int configure_threads_from_env();

int max_threads();

/// Runs body(i) for i in [0, count). Iterations must be independent.
template <class Body>
void for_each_index(std::size_t count, Execution exec, const Body& body) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
}

}  // namespace flatwitness
