#pragma once

#include <cstddef>
#include <functional>

namespace casimir {

/// Worker count for the parallel loops. Results never depend on it.
struct Parallelism {
  unsigned workers = 1;

  /// CASIMIR_WORKERS when set to a positive integer, else hardware concurrency.
  static Parallelism from_env();
};

/// Calls body(i) for i in [0, count). Each index runs exactly once; the first
/// exception thrown by any body is rethrown on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body, Parallelism par);

}  // namespace casimir
