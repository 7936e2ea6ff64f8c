#include "casimir/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace casimir {

Parallelism Parallelism::from_env() {
  if (const char* env = std::getenv("CASIMIR_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return {static_cast<unsigned>(v)};
    } catch (const std::exception&) {
    }
  }
  return {std::max(1u, std::thread::hardware_concurrency())};
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body, Parallelism par) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, par.workers), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace casimir
