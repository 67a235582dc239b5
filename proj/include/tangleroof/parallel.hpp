#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace tangleroof {

// Worker count for curve sweeps. TANGLE_ROOF_THREADS caps it; 0 or unset
// means one thread per hardware core.
inline int roof_thread_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  const char* env = std::getenv("TANGLE_ROOF_THREADS");
  if (env == nullptr) return hw;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || v <= 0) return hw;
  return static_cast<int>(v < hw ? v : hw);
}

// Static block partition of [0, n); body(begin, end) runs on each worker.
// Tasks must write to disjoint locations.
template <typename Body>
void parallel_for(std::size_t n, const Body& body) {
  const int workers = roof_thread_count();
  if (workers <= 1 || n < 2) {
    body(std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    if (lo >= n) break;
    const std::size_t hi = std::min(n, lo + chunk);
    pool.emplace_back([&body, lo, hi] { body(lo, hi); });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace tangleroof
