#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace stabsys {

/// Worker count for lattice scans: `requested` when positive, otherwise the
/// STABSYS_THREADS environment variable, otherwise hardware concurrency
/// (capped at 8). Always at least 1.
inline int worker_count(int requested = 0) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("STABSYS_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 8u));
}

/// Splits [begin, end) into `workers` contiguous slices and runs
/// fn(slice_begin, slice_end, slice_index) on each, one thread per slice.
/// Callers collect per-slice results and merge them in slice order, so the
/// output is independent of scheduling.
template <class Fn>
void parallel_slices(long long begin, long long end, int workers, Fn fn) {
  const long long total = end - begin;
  if (total <= 0) return;
  workers = std::min<long long>(std::max(workers, 1), total);
  if (workers == 1) {
    fn(begin, end, 0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const long long chunk = (total + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const long long lo = begin + w * chunk;
    const long long hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([=] { fn(lo, hi, w); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace stabsys
