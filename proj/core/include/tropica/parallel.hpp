#pragma once

#include <cstddef>
#include <functional>

namespace tropica {

/// Number of worker threads used by parallel_for (default 1, i.e. serial).
void set_thread_count(int threads);
int thread_count();

/// Runs body(i) for i in [0, n); each index runs exactly once. Callers write
/// results into per-index slots and combine them in index order, so results
/// do not depend on the thread count. The first exception thrown is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace tropica
