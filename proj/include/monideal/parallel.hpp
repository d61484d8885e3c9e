#pragma once

#include <cstddef>
#include <functional>

namespace monideal {

/// Number of worker threads: MONIDEAL_THREADS if set and positive, otherwise
/// std::thread::hardware_concurrency(), at least 1.
int thread_count();

/// Runs fn(i) for i in [0, n). Work items must be independent; callers get
/// determinism by writing each result into its own preallocated slot. Runs
/// inline when n is small or a single thread is configured. Exceptions from
/// workers are rethrown on the calling thread (one of them, if several).
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

}  // namespace monideal
