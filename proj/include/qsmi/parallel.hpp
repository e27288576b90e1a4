#pragma once

#include <cstddef>
#include <functional>

namespace qsmi {

// Worker cap shared by all parallel loops. 0 = hardware concurrency.
// Initialized once from QSMI_THREADS if set; --threads overrides via set_thread_count.
void set_thread_count(int n);
int thread_count();

// Splits [0, n) into contiguous chunks, one per worker. Chunk boundaries
// depend only on n and the worker count, and each invocation of fn owns a
// disjoint range, so writes to per-index slots are race-free. Callers that
// reduce must keep per-index partials and combine them in index order;
// results are then bit-identical for every thread count.
void parallel_for(size_t n, const std::function<void(size_t, size_t)>& fn);

} // namespace qsmi
