#pragma once

#include <cstddef>
#include <functional>

namespace glie::parallel {

// Worker cap: GLIE_THREADS when set to a positive integer, otherwise the
// hardware concurrency. Read on every call so tests can change it.
std::size_t worker_count();

// Runs fn(begin, end) over a fixed chunking of [0, n). Chunk boundaries depend
// only on n and the worker count, never on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace glie::parallel
