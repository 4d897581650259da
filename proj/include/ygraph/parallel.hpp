#pragma once

#include <cstddef>
#include <functional>

namespace ygraph {

/// Hardware concurrency capped by the YGRAPH_THREADS environment variable (at least 1).
int worker_count();

/// Runs body(i) for i in [0, count) on up to worker_count() threads. Each index runs exactly once;
/// the first exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace ygraph
