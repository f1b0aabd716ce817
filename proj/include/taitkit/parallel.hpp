#pragma once

#include <cstddef>
#include <functional>

namespace taitkit {

/// Worker count: TAITKIT_THREADS if set and positive, else hardware
/// concurrency, capped by `work_items`.
unsigned thread_budget(std::size_t work_items);

/// Runs body(i) for i in [0, count) on up to thread_budget(count) threads.
/// Exceptions from body are rethrown on the calling thread (first by index).
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace taitkit
