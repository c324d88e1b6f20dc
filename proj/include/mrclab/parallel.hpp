#pragma once

#include <cstddef>
#include <functional>

namespace mrclab {

/// Worker cap: MRCLAB_THREADS if set, else hardware concurrency.
unsigned thread_budget();

/// Runs fn(0..count-1) across up to thread_budget() threads. Exceptions from
/// workers are rethrown on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace mrclab
