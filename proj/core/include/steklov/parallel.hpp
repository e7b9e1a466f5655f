#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace steklov {

/// Worker count used when a caller passes threads <= 0.
int default_thread_count();

/// Runs body(i) for i in [0, count) on up to `threads` workers using a
/// static strided partition. Each index is handled by exactly one worker, so
/// results written to per-index slots do not depend on the thread count.
/// The first exception thrown by any body is rethrown on the caller.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

}  // namespace steklov
