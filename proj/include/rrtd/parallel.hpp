#pragma once

#include <cstddef>
#include <functional>

namespace rrtd {

/// std::thread::hardware_concurrency(), at least 1.
int default_workers();

/// Runs body(i) for i in [0, count) on up to `workers` threads pulling indices
/// from a shared counter. Results must be stored by index to stay
/// deterministic. After a failure no new indices are started; the exception
/// from the lowest failing index seen is rethrown once all threads finish.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body);

}  // namespace rrtd
