#pragma once

#include <cstddef>
#include <functional>

namespace pdnrel {

// Runs fn(i) for i in [0, n) on up to `jobs` threads. Work is split into
// contiguous index blocks and each call writes only its own result slot,
// so output is identical for any job count.
void parallel_for(size_t n, int jobs, const std::function<void(size_t)>& fn);

}  // namespace pdnrel
