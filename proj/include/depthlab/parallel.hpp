#pragma once

#include <cstddef>
#include <functional>

namespace depthlab {

/// Worker count used by parallel_for. Values < 1 mean "all hardware threads".
void set_thread_count(int threads) noexcept;
/// Resolved worker count (always >= 1).
std::size_t thread_count() noexcept;

/// Calls body(i) for i in [0, n) using static contiguous chunks. Each index
/// is processed exactly once and bodies must only write to per-index slots,
/// so results do not depend on the worker count. The first exception thrown
/// by any body is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace depthlab
