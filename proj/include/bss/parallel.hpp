#pragma once

#include <cstddef>
#include <functional>

namespace bss {

/// Worker count used by batch simulations; 0 means hardware concurrency.
void set_thread_count(std::size_t threads);
std::size_t thread_count();

/// Runs body(begin, end) over contiguous chunks of [0, count). Chunks are
/// disjoint and callers write results by index, so output does not depend on
/// the number of workers.
void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace bss
