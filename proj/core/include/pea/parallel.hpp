#pragma once

#include <cstddef>
#include <functional>

namespace pea {

// Worker count: PEA_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1). 0 or malformed values mean "default".
unsigned thread_count();

// Runs body(i) for i in [begin, end), split across threads in contiguous
// chunks. Iterations must write only to disjoint outputs; there is no
// reduction support on purpose, so results never depend on the worker count.
// Small ranges run serially.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)>& body);

}  // namespace pea
