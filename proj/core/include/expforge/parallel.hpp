#pragma once

#include <cstddef>
#include <functional>

namespace expforge {

// requested > 0 wins; otherwise EXPFORGE_WORKERS, otherwise the hardware
// thread count (at least 1). Throws DomainError on a malformed variable.
unsigned resolve_workers(unsigned requested = 0);

// Calls task(i) for every i < count on up to `workers` threads. Tasks must
// write to disjoint outputs. The first exception thrown is rethrown.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& task);

}  // namespace expforge
