#pragma once

#include <cstddef>
#include <functional>

namespace rbl {

// RBL_JOBS (if set and positive) wins over `requested`; 0 means hardware concurrency.
unsigned resolve_jobs(unsigned requested = 0);

// Runs body(i) for i in [0, count) on `jobs` threads. Callers write results to slot i,
// so reductions done afterwards in index order are schedule independent.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body);

}  // namespace rbl
