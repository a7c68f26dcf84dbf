#pragma once

#include <cstddef>
#include <functional>

namespace odisc {

// Worker cap: ORACLE_DISC_THREADS when set to a positive integer, otherwise
// the machine parallelism.
int thread_budget();

// Runs fn(chunk) for every chunk in [0, chunks) on up to `threads` workers
// (0 means thread_budget()). Callers combine per-chunk results in chunk
// order, so outputs do not depend on the worker count.
void run_chunks(std::size_t chunks, const std::function<void(std::size_t)>& fn,
                int threads = 0);

}  // namespace odisc
