#pragma once

#include <cstdint>
#include <functional>

namespace gencorr {

// Hardware concurrency, at least 1.
int hardware_threads();

// Resolves a requested thread count: 0 means hardware concurrency.
int resolve_threads(int requested);

// Runs fn(block_begin, block_end, worker) over [0, total) in fixed-size
// blocks pulled from a shared cursor. Block boundaries depend only on
// block_size, never on the worker count, so any per-block computation is
// reproducible across thread counts. Exceptions from workers are rethrown
// on the calling thread.
void parallel_blocks(std::uint64_t total, std::uint64_t block_size, int threads,
                     const std::function<void(std::uint64_t, std::uint64_t, int)>& fn);

}  // namespace gencorr
