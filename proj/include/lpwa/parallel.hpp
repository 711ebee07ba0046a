#pragma once

#include <cstdint>
#include <functional>

namespace lpwa {

// Worker count: LPWA_THREADS if set, else hardware concurrency.
int thread_count();

// Runs work(chunk) for chunk in [0, n_chunks) across threads. Chunks must
// write only to their own output slots; combined with per-chunk RNG
// substreams this makes results independent of the parallelism degree.
void parallel_chunks(std::int64_t n_chunks, const std::function<void(std::int64_t)>& work);

}  // namespace lpwa
