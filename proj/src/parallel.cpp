#include "lpwa/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace lpwa {

int thread_count() {
    if (const char* env = std::getenv("LPWA_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void parallel_chunks(std::int64_t n_chunks, const std::function<void(std::int64_t)>& work) {
    const int workers = std::min<std::int64_t>(thread_count(), n_chunks);
    if (workers <= 1) {
        for (std::int64_t c = 0; c < n_chunks; ++c) work(c);
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (std::int64_t c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1))
                work(c);
        });
    for (auto& th : pool) th.join();
}

}  // namespace lpwa
