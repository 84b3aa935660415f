#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace satfarey {

// Applies fn to 0..n-1 on up to `workers` threads; results land in a
// pre-sized vector by index, so assembly order never depends on scheduling.
template <class R, class F>
std::vector<R> parallel_map_indexed(std::size_t n, F&& fn, unsigned workers) {
    std::vector<R> results(n);
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) results[i] = fn(i);
        return results;
    }
    if (workers > n) workers = static_cast<unsigned>(n);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
                results[i] = fn(i);
        });
    }
    for (std::thread& t : pool) t.join();
    return results;
}

} // namespace satfarey
