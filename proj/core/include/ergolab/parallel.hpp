#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace ergolab {

/// Worker count: min(hardware, ERGOLAB_THREADS if set). At least 1.
inline unsigned thread_budget() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("ERGOLAB_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned>(cap) < n) n = static_cast<unsigned>(cap);
    }
    return n;
}

/// Runs fn(i) for i in [0, n). Tasks must only write state owned by
/// index i; results are then independent of the worker count.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    unsigned workers = thread_budget();
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace ergolab
