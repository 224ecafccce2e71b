#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace txident {

// Runs fn(i) for i in [0, count) across hardware threads. Work items must be
// independent; results written to distinct slots are identical to a serial
// run. n_threads <= 1 runs inline.
inline void parallel_for(size_t count, const std::function<void(size_t)>& fn,
                         unsigned n_threads = std::thread::hardware_concurrency()) {
    if (count == 0) return;
    if (n_threads <= 1 || count == 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    if (n_threads > count) n_threads = static_cast<unsigned>(count);
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) {
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace txident
