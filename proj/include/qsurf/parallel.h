#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qsurf {

/// Splits [0, count) into `workers` contiguous ranges and runs fn(begin, end, worker) on each.
/// The partition depends only on (count, workers); callers merge per-worker results in worker order.
/// The first exception thrown by any worker is rethrown on the calling thread.
template <typename Fn>
void parallel_ranges(uint64_t count, int workers, Fn&& fn) {
    workers = std::max(1, workers);
    if (workers == 1 || count < 2) {
        fn(uint64_t{0}, count, 0);
        return;
    }
    std::vector<std::thread> threads;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (int w = 0; w < workers; ++w) {
        const uint64_t begin = count * w / workers;
        const uint64_t end = count * (w + 1) / workers;
        threads.emplace_back([&, begin, end, w] {
            try {
                fn(begin, end, w);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace qsurf
