// parallel.hpp — Minimal index-based worker pool for parameter sweeps. Each
// index is computed exactly once; callers collect results by index, so output
// order is independent of the worker count.

#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace qdc {

inline void parallel_for(long n, int workers, const std::function<void(long)>& body) {
    if (n <= 0) return;
    if (workers <= 1 || n == 1) {
        for (long i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<long> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        while (true) {
            const long i = next.fetch_add(1);
            if (i >= n || failed.load()) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!failed.exchange(true)) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const int count = static_cast<int>(std::min<long>(workers, n));
    pool.reserve(count);
    for (int w = 0; w < count; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    if (failed.load()) std::rethrow_exception(error);
}

}  // namespace qdc
