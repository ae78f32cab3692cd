/*
   Copyright 2026 The semiswitch Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SEMISWITCH_PARALLEL_HPP
#define SEMISWITCH_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace semiswitch {

/// Number of workers used by the parallel scans. SEMISWITCH_THREADS overrides the hardware count.
unsigned worker_count();

/// Runs body(i) for every i in [0, count) on a small pool. Work is handed out in
/// contiguous chunks; the first exception thrown by any worker is rethrown here.
template <class Body>
void parallel_for(std::uint64_t count, Body&& body) {
    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(worker_count(), count));
    if (workers <= 1) {
        for (std::uint64_t i = 0; i < count; ++i) body(i);
        return;
    }
    const std::uint64_t chunk = std::max<std::uint64_t>(1, count / (workers * 8ULL));
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            try {
                for (;;) {
                    const std::uint64_t begin = next.fetch_add(chunk);
                    if (begin >= count) return;
                    const std::uint64_t end = std::min(count, begin + chunk);
                    for (std::uint64_t i = begin; i < end; ++i) body(i);
                }
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(count);
            }
        });
    }
    pool.clear();
    if (failure) std::rethrow_exception(failure);
}

/// Smallest index in [0, count) satisfying pred, or count if none. Workers skip
/// indices above the best hit found so far, so the answer is deterministic.
template <class Pred>
std::uint64_t parallel_find_first(std::uint64_t count, Pred&& pred) {
    if (worker_count() <= 1) {
        for (std::uint64_t i = 0; i < count; ++i)
            if (pred(i)) return i;
        return count;
    }
    std::atomic<std::uint64_t> best{count};
    parallel_for(count, [&](std::uint64_t i) {
        if (i >= best.load(std::memory_order_relaxed)) return;
        if (pred(i)) {
            std::uint64_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
        }
    });
    return best.load();
}

}  // namespace semiswitch

#endif
