#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace ccl {

/// Run fn(worker_id, begin, end) over [0, count) in chunks pulled from a
/// shared counter. workers <= 1 runs inline, in order, on worker id 0.
template <typename Fn>
void parallel_chunks(unsigned workers, std::size_t count, std::size_t chunk, Fn&& fn) {
    if (count == 0) return;
    if (chunk == 0) chunk = 1;
    if (workers <= 1 || count <= chunk) {
        for (std::size_t b = 0; b < count; b += chunk)
            fn(0u, b, std::min(b + chunk, count));
        return;
    }
    std::atomic<std::size_t> next{0};
    auto work = [&](unsigned id) {
        for (;;) {
            std::size_t b = next.fetch_add(chunk, std::memory_order_relaxed);
            if (b >= count) return;
            fn(id, b, std::min(b + chunk, count));
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work, t);
    work(0);
    for (auto& th : pool) th.join();
}

}  // namespace ccl
