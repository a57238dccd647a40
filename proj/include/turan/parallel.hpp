#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace turan {

/// Runs fn(lo, hi) over disjoint chunks of [0, count) on up to `jobs`
/// threads. Chunk boundaries are fixed by count alone, so callers that
/// write indexed results get identical output for any job count.
inline void parallel_chunks(std::size_t count, int jobs,
                            const std::function<void(std::size_t lo, std::size_t hi)>& fn) {
    if (count == 0) return;
    const std::size_t chunk = std::max<std::size_t>(1, std::min<std::size_t>(1024, count / 64 + 1));
    const std::size_t n_chunks = (count + chunk - 1) / chunk;
    if (jobs <= 1 || n_chunks == 1) {
        fn(0, count);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t c = next.fetch_add(1);
            if (c >= n_chunks) return;
            const std::size_t lo = c * chunk;
            fn(lo, std::min(count, lo + chunk));
        }
    };
    std::vector<std::thread> pool;
    const std::size_t n_threads = std::min<std::size_t>(jobs, n_chunks);
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace turan
