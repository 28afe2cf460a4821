#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace odh {

// Splits [0, total) into contiguous chunks and runs fn(begin, end) on each,
// using at most `workers` threads. workers <= 1 runs inline. Results must be
// combined by the caller in chunk order so output stays worker-independent.
template <typename Fn>
void parallel_chunks(std::int64_t total, int workers, Fn fn) {
    if (total <= 0) return;
    if (workers <= 1 || total == 1) {
        fn(std::int64_t{0}, total);
        return;
    }
    int nthreads = std::min<std::int64_t>(workers, total);
    std::int64_t chunk = (total + nthreads - 1) / nthreads;
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) {
        std::int64_t begin = t * chunk;
        std::int64_t end = std::min(total, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([=] { fn(begin, end); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace odh
