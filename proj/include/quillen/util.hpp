#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace quillen {

// Static partition of [0, n) across `jobs` worker threads. Each worker gets
// one contiguous range, so merges in range order are deterministic.
inline void parallel_ranges(std::size_t n, int jobs,
                            const std::function<void(std::size_t, std::size_t, int)>& fn) {
    if (jobs <= 1 || n < 2) {
        fn(0, n, 0);
        return;
    }
    const std::size_t w = static_cast<std::size_t>(jobs);
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < w; ++t) {
        std::size_t lo = n * t / w, hi = n * (t + 1) / w;
        if (lo >= hi) continue;
        threads.emplace_back(fn, lo, hi, static_cast<int>(t));
    }
    for (auto& th : threads) th.join();
}

} // namespace quillen
