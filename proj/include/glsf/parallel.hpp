#pragma once
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace glsf {

// Worker cap: GLSF_THREADS if set, else hardware concurrency.
inline unsigned max_workers() {
    if (const char* env = std::getenv("GLSF_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Runs fn(0..count-1), possibly concurrently. Jobs must only touch their own
// index's outputs; results are whatever fn wrote, so ordering is by index and
// deterministic regardless of scheduling.
inline void parallel_for_index(int count, const std::function<void(int)>& fn) {
    const unsigned workers = std::min<unsigned>(max_workers(), static_cast<unsigned>(count));
    if (workers <= 1) {
        for (int k = 0; k < count; ++k) fn(k);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (int k = static_cast<int>(w); k < count; k += static_cast<int>(workers)) fn(k);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace glsf
