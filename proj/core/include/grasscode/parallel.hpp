#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace grasscode {

inline unsigned worker_count() {
    if (const char* env = std::getenv("GRASSCODE_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(std::min<long>(v, 256));
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Runs fn(worker, begin, end) over a contiguous split of [0, total).
// fn must not throw. Result combination is the caller's job; keeping the
// combine order indexed by worker keeps the outcome deterministic.
template <typename Fn>
void parallel_chunks(uint64_t total, Fn&& fn) {
    if (total == 0) return;
    uint64_t nw = std::min<uint64_t>(worker_count(), total);
    if (nw <= 1) {
        fn(0u, uint64_t{0}, total);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(nw);
    uint64_t base = total / nw, extra = total % nw, begin = 0;
    for (uint64_t w = 0; w < nw; ++w) {
        uint64_t len = base + (w < extra ? 1 : 0);
        threads.emplace_back([&fn, w, begin, len] {
            fn(static_cast<unsigned>(w), begin, begin + len);
        });
        begin += len;
    }
    for (auto& t : threads) t.join();
}

} // namespace grasscode
