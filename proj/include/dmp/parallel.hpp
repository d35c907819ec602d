#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace dmp {

inline int default_worker_count() {
    unsigned hc = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hc, 1u, 16u));
}

// Splits [begin, end) into one contiguous chunk per worker and runs
// fn(worker_index, chunk_begin, chunk_end) on its own thread. Callers merge
// per-worker results in worker order, which keeps output independent of the
// worker count and of scheduling.
template <typename Fn>
void parallel_chunks(std::uint64_t begin, std::uint64_t end, int workers, Fn&& fn) {
    std::uint64_t total = end > begin ? end - begin : 0;
    if (workers < 1) workers = 1;
    if (total == 0) return;
    std::uint64_t w = std::min<std::uint64_t>(workers, total);
    if (w == 1) {
        fn(0, begin, end);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(w);
    std::uint64_t chunk = total / w, extra = total % w, at = begin;
    for (std::uint64_t i = 0; i < w; ++i) {
        std::uint64_t len = chunk + (i < extra ? 1 : 0);
        threads.emplace_back(fn, static_cast<int>(i), at, at + len);
        at += len;
    }
    for (auto& t : threads) t.join();
}

}  // namespace dmp
