#ifndef FIBERCOUNT_PARALLEL_HPP
#define FIBERCOUNT_PARALLEL_HPP

#include <cstdint>
#include <thread>
#include <vector>

namespace fibercount {

// Splits [0, total) into contiguous chunks, one per worker thread. The
// worker receives (chunk_index, begin, end). Chunk boundaries depend only on
// total and the worker count, never on timing.
template <typename Worker>
void parallel_chunks(std::int64_t total, Worker&& worker) {
    if (total <= 0) return;
    const unsigned hw = std::thread::hardware_concurrency();
    const std::int64_t workers =
        std::max<std::int64_t>(1, std::min<std::int64_t>(hw == 0 ? 1 : hw, total));
    if (workers == 1) {
        worker(0, static_cast<std::int64_t>(0), total);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    const std::int64_t chunk = (total + workers - 1) / workers;
    for (std::int64_t w = 0; w < workers; ++w) {
        const std::int64_t begin = w * chunk;
        const std::int64_t end = std::min(total, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back([&worker, w, begin, end] { worker(w, begin, end); });
    }
    for (auto& t : threads) t.join();
}

}  // namespace fibercount

#endif  // FIBERCOUNT_PARALLEL_HPP
