#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace wdr {

// Runs body(i) for i in [0, count) across hardware threads. Work is handed
// out in fixed-size chunks so results are a pure function of the index,
// independent of scheduling.
inline void parallel_for(int count, const std::function<void(int)>& body) {
    if (count <= 0)
        return;
    unsigned threads = std::thread::hardware_concurrency();
    if (threads == 0)
        threads = 1;
    if (threads <= 1 || count < 4) {
        for (int i = 0; i < count; ++i)
            body(i);
        return;
    }

    const int chunk = std::max(1, count / (static_cast<int>(threads) * 4));
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            const int begin = next.fetch_add(chunk);
            if (begin >= count)
                return;
            const int end = std::min(count, begin + chunk);
            for (int i = begin; i < end; ++i)
                body(i);
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(threads - 1);
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool)
        t.join();
}

// Same, but body runs once per fixed chunk [begin, end); chunk boundaries are
// deterministic (derived from count alone), so per-chunk sequential state
// (e.g. warm starts) yields identical results for any thread count.
inline void parallel_chunks(int count, int chunk_count,
                            const std::function<void(int, int)>& body) {
    if (count <= 0)
        return;
    chunk_count = std::max(1, std::min(chunk_count, count));
    std::vector<std::pair<int, int>> ranges;
    ranges.reserve(static_cast<size_t>(chunk_count));
    for (int c = 0; c < chunk_count; ++c) {
        const int begin = static_cast<int>((static_cast<long long>(count) * c) / chunk_count);
        const int end =
            static_cast<int>((static_cast<long long>(count) * (c + 1)) / chunk_count);
        if (begin < end)
            ranges.emplace_back(begin, end);
    }

    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const size_t idx = next.fetch_add(1);
            if (idx >= ranges.size())
                return;
            body(ranges[idx].first, ranges[idx].second);
        }
    };

    unsigned threads = std::thread::hardware_concurrency();
    if (threads == 0)
        threads = 1;
    threads = std::min<unsigned>(threads, static_cast<unsigned>(ranges.size()));
    if (threads <= 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads - 1);
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool)
        t.join();
}

} // namespace wdr
