#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace painterly {

/// Resolves a requested worker count; 0 means one per hardware thread.
inline int resolve_workers(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(i) for i in [0, count), split into contiguous blocks, one per
/// worker. fn must only write state owned by index i, so the result does not
/// depend on the worker count.
template <typename Fn>
void parallel_for(int count, int workers, Fn&& fn) {
    workers = std::min(resolve_workers(workers), std::max(count, 1));
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    const int block = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const int begin = w * block;
        const int end = std::min(count, begin + block);
        if (begin >= end) break;
        threads.emplace_back([&fn, begin, end] {
            for (int i = begin; i < end; ++i) fn(i);
        });
    }
    for (auto& t : threads) t.join();
}

} // namespace painterly
