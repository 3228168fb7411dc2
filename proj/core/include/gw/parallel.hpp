#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace gw {

/// GW_THREADS caps worker counts; defaults to the hardware concurrency.
inline unsigned thread_cap_from_env() {
    if (const char* env = std::getenv("GW_THREADS")) {
        const long v = std::atol(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs fn(i) for every i in [0, count) on up to `threads` workers.
/// Callers index their outputs by i, so the result is deterministic
/// regardless of scheduling.
inline void parallel_for(std::size_t count, unsigned threads,
                         const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    if (threads <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    const unsigned u = std::min<std::size_t>(threads, count);
    pool.reserve(u);
    for (unsigned t = 0; t < u; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

} // namespace gw
