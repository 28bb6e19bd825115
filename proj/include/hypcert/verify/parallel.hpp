#pragma once

// Index-parallel execution over a fixed instance grid. Workers are
// stateless and write each result into its own slot, so the output order
// never depends on scheduling.

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace hypcert::verify {

template <class Fn>
void parallel_for_index(size_t n, unsigned workers, Fn&& fn) {
    if (workers <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto body = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= n) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    unsigned count = std::min<size_t>(workers, n);
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(body);
    for (auto& t : pool) t.join();
}

} // namespace hypcert::verify
