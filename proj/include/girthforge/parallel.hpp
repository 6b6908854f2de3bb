#ifndef GIRTHFORGE_PARALLEL_HPP
#define GIRTHFORGE_PARALLEL_HPP

#include <atomic>
#include <thread>
#include <vector>

namespace girthforge {

// Runs fn(i) for i in [0, n) across `threads` workers. Work items must be
// independent; deterministic output requires fn to write only to slot i (or to
// thread-local state merged by the caller in index order).
template <typename Fn>
void parallel_for(long long n, int threads, Fn&& fn) {
    if (threads <= 1 || n <= 1) {
        for (long long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<long long> next{0};
    const long long chunk = std::max<long long>(1, n / (static_cast<long long>(threads) * 16));
    auto worker = [&] {
        for (;;) {
            long long start = next.fetch_add(chunk);
            if (start >= n) break;
            long long end = std::min(n, start + chunk);
            for (long long i = start; i < end; ++i) fn(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

inline int default_threads() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace girthforge

#endif
