#ifndef POLYHARM_PARALLEL_HPP
#define POLYHARM_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace polyharm {

// Resolve a thread-count request: 0 means auto (hardware concurrency,
// or POLYHARM_THREADS when set).
inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("POLYHARM_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Run fn(i) for i in [0, count).  Each index writes only its own output
// slot, so the result is identical for any thread count; reductions over
// the slots stay with the caller, in ascending index order.
template <typename Fn>
void parallel_for(long long count, int threads, Fn&& fn) {
    threads = resolve_threads(threads);
    if (threads <= 1 || count <= 1) {
        for (long long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<long long> next{0};
    std::vector<std::thread> pool;
    const int n_workers = static_cast<int>(std::min<long long>(threads, count));
    pool.reserve(n_workers);
    for (int w = 0; w < n_workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                const long long i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace polyharm

#endif
