#ifndef CATPHASE_PARALLEL_HPP
#define CATPHASE_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace catphase::par {

// Worker count: CATPHASE_THREADS if set to a positive integer, otherwise
// the hardware concurrency, never less than 1.
inline int max_threads() {
    if (const char* env = std::getenv("CATPHASE_THREADS")) {
        const int requested = std::atoi(env);
        if (requested > 0) {
            return requested;
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Runs fn(i) for i in [0, n) on up to max_threads() workers. fn must be
// safe to call concurrently for distinct i; indices are claimed through a
// shared counter, so the assignment of i to worker is not deterministic
// (results must not depend on it).
template <class F>
void parallel_for(long long n, F fn) {
    if (n <= 0) {
        return;
    }
    const int workers = static_cast<int>(std::min<long long>(max_threads(), n));
    if (workers == 1) {
        for (long long i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<long long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&next, n, &fn] {
            for (long long i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                fn(i);
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
}

} // namespace catphase::par

#endif
