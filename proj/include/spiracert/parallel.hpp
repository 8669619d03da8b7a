#pragma once

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace spiracert {

/// Worker count: hardware concurrency, capped by the SPIRACERT_THREADS
/// environment variable and by `requested` when positive.
inline int effective_threads(int requested = 0) {
    unsigned hw = std::thread::hardware_concurrency();
    int n = hw == 0 ? 1 : static_cast<int>(hw);
    if (const char* env = std::getenv("SPIRACERT_THREADS")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end != env && cap > 0 && cap < 1024) n = std::min<long>(n, cap);
    }
    if (requested > 0) n = std::min(n, requested);
    return n < 1 ? 1 : n;
}

/// Runs `body(i)` for i in [0, count). Each index writes only into its own
/// pre-assigned output slot, so results do not depend on the thread count.
/// Exceptions from workers are rethrown on the calling thread.
template <typename Body>
void parallel_for(long count, const Body& body, int threads = 0) {
    if (count <= 0) return;
    int n = effective_threads(threads);
    if (n == 1 || count == 1) {
        for (long i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<long> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (;;) {
            long i = next.fetch_add(1);
            if (i >= count || failed.load()) return;
            try {
                body(i);
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failed.load() && error) std::rethrow_exception(error);
}

}  // namespace spiracert
