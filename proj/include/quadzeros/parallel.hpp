#ifndef QUADZEROS_PARALLEL_HPP
#define QUADZEROS_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace quadzeros {

/// Worker count from QUADZEROS_THREADS, else the hardware concurrency.
inline unsigned worker_count() {
    if (const char* env = std::getenv("QUADZEROS_THREADS")) {
        try {
            int n = std::stoi(env);
            if (n >= 1) return static_cast<unsigned>(n);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// out[i] = fn(items[i]) on a small worker pool. Output order matches input
/// order regardless of completion order; the first exception is rethrown.
template <class In, class Fn>
auto parallel_map(const std::vector<In>& items, Fn fn, unsigned workers = worker_count()) {
    using Out = decltype(fn(items.front()));
    std::vector<Out> out(items.size());
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(items.size())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < items.size(); i = next++) {
                try {
                    out[i] = fn(items[i]);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace quadzeros

#endif  // QUADZEROS_PARALLEL_HPP
