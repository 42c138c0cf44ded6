#include "cesaro/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace cesaro
{

unsigned worker_count()
{
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char *env = std::getenv("CESARO_LAB_THREADS")) {
        try {
            const long cap = std::stol(env);
            if (cap >= 1) {
                n = std::min<unsigned>(n, static_cast<unsigned>(cap));
            }
        } catch (const std::exception &) {
            // ignore malformed values
        }
    }
    return n;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)> &body)
{
    const std::size_t workers = std::min<std::size_t>(worker_count(), count / 64 + 1);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> threads;
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(count, lo + chunk);
        threads.emplace_back([&, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i) {
                    body(i);
                }
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        });
    }
    for (auto &t : threads) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

} // namespace cesaro
