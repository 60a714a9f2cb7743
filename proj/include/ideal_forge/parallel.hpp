#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ideal_forge {

/**
 * Runs body(i) for i in [0, count) on up to `jobs` threads. Work is handed
 * out one index at a time from a shared counter. The first exception thrown
 * by any worker is rethrown on the calling thread after all workers stop.
 */
template <class Body>
void parallel_for(std::size_t count, unsigned jobs, Body&& body)
{
    jobs = std::max(1U, jobs);
    if (jobs == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (std::size_t i; !failed && (i = next.fetch_add(1)) < count;) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                failed = true;
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(jobs, count); ++t)
            pool.emplace_back(worker);
    }
    if (error)
        std::rethrow_exception(error);
}

} // namespace ideal_forge
