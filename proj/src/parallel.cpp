#include "splitcensus/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace splitcensus {

void parallel_blocks(std::size_t n_blocks, unsigned jobs,
                     const std::function<void(std::size_t)>& fn) {
    if (n_blocks == 0) return;
    if (jobs <= 1 || n_blocks == 1) {
        for (std::size_t b = 0; b < n_blocks; ++b) fn(b);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;

    const auto worker = [&] {
        while (true) {
            const std::size_t b = next.fetch_add(1);
            if (b >= n_blocks) return;
            {
                std::scoped_lock lock(error_mutex);
                if (first_error) return;
            }
            try {
                fn(b);
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    const unsigned n_threads = static_cast<unsigned>(
        std::min<std::size_t>(jobs, n_blocks));
    pool.reserve(n_threads);
    for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace splitcensus
