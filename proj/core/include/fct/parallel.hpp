#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace fct {

/// Splits [0, count) into `threads` contiguous chunks and runs
/// body(begin, end, chunk) on each. Chunk boundaries depend only on count and
/// threads, so callers that merge per-chunk results in chunk order get the
/// same output for any scheduling. The first exception thrown is rethrown.
template <class Body>
void parallel_chunks(std::size_t count, int threads, Body&& body) {
    const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), 1,
                                                        std::max<std::size_t>(count, 1));
    if (workers == 1) {
        body(std::size_t{0}, count, std::size_t{0});
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = count * w / workers;
            const std::size_t end = count * (w + 1) / workers;
            pool.emplace_back([&, begin, end, w] {
                try {
                    body(begin, end, w);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& error : errors) {
        if (error) {
            std::rethrow_exception(error);
        }
    }
}

/// Number of chunks parallel_chunks will use.
inline std::size_t chunk_count(std::size_t count, int threads) {
    return std::clamp<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), 1, std::max<std::size_t>(count, 1));
}

}  // namespace fct
