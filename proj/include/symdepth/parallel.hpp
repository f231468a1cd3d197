#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace symdepth {

// Splits [0, count) into `threads` contiguous chunks and runs
// body(chunk, begin, end) for each. Chunk boundaries depend only on count and
// threads, so callers that reduce per-chunk results in chunk order get
// schedule-independent output. The first exception (by chunk) is rethrown.
template <class Body>
void for_each_chunk(std::size_t count, unsigned threads, Body&& body) {
    const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
    if (chunks == 1) {
        body(std::size_t{0}, std::size_t{0}, count);
        return;
    }
    std::vector<std::exception_ptr> errors(chunks);
    std::vector<std::thread> workers;
    workers.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t begin = count * c / chunks;
        const std::size_t end = count * (c + 1) / chunks;
        workers.emplace_back([&, c, begin, end] {
            try {
                body(c, begin, end);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace symdepth
