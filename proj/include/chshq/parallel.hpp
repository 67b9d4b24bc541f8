#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace chshq {

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hc = std::thread::hardware_concurrency();
    return hc != 0 ? hc : 1;
}

/// Splits [0, n) into contiguous chunks and returns one result per chunk,
/// in chunk order. Callers combine with an associative, order-fixed fold,
/// so the outcome is identical for any thread count.
template <typename R, typename ChunkFn>
std::vector<R> run_chunked(std::uint64_t n, unsigned threads, ChunkFn fn) {
    threads = resolve_threads(threads);
    std::uint64_t chunks = std::min<std::uint64_t>(threads, n == 0 ? 1 : n);
    std::vector<R> results(chunks);
    if (chunks <= 1) {
        results[0] = fn(std::uint64_t{0}, n);
        return results;
    }
    std::vector<std::thread> pool;
    pool.reserve(chunks);
    std::uint64_t per = n / chunks, extra = n % chunks, begin = 0;
    for (std::uint64_t c = 0; c < chunks; ++c) {
        std::uint64_t end = begin + per + (c < extra ? 1 : 0);
        pool.emplace_back([&results, c, begin, end, &fn] { results[c] = fn(begin, end); });
        begin = end;
    }
    for (auto& t : pool) t.join();
    return results;
}

}  // namespace chshq
