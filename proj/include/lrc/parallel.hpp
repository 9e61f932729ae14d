#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace lrc {

inline unsigned default_jobs() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

// Splits [0, count) into contiguous chunks and runs fn(chunk_index, begin, end)
// on each, using up to `jobs` threads.  Chunk boundaries depend only on
// (count, jobs), so callers that write into per-chunk slots get deterministic
// results regardless of scheduling.
template <typename Fn>
void parallel_chunks(std::uint64_t count, unsigned jobs, Fn&& fn) {
    if (count == 0) return;
    if (jobs == 0) jobs = 1;
    std::uint64_t nchunks = std::min<std::uint64_t>(jobs, count);
    if (nchunks <= 1) {
        fn(std::uint64_t{0}, std::uint64_t{0}, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nchunks);
    std::uint64_t base = count / nchunks, extra = count % nchunks, begin = 0;
    for (std::uint64_t c = 0; c < nchunks; ++c) {
        std::uint64_t len = base + (c < extra ? 1 : 0);
        pool.emplace_back([&fn, c, begin, len] { fn(c, begin, begin + len); });
        begin += len;
    }
    for (auto& th : pool) th.join();
}

}  // namespace lrc
