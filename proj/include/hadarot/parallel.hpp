#pragma once

// Deterministic OpenMP work distribution. Work is cut into fixed-size chunks
// whose boundaries do not depend on the thread count; chunk results are merged
// in chunk order, so serial and parallel runs agree bit for bit.

#include <algorithm>
#include <cstddef>
#include <vector>

namespace hadarot {

enum class Exec { serial, parallel };

/// Sets the OpenMP thread count used by Exec::parallel (n <= 0 keeps the runtime default).
void set_workers(int n);
int workers();

inline constexpr std::size_t kChunkSize = 1024;

inline std::size_t chunk_count(std::size_t n, std::size_t chunk = kChunkSize) {
    return (n + chunk - 1) / chunk;
}

/// Calls body(i) for i in [0, n).
template <class Body>
void for_each_index(std::size_t n, Exec exec, Body&& body) {
    const auto count = static_cast<long long>(n);
    if (exec == Exec::serial) {
        for (long long i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
        return;
    }
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
}

/// Maps each chunk [begin, end) of [0, n) to a partial result, then folds the
/// partials left to right with merge(acc, part).
template <class Partial, class ChunkFn, class Merge>
Partial chunked_reduce(std::size_t n, Exec exec, ChunkFn&& chunk_fn, Merge&& merge,
                       Partial init, std::size_t chunk = kChunkSize) {
    const std::size_t chunks = chunk_count(n, chunk);
    std::vector<Partial> parts(chunks, init);
    for_each_index(chunks, exec, [&](std::size_t c) {
        const std::size_t begin = c * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        parts[c] = chunk_fn(begin, end);
    });
    Partial acc = std::move(init);
    for (auto& p : parts) merge(acc, p);
    return acc;
}

}  // namespace hadarot
