#pragma once

// Splittable random streams. Every Monte Carlo draw is addressed by
// (master_seed, stream_index, layer); the generator for that address is
// rebuilt from scratch, so results do not depend on execution order or on
// how work is split across threads.

#include <cstdint>
#include <initializer_list>
#include <limits>

namespace hadarot {

std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// Order-sensitive mix of a list of integers into one 64-bit stream index.
std::uint64_t stream_index_of(std::initializer_list<std::uint64_t> parts) noexcept;

enum class Layer : std::uint64_t {
    d1 = 1,     // diagonal of D1
    d2 = 2,     // diagonal of D2
    gauss = 3,  // Gaussian draws (uniform sphere points)
    aux = 4,    // anything else (hypercube signs, test-vector generation)
};

/// xoshiro256++ (Blackman & Vigna), seeded through splitmix64.
/// Satisfies std::uniform_random_bit_generator.
class StreamRng {
public:
    using result_type = std::uint64_t;

    StreamRng(std::uint64_t master_seed, std::uint64_t stream_index, Layer layer) noexcept;

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept;

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    /// Standard normal via the Marsaglia polar method; caches the spare value.
    double gaussian() noexcept;

private:
    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace hadarot
