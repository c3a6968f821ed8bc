#include "hadarot/rng.hpp"

#include <bit>
#include <cmath>

namespace hadarot {

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t stream_index_of(std::initializer_list<std::uint64_t> parts) noexcept {
    std::uint64_t h = 0x6a09e667f3bcc909ULL;
    for (auto p : parts) {
        std::uint64_t s = h ^ p;
        h = splitmix64(s);
    }
    return h;
}

StreamRng::StreamRng(std::uint64_t master_seed, std::uint64_t stream_index, Layer layer) noexcept {
    std::uint64_t s = master_seed;
    std::uint64_t key = splitmix64(s);
    s = key ^ stream_index;
    key = splitmix64(s);
    s = key ^ (static_cast<std::uint64_t>(layer) * 0xd1b54a32d192ed03ULL);
    for (auto& word : s_) word = splitmix64(s);
}

StreamRng::result_type StreamRng::operator()() noexcept {
    const std::uint64_t result = std::rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = std::rotl(s_[3], 45);
    return result;
}

double StreamRng::gaussian() noexcept {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, r2;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        r2 = u * u + v * v;
    } while (r2 >= 1.0 || r2 == 0.0);
    const double f = std::sqrt(-2.0 * std::log(r2) / r2);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
}

}  // namespace hadarot
