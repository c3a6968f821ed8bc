#include "hadarot/rotor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hadarot/error.hpp"

namespace hadarot {

namespace {

Dimension dimension_of(std::size_t n) { return Dimension(n); }

void require_same(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw ContractError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                            " vs " + std::to_string(b) + ")");
    }
}

}  // namespace

UnitVector::UnitVector(std::vector<double> coords, Dimension dim)
    : coords_(std::move(coords)), dim_(dim) {
    require_same(coords_.size(), dim_.value(), "UnitVector");
    double sq = 0.0;
    for (double c : coords_) {
        if (!std::isfinite(c)) throw ContractError("UnitVector: non-finite coordinate");
        sq += c * c;
    }
    if (sq == 0.0) throw ContractError("UnitVector: zero vector cannot be normalized");
    const double norm = std::sqrt(sq);
    if (std::abs(norm - 1.0) > kUnitNormTolerance) {
        for (double& c : coords_) c /= norm;
    }
}

UnitVector::UnitVector(std::vector<double> coords)
    : UnitVector(coords, dimension_of(coords.size())) {}

UnitVector UnitVector::basis(Dimension dim, std::size_t index) {
    if (index >= dim.value()) throw ContractError("UnitVector::basis: index out of range");
    std::vector<double> c(dim.value(), 0.0);
    c[index] = 1.0;
    return UnitVector(std::move(c), dim);
}

UnitVector UnitVector::ones(Dimension dim) {
    return UnitVector(std::vector<double>(dim.value(), 1.0 / std::sqrt(double(dim.value()))), dim);
}

void draw_signs(StreamRng& rng, SignVector& out) {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; i += 64) {
        std::uint64_t bits = rng();
        const std::size_t end = std::min(n, i + 64);
        for (std::size_t j = i; j < end; ++j, bits >>= 1) out.set(j, bits & 1u);
    }
}

SignVector draw_signs(StreamRng& rng, std::size_t n) {
    SignVector s(n);
    draw_signs(rng, s);
    return s;
}

RotationSeed RotationSeed::from_stream(Dimension dim, std::uint64_t master_seed,
                                       std::uint64_t stream_index) {
    StreamRng r1(master_seed, stream_index, Layer::d1);
    StreamRng r2(master_seed, stream_index, Layer::d2);
    return RotationSeed{draw_signs(r1, dim.value()), draw_signs(r2, dim.value()), master_seed,
                        stream_index};
}

double HypercubeVertex::scale() const noexcept { return 1.0 / std::sqrt(double(signs.size())); }

std::vector<double> HypercubeVertex::coords() const {
    const double s = scale();
    std::vector<double> out(signs.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = signs[i] * s;
    return out;
}

void two_block_transform_into(std::span<const double> u, const SignVector& d1,
                              const SignVector& d2, std::span<double> out, Dimension dim) {
    const std::size_t d = dim.value();
    require_same(u.size(), d, "two_block_transform");
    require_same(d1.size(), d, "two_block_transform");
    require_same(d2.size(), d, "two_block_transform");
    require_same(out.size(), d, "two_block_transform");
    std::copy(u.begin(), u.end(), out.begin());
    apply_sign_diagonal_in_place(out, d2);
    fwht_in_place(out, dim);
    apply_sign_diagonal_in_place(out, d1);
    fwht_in_place(out, dim);
    const double inv_d = 1.0 / double(d);
    for (double& v : out) v *= inv_d;
}

UnitVector two_block_transform(const UnitVector& u, const RotationSeed& seed) {
    std::vector<double> out(u.size());
    two_block_transform_into(u.coords(), seed.d1, seed.d2, out, u.dim());
    return UnitVector(std::move(out), u.dim());
}

double two_block_coordinate(std::span<const double> u, const SignVector& d1, const SignVector& d2,
                            std::size_t k, std::span<double> scratch, Dimension dim) {
    const std::size_t d = dim.value();
    require_same(u.size(), d, "two_block_coordinate");
    require_same(scratch.size(), d, "two_block_coordinate");
    require_same(d1.size(), d, "two_block_coordinate");
    require_same(d2.size(), d, "two_block_coordinate");
    if (k >= d) throw ContractError("two_block_coordinate: coordinate index out of range");
    std::copy(u.begin(), u.end(), scratch.begin());
    apply_sign_diagonal_in_place(scratch, d2);
    fwht_in_place(scratch, dim);
    const auto s1 = d1.values();
    double acc = 0.0;
    if (k == 0) {
        for (std::size_t j = 0; j < d; ++j) acc += double(s1[j]) * scratch[j];
    } else {
        for (std::size_t j = 0; j < d; ++j) acc += double(s1[j] * hadamard_entry(k, j)) * scratch[j];
    }
    return acc / double(d);
}

UnitVector one_block_transform(const UnitVector& u, const SignVector& s) {
    require_same(s.size(), u.size(), "one_block_transform");
    std::vector<double> out = apply_sign_diagonal(u.coords(), s);
    fwht_in_place(out, u.dim());
    const double scale = 1.0 / std::sqrt(double(u.size()));
    for (double& v : out) v *= scale;
    return UnitVector(std::move(out), u.dim());
}

void sample_uniform_sphere_into(std::span<double> out, StreamRng& rng) {
    double sq = 0.0;
    do {
        sq = 0.0;
        for (double& v : out) {
            v = rng.gaussian();
            sq += v * v;
        }
    } while (sq == 0.0);
    const double inv = 1.0 / std::sqrt(sq);
    for (double& v : out) v *= inv;
}

UnitVector sample_uniform_sphere(Dimension dim, StreamRng& rng) {
    std::vector<double> out(dim.value());
    sample_uniform_sphere_into(out, rng);
    return UnitVector(std::move(out), dim);
}

HypercubeVertex sample_hypercube(Dimension dim, StreamRng& rng) {
    return HypercubeVertex{draw_signs(rng, dim.value())};
}

HypercubeVertex nearest_hypercube_vertex(std::span<const double> x) {
    SignVector s(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) s.set(i, x[i] < 0.0);
    return HypercubeVertex{std::move(s)};
}

double hypercube_distance(std::span<const double> x) {
    const double radicand = 2.0 - 2.0 * l1_norm(x) / std::sqrt(double(x.size()));
    return radicand > 0.0 ? std::sqrt(radicand) : 0.0;
}

double euclidean_norm(std::span<const double> x) {
    double sq = 0.0;
    for (double v : x) sq += v * v;
    return std::sqrt(sq);
}

double l1_norm(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += std::abs(v);
    return s;
}

double euclidean_distance(std::span<const double> x, std::span<const double> y) {
    require_same(x.size(), y.size(), "euclidean_distance");
    double sq = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double diff = x[i] - y[i];
        sq += diff * diff;
    }
    return std::sqrt(sq);
}

}  // namespace hadarot
