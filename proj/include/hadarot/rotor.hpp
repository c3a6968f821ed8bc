#pragma once

// Random rotations of the unit sphere:
//   two-block   T(u) = (1/d) H D1 H D2 u
//   one-block   (1/sqrt d) H D u
//   uniform     X(u) ~ uniform on S^{d-1}, sampled as G / |G|
// plus the scaled hypercube {+-1/sqrt d}^d and the distance to it.

#include <cstdint>
#include <span>
#include <vector>

#include "hadarot/hadamard.hpp"
#include "hadarot/rng.hpp"

namespace hadarot {

/// Point on S^{d-1}. Construction renormalizes; only zero or non-finite input is rejected.
class UnitVector {
public:
    UnitVector(std::vector<double> coords, Dimension dim);
    explicit UnitVector(std::vector<double> coords);

    /// Standard basis vector e_{index} (0-based).
    static UnitVector basis(Dimension dim, std::size_t index = 0);
    /// (1/sqrt d) * (1, ..., 1).
    static UnitVector ones(Dimension dim);

    Dimension dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return coords_.size(); }
    std::span<const double> coords() const noexcept { return coords_; }
    double operator[](std::size_t i) const noexcept { return coords_[i]; }

private:
    std::vector<double> coords_;
    Dimension dim_;
};

inline constexpr double kUnitNormTolerance = 1e-9;

/// The randomness of one draw of (D1, D2).
struct RotationSeed {
    SignVector d1;
    SignVector d2;
    std::uint64_t master_seed = 0;
    std::uint64_t stream_index = 0;

    /// Regenerates d1 and d2 from their substreams (Layer::d1, Layer::d2).
    static RotationSeed from_stream(Dimension dim, std::uint64_t master_seed,
                                    std::uint64_t stream_index);
};

/// Fills `out` with d independent fair signs drawn 64 per word.
void draw_signs(StreamRng& rng, SignVector& out);
SignVector draw_signs(StreamRng& rng, std::size_t n);

struct HypercubeVertex {
    SignVector signs;

    double scale() const noexcept;
    std::vector<double> coords() const;
};

UnitVector two_block_transform(const UnitVector& u, const RotationSeed& seed);

/// Allocation-free core: out <- (1/d) H D1 H D2 u. `out` may not alias `u`.
void two_block_transform_into(std::span<const double> u, const SignVector& d1,
                              const SignVector& d2, std::span<double> out, Dimension dim);

/// Coordinate k of T(u) without the second transform: one FWHT plus an O(d) signed sum.
/// `scratch` must have length d.
double two_block_coordinate(std::span<const double> u, const SignVector& d1, const SignVector& d2,
                            std::size_t k, std::span<double> scratch, Dimension dim);

UnitVector one_block_transform(const UnitVector& u, const SignVector& s);

/// G / |G| with G standard Gaussian; resamples on |G| = 0.
UnitVector sample_uniform_sphere(Dimension dim, StreamRng& rng);
void sample_uniform_sphere_into(std::span<double> out, StreamRng& rng);

HypercubeVertex sample_hypercube(Dimension dim, StreamRng& rng);

/// Vertex with signs matching x; sign(0) = +1.
HypercubeVertex nearest_hypercube_vertex(std::span<const double> x);

/// sqrt(2 - 2 |x|_1 / sqrt d), clamped at 0. Valid for x on the unit sphere.
double hypercube_distance(std::span<const double> x);
inline double hypercube_distance(const UnitVector& x) { return hypercube_distance(x.coords()); }

double euclidean_norm(std::span<const double> x);
double l1_norm(std::span<const double> x);
double euclidean_distance(std::span<const double> x, std::span<const double> y);

}  // namespace hadarot
