#include <doctest.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <map>
#include <set>

#include "hadarot/error.hpp"
#include "hadarot/metrics.hpp"
#include "hadarot/rotor.hpp"
#include "support/oracles.hpp"

using namespace hadarot;

namespace {

SignVector signs(std::initializer_list<int> v) {
    std::vector<std::int8_t> s;
    for (int x : v) s.push_back(static_cast<std::int8_t>(x));
    return SignVector(std::move(s));
}

}  // namespace

TEST_CASE("UnitVector normalizes and rejects degenerate input") {
    const UnitVector u(std::vector<double>{3.0, 4.0});
    CHECK(u[0] == doctest::Approx(0.6));
    CHECK(u[1] == doctest::Approx(0.8));
    CHECK(euclidean_norm(u.coords()) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(UnitVector(std::vector<double>{0.0, 0.0}), ContractError);
    CHECK_THROWS_AS(UnitVector(std::vector<double>{NAN, 1.0}), ContractError);
    CHECK_THROWS_AS(UnitVector(std::vector<double>{1.0, 0.0, 0.0}), ContractError);
}

TEST_CASE("RotationSeed regenerates from its address") {
    const Dimension dim(128);
    const auto a = RotationSeed::from_stream(dim, 42, 7);
    const auto b = RotationSeed::from_stream(dim, 42, 7);
    CHECK(a.d1 == b.d1);
    CHECK(a.d2 == b.d2);
    CHECK_FALSE(a.d1 == a.d2);
    CHECK_FALSE(a.d1 == RotationSeed::from_stream(dim, 42, 8).d1);
}

TEST_CASE("two-block transform with identity signs is the identity") {
    const Dimension dim(16);
    StreamRng g(1, 0, Layer::gauss);
    const UnitVector u = sample_uniform_sphere(dim, g);
    const RotationSeed seed{SignVector(16), SignVector(16), 0, 0};
    const UnitVector t = two_block_transform(u, seed);
    for (std::size_t i = 0; i < 16; ++i) CHECK(t[i] == doctest::Approx(u[i]).epsilon(1e-14));
}

TEST_CASE("two-block transform d = 4 hand example maps e1 to e2") {
    const Dimension dim(4);
    const RotationSeed seed{signs({1, -1, 1, -1}), signs({1, 1, 1, 1}), 0, 0};
    const UnitVector t = two_block_transform(UnitVector::basis(dim), seed);
    // Oracle: (1/4) H (1, -1, 1, -1)^T with the naive multiply.
    const auto expected = naive_hadamard_multiply(std::vector<double>{0.25, -0.25, 0.25, -0.25}, dim);
    for (std::size_t i = 0; i < 4; ++i) CHECK(t[i] == doctest::Approx(expected[i]));
    CHECK(t[1] == doctest::Approx(1.0));
    CHECK(std::abs(t[0]) < 1e-15);
}

TEST_CASE("two-block transform preserves norms") {
    for (std::size_t d = 2; d <= 4096; d *= 4) {
        const Dimension dim(d);
        for (std::uint64_t s = 0; s < 20; ++s) {
            StreamRng g(2, s, Layer::gauss);
            const UnitVector u = sample_uniform_sphere(dim, g);
            std::vector<double> out(d);
            const auto seed = RotationSeed::from_stream(dim, 2, s);
            two_block_transform_into(u.coords(), seed.d1, seed.d2, out, dim);
            REQUIRE(std::abs(euclidean_norm(out) - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("two_block_coordinate agrees with the full transform") {
    const Dimension dim(64);
    StreamRng g(3, 0, Layer::gauss);
    const UnitVector u = sample_uniform_sphere(dim, g);
    std::vector<double> scratch(64), full(64);
    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto seed = RotationSeed::from_stream(dim, 3, s);
        two_block_transform_into(u.coords(), seed.d1, seed.d2, full, dim);
        for (std::size_t k : {0u, 1u, 17u, 63u}) {
            CHECK(two_block_coordinate(u.coords(), seed.d1, seed.d2, k, scratch, dim) ==
                  doctest::Approx(full[k]).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(two_block_coordinate(u.coords(), SignVector(64), SignVector(64), 64, scratch, dim),
                    ContractError);
}

TEST_CASE("T(e1) unmixes onto the scaled hypercube") {
    for (std::size_t d : {8u, 64u, 1024u}) {
        const Dimension dim(d);
        const double v = 1.0 / std::sqrt(double(d));
        for (std::uint64_t s = 0; s < 20; ++s) {
            const auto t = two_block_transform(UnitVector::basis(dim), RotationSeed::from_stream(dim, 4, s));
            auto w = fwht(t.coords(), dim);
            for (double x : w) REQUIRE(std::abs(std::abs(x * v) - v) < 1e-9);
        }
    }
}

TEST_CASE("one-block transform of e1 is supported on two antipodal points") {
    const Dimension dim(16);
    const double v = 0.25;
    auto plus = signs({1, 1, -1, 1, -1, -1, 1, 1, 1, -1, 1, 1, -1, 1, 1, 1});
    auto out = one_block_transform(UnitVector::basis(dim), plus);
    for (std::size_t i = 0; i < 16; ++i) CHECK(out[i] == doctest::Approx(v));
    auto minus = signs({-1, 1, -1, 1, -1, -1, 1, 1, 1, -1, 1, 1, -1, 1, 1, 1});
    out = one_block_transform(UnitVector::basis(dim), minus);
    for (std::size_t i = 0; i < 16; ++i) CHECK(out[i] == doctest::Approx(-v));

    std::set<std::vector<long long>> support;
    for (std::uint64_t s = 0; s < 1000; ++s) {
        StreamRng r(5, s, Layer::d1);
        const auto y = one_block_transform(UnitVector::basis(dim), draw_signs(r, 16));
        std::vector<long long> key;
        for (double c : y.coords()) key.push_back(std::llround(c * 1e9));
        support.insert(key);
    }
    CHECK(support.size() == 2);
}

TEST_CASE("one-block transform of the flat vector with identity signs is e1") {
    const Dimension dim(4);
    const auto out = one_block_transform(UnitVector::ones(dim), SignVector(4));
    // Oracle: naive H applied to (1/2, 1/2, 1/2, 1/2), scaled by 1/2.
    auto expected = naive_hadamard_multiply(std::vector<double>{0.5, 0.5, 0.5, 0.5}, dim);
    for (std::size_t i = 0; i < 4; ++i) CHECK(out[i] == doctest::Approx(0.5 * expected[i]));
    CHECK(out[0] == doctest::Approx(1.0));
}

TEST_CASE("uniform sphere sampling") {
    SUBCASE("unit norm") {
        StreamRng r(6, 0, Layer::gauss);
        for (std::size_t d : {1u, 2u, 64u, 4096u}) {
            const auto x = sample_uniform_sphere(Dimension(d), r);
            CHECK(std::abs(euclidean_norm(x.coords()) - 1.0) < 1e-12);
        }
    }
    SUBCASE("d = 2 symmetric half-plane mass") {
        StreamRng r(7, 0, Layer::gauss);
        int below = 0;
        for (int i = 0; i < 100000; ++i) below += sample_uniform_sphere(Dimension(2), r)[0] <= 0.0;
        CHECK(std::abs(below / 1e5 - 0.5) < 0.01);
    }
    SUBCASE("d = 16 second moment is 1/16") {
        StreamRng r(8, 0, Layer::gauss);
        RunningStats sq;
        for (int i = 0; i < 100000; ++i) {
            const double x = sample_uniform_sphere(Dimension(16), r)[0];
            sq.push(x * x);
        }
        CHECK(std::abs(sq.mean - 1.0 / 16.0) < 3 * sq.standard_error());
    }
}

TEST_CASE("hypercube sampling is uniform over vertices") {
    StreamRng r(9, 0, Layer::aux);
    int plus = 0;
    for (int i = 0; i < 10000; ++i) {
        const auto v = sample_hypercube(Dimension(1), r);
        plus += v.coords()[0] > 0;
        REQUIRE(std::abs(std::abs(v.coords()[0]) - 1.0) == 0.0);
    }
    CHECK(std::abs(plus / 1e4 - 0.5) < 0.01);

    std::map<int, int> counts;
    StreamRng r3(10, 0, Layer::aux);
    for (int i = 0; i < 80000; ++i) {
        // d = 3 is not a power of two; draw three fair signs the same way the sampler does.
        const auto s = draw_signs(r3, 3);
        counts[(s[0] < 0) | ((s[1] < 0) << 1) | ((s[2] < 0) << 2)]++;
    }
    REQUIRE(counts.size() == 8);
    for (auto [cell, n] : counts) CHECK(std::abs(n / 8e4 - 0.125) < 0.01);

    for (std::size_t d : {2u, 16u, 1024u}) {
        const auto v = sample_hypercube(Dimension(d), r);
        CHECK(std::abs(euclidean_norm(v.coords()) - 1.0) < 1e-14);
    }
}

TEST_CASE("nearest hypercube vertex") {
    auto v = nearest_hypercube_vertex(std::vector<double>{0.9, -0.1, 0.3, -0.2});
    CHECK(v.coords() == std::vector<double>{0.5, -0.5, 0.5, -0.5});
    v = nearest_hypercube_vertex(std::vector<double>{1.0, 0.0, 0.0, 0.0});
    CHECK(v.signs == SignVector(4));  // sign(0) = +1

    StreamRng r(11, 0, Layer::gauss);
    for (std::size_t d = 1; d <= 10; ++d) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<double> x(d);
            double sq = 0.0;
            for (double& c : x) {
                c = r.gaussian();
                sq += c * c;
            }
            for (double& c : x) c /= std::sqrt(sq);
            const auto mask = oracle::best_vertex_by_enumeration(x);
            const auto got = nearest_hypercube_vertex(x);
            for (std::size_t i = 0; i < d; ++i) REQUIRE((got.signs[i] < 0) == bool((mask >> i) & 1ul));
        }
    }
}

TEST_CASE("hypercube distance closed form") {
    const Dimension dim(4);
    CHECK(hypercube_distance(std::vector<double>{0.5, -0.5, 0.5, 0.5}) == 0.0);
    CHECK(hypercube_distance(UnitVector::basis(dim)) == doctest::Approx(1.0));
    const auto e1 = UnitVector::basis(dim);
    CHECK(euclidean_distance(e1.coords(), std::vector<double>{0.5, 0.5, 0.5, 0.5}) == doctest::Approx(1.0));
    // d = 64: sqrt(2 - 2 / 8)
    CHECK(hypercube_distance(UnitVector::basis(Dimension(64))) == doctest::Approx(std::sqrt(1.75)));

    StreamRng r(12, 0, Layer::gauss);
    for (int i = 0; i < 200; ++i) {
        const auto x = sample_uniform_sphere(Dimension(32), r);
        const auto vertex = nearest_hypercube_vertex(x.coords()).coords();
        REQUIRE(std::abs(hypercube_distance(x) - euclidean_distance(x.coords(), vertex)) < 1e-9);
    }
}

TEST_CASE("hypercube distance of uniform points at d = 8192 sits between the bounds") {
    StreamRng r(13, 0, Layer::gauss);
    RunningStats stats;
    std::vector<double> x(8192);
    for (int i = 0; i < 10000; ++i) {
        sample_uniform_sphere_into(x, r);
        stats.push(hypercube_distance(x));
    }
    CHECK(stats.mean > 0.59);
    CHECK(stats.mean < 0.636);
}

TEST_CASE("scaled Hadamard map preserves pairwise distances") {
    const Dimension dim(256);
    const double scale = 1.0 / 16.0;
    StreamRng r(14, 0, Layer::gauss);
    for (int i = 0; i < 100; ++i) {
        std::vector<double> x(256), y(256);
        for (double& v : x) v = r.gaussian();
        for (double& v : y) v = r.gaussian();
        auto hx = fwht(x, dim), hy = fwht(y, dim);
        for (double& v : hx) v *= scale;
        for (double& v : hy) v *= scale;
        const double before = euclidean_distance(x, y);
        REQUIRE(std::abs(euclidean_distance(hx, hy) - before) / before < 1e-10);
    }
}

TEST_CASE("unmixed sign pattern of T(e1) is uniform on {+-1}^8") {
    const Dimension dim(8);
    const int n = 100000;
    std::vector<int> counts(256, 0);
    for (int i = 0; i < n; ++i) {
        const auto t = two_block_transform(UnitVector::basis(dim), RotationSeed::from_stream(dim, 15, i));
        const auto w = fwht(t.coords(), dim);
        int cell = 0;
        for (std::size_t j = 0; j < 8; ++j) cell |= (w[j] < 0) << j;
        counts[cell]++;
    }
    const double expected = n / 256.0;
    double chi2 = 0.0;
    for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
    const double p_value = boost::math::cdf(boost::math::complement(boost::math::chi_squared(255), chi2));
    CHECK(p_value > 1e-4);
}

TEST_CASE("moment identities of T(u) at reduced sample size") {
    const Dimension dim(64);
    StreamRng g(16, 0, Layer::gauss);
    const UnitVector u = sample_uniform_sphere(dim, g);
    const std::vector<std::pair<std::size_t, std::size_t>> pairs{{0, 1}, {5, 40}, {63, 2}};
    const auto m = transform_moment_summary(u, 20000, {16, 1}, pairs);
    for (std::size_t k = 0; k < 64; ++k) {
        CHECK(std::abs(m.mean[k]) < 4.0 / std::sqrt(20000.0));
        CHECK(std::abs(m.second_moments[k] - 1.0 / 64) < 5 * m.second_se[k]);
    }
    for (const auto& c : m.cross_moments) CHECK(std::abs(c.value) < 5 * c.standard_error);
}
