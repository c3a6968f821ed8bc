#include <doctest.h>

#include <array>
#include <cmath>
#include <set>

#include "hadarot/metrics.hpp"
#include "hadarot/rng.hpp"

using namespace hadarot;

TEST_CASE("streams are reproducible from their address") {
    StreamRng a(5, 17, Layer::d1), b(5, 17, Layer::d1);
    for (int i = 0; i < 1000; ++i) REQUIRE(a() == b());
}

TEST_CASE("layers, stream indices and seeds give different streams") {
    std::set<std::uint64_t> first;
    for (std::uint64_t seed : {1u, 2u}) {
        for (std::uint64_t stream : {0u, 1u, 2u}) {
            for (Layer layer : {Layer::d1, Layer::d2, Layer::gauss, Layer::aux}) {
                StreamRng r(seed, stream, layer);
                first.insert(r());
            }
        }
    }
    CHECK(first.size() == 24);
}

TEST_CASE("stream_index_of is order sensitive") {
    CHECK(stream_index_of({1, 2}) != stream_index_of({2, 1}));
    CHECK(stream_index_of({1, 2}) == stream_index_of({1, 2}));
    StreamSpec s{9, 3};
    CHECK(s.child(0).stream != s.child(1).stream);
}

TEST_CASE("uniform draws lie in [0, 1) with mean 1/2") {
    StreamRng r(3, 0, Layer::aux);
    RunningStats stats;
    for (int i = 0; i < 200000; ++i) {
        const double u = r.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        stats.push(u);
    }
    CHECK(std::abs(stats.mean - 0.5) < 4 * stats.standard_error());
}

TEST_CASE("gaussian draws have unit variance and zero mean") {
    StreamRng r(4, 0, Layer::gauss);
    RunningStats first, second;
    for (int i = 0; i < 200000; ++i) {
        const double g = r.gaussian();
        first.push(g);
        second.push(g * g);
    }
    CHECK(std::abs(first.mean) < 4 * first.standard_error());
    CHECK(std::abs(second.mean - 1.0) < 4 * second.standard_error());
}

TEST_CASE("RunningStats merge equals a single pass") {
    StreamRng r(6, 0, Layer::gauss);
    RunningStats all, left, right;
    for (int i = 0; i < 1000; ++i) {
        const double v = r.gaussian() * 3.0 + 1.0;
        all.push(v);
        (i < 377 ? left : right).push(v);
    }
    left.merge(right);
    CHECK(left.n == all.n);
    CHECK(left.mean == doctest::Approx(all.mean).epsilon(1e-12));
    CHECK(left.variance() == doctest::Approx(all.variance()).epsilon(1e-12));
    RunningStats empty;
    empty.merge(all);
    CHECK(empty.mean == all.mean);
}
