#include <cmath>
#include <random>

#include "doctest.h"
#include "geoph/diagnostics.hpp"
#include "geoph/homology.hpp"
#include "geoph/vr.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace geoph;

namespace {

PointCloud cloud(std::vector<Point2> pts) { return PointCloud{std::move(pts), {}}; }

}  // namespace

TEST_CASE("unit square") {
    const auto fc = build_vr_complex(cloud({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), 2.0);
    CHECK(fc.count_dim(0) == 4);
    CHECK(fc.count_dim(1) == 6);
    CHECK(fc.count_dim(2) == 4);
    for (const auto& e : fc.entries()) {
        if (e.simplex.dim() == 2) CHECK(e.value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    }
    const auto b = compute_persistence(fc);
    const auto h1 = b.in_dim(1);
    REQUIRE(h1.size() == 1);
    CHECK(h1[0].birth == doctest::Approx(1.0));
    CHECK(h1[0].death == doctest::Approx(std::sqrt(2.0)));
    CHECK(h1[0].generator == std::vector<Simplex>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
    const auto h0 = b.in_dim(0);
    REQUIRE(h0.size() == 4);
    CHECK(std::count_if(h0.begin(), h0.end(), [](const auto& p) { return p.death == 1.0; }) == 3);
    CHECK(h0.back().infinite());
    CHECK(testing_support::euler_mismatch(fc, b) == "");
}

TEST_CASE("equilateral triangle has only a zero-length loop") {
    const auto fc = build_vr_complex(cloud({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}}), 2.0);
    CHECK(fc.size() == 7);
    const auto b = compute_persistence(fc);
    CHECK(b.in_dim(1).empty());
    bool zero_loop = false;
    for (const auto& p : b.pairs) zero_loop |= p.dimension == 1 && p.zero_length();
    CHECK(zero_loop);
}

TEST_CASE("degenerate clouds") {
    const auto one = build_vr_complex(cloud({{3, 4}}));
    REQUIRE(one.size() == 1);
    CHECK(one[0].value == 0.0);
    CHECK(build_vr_complex(cloud({})).empty());

    ScopedWarningCapture warnings;
    const auto twin = build_vr_complex(cloud({{1, 1}, {1, 1}, {2, 1}}));
    CHECK(warnings.contains("coincident"));
    CHECK(twin[*twin.index_of(Simplex{0, 1})].value == 0.0);
}

TEST_CASE("argument validation") {
    const auto pc = cloud({{0, 0}, {1, 0}});
    CHECK_THROWS_AS(build_vr_complex(pc, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(build_vr_complex(pc, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(build_vr_complex(pc, 1.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_vr_complex(cloud({{0, NAN}})), std::invalid_argument);
    CHECK(build_vr_complex(pc, 1.0, 0).size() == 2);
}

TEST_CASE("cutoff keeps exactly the simplices within eps") {
    const auto fc = build_vr_complex(cloud({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), 1.2);
    CHECK(fc.count_dim(1) == 4);
    CHECK(fc.count_dim(2) == 0);
    CHECK(compute_persistence(fc).in_dim(1).front().infinite());
}

TEST_CASE("matches exhaustive construction on random clouds") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> coord(0.0, 10.0);
    std::uniform_real_distribution<double> cut(2.0, 8.0);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Point2> pts(std::size_t(3 + trial % 12));
        for (auto& p : pts) p = {coord(rng), coord(rng)};
        const double eps = cut(rng);
        const auto fc = build_vr_complex(cloud(pts), eps);
        const auto expected = oracle::vr(pts, eps);
        REQUIRE(fc.size() == expected.size());
        for (const auto& e : fc.entries()) {
            const auto it = expected.find(e.simplex);
            REQUIRE(it != expected.end());
            CHECK(e.value == it->second);
        }
        CHECK(testing_support::euler_mismatch(fc, compute_persistence(fc)) == "");
    }
}

TEST_CASE("default cutoff is the diameter") {
    const std::vector<Point2> pts{{0, 0}, {4, 0}, {1, 3}, {2, 1}, {3, 3}};
    CHECK(diameter(cloud(pts)) == doctest::Approx(std::sqrt(18.0)));
    const auto fc = build_vr_complex(cloud(pts));
    CHECK(fc.size() == 5 + 10 + 10);
}
