#include <cmath>
#include <sstream>

#include "doctest.h"
#include "geoph/diagnostics.hpp"
#include "geoph/homology.hpp"
#include "geoph/levelset.hpp"
#include "geoph/synth.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace geoph;

namespace {

BitMask disk_with_hole(std::size_t side, double outer, double hole) {
    BitMask m(side, side);
    const double c = double(side) / 2.0;
    for (std::size_t r = 0; r < side; ++r) {
        for (std::size_t col = 0; col < side; ++col) {
            const double d = std::hypot(double(r) + 0.5 - c, double(col) + 0.5 - c);
            m.set(r, col, d <= outer && d > hole);
        }
    }
    return m;
}

Precinct polygon(std::string id, std::vector<Ring> rings, std::uint64_t blue, std::uint64_t red) {
    normalize_polygon(rings);
    return {std::move(id), std::move(rings), blue, red};
}

}  // namespace

TEST_CASE("rasterization") {
    SUBCASE("polygon covering its bounding box") {
        PrecinctMap m{"m", {polygon("a", {{{0, 0}, {4, 0}, {4, 2}, {0, 2}, {0, 0}}}, 1, 2)}};
        const auto r = rasterize_mask(m, Candidate::red, 40);
        CHECK(r.mask.width == 40);
        CHECK(r.mask.height == 20);
        CHECK(r.mask.all());
        CHECK(rasterize_mask(m, Candidate::blue, 40).mask.none());
    }
    SUBCASE("empty map") {
        const auto r = rasterize_mask(PrecinctMap{}, Candidate::red, 16);
        CHECK(r.mask.width == 16);
        CHECK(r.mask.none());
    }
    SUBCASE("square with a square hole matches point-in-polygon on every cell") {
        const std::vector<Ring> rings{{{0, 0}, {10, 0}, {10, 10}, {0, 10}, {0, 0}},
                                      {{3, 3.3}, {3, 7.1}, {6.6, 7.1}, {6.6, 3.3}, {3, 3.3}}};
        PrecinctMap m{"m", {polygon("a", rings, 0, 5)}};
        const auto r = rasterize_mask(m, Candidate::red, 37);
        std::size_t mismatches = 0;
        for (std::size_t row = 0; row < r.mask.height; ++row) {
            for (std::size_t col = 0; col < r.mask.width; ++col) {
                const bool want = oracle::inside(m.precincts[0].rings, r.transform.cell_center(row, col));
                mismatches += want != r.mask.at(row, col);
            }
        }
        CHECK(mismatches == 0);
        CHECK_FALSE(r.mask.at(18, 18));
        CHECK(r.mask.at(0, 0));
    }
    SUBCASE("row 0 is north") {
        PrecinctMap m{"m", {polygon("a", {{{0, 0}, {2, 0}, {2, 1}, {0, 1}, {0, 0}}}, 1, 2),
                            polygon("b", {{{0, 1}, {2, 1}, {2, 2}, {0, 2}, {0, 1}}}, 2, 1)}};
        const auto r = rasterize_mask(m, Candidate::blue, 4);
        CHECK(r.mask.at(0, 0));
        CHECK_FALSE(r.mask.at(3, 0));
        CHECK(r.transform.cell_center(0, 0).y == doctest::Approx(1.75));
    }
}

TEST_CASE("signed distance matches an exhaustive scan") {
    BitMask m(17, 13);
    for (std::size_t r = 3; r < 9; ++r) {
        for (std::size_t c = 2; c < 12; ++c) m.set(r, c, !(r == 5 && c >= 5 && c <= 7));
    }
    m.set(11, 15, true);
    const auto phi = signed_distance_field(m, 100.0);
    const auto d = oracle::nearest_opposite(m.cells, m.width, m.height);
    for (std::size_t i = 0; i < m.cells.size(); ++i) {
        const double want = m.cells[i] ? d[i] - 0.5 : 0.5 - d[i];
        CHECK(phi.values[i] == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("signed distance shapes") {
    SUBCASE("single cell") {
        BitMask m(9, 9);
        m.set(4, 4, true);
        const auto phi = signed_distance_field(m);
        CHECK(phi.at(4, 4) == doctest::Approx(0.5));
        for (std::size_t k = 1; k < 4; ++k) CHECK(phi.at(4, 4 + k + 1) < phi.at(4, 4 + k));
    }
    SUBCASE("half plane is linear with unit slope") {
        BitMask m(12, 6);
        for (std::size_t r = 0; r < 6; ++r) {
            for (std::size_t c = 0; c < 5; ++c) m.set(r, c, true);
        }
        const auto phi = signed_distance_field(m);
        for (std::size_t c = 0; c + 1 < 12; ++c) CHECK(phi.at(2, c) - phi.at(2, c + 1) == doctest::Approx(1.0));
        CHECK(phi.at(2, 4) == doctest::Approx(0.5));
        CHECK(phi.at(2, 5) == doctest::Approx(-0.5));

        const auto moved = superlevel_mask_at(phi, 1.0, 3.0);
        for (std::size_t c = 0; c < 12; ++c) CHECK(moved.at(1, c) == (c < 8));
        CHECK(superlevel_mask_at(phi, 1.0, 0.0) == m);
    }
    SUBCASE("symmetric mask gives a symmetric field") {
        const auto m = disk_with_hole(30, 12, 4);
        const auto phi = signed_distance_field(m);
        for (std::size_t r = 0; r < 30; ++r) {
            for (std::size_t c = 0; c < 30; ++c) {
                CHECK(phi.at(r, c) == doctest::Approx(phi.at(29 - r, c)));
                CHECK(phi.at(r, c) == doctest::Approx(phi.at(c, r)));
            }
        }
    }
    SUBCASE("clipping and constant masks") {
        BitMask m(40, 1);
        m.set(0, 0, true);
        CHECK(signed_distance_field(m, 5.0).at(0, 39) == -5.0);
        ScopedWarningCapture warnings;
        const auto full = signed_distance_field(BitMask(4, 4, true), 7.0);
        CHECK(full.at(2, 2) == 7.0);
        CHECK(warnings.contains("full"));
        CHECK(signed_distance_field(BitMask(4, 4), 7.0).at(0, 0) == -7.0);
    }
    CHECK_THROWS_AS(signed_distance_field(BitMask(2, 2), 0.0), std::invalid_argument);
}

TEST_CASE("a hole of radius r fills at about T = r") {
    for (double r : {4.0, 7.5, 11.0}) {
        const auto phi = signed_distance_field(disk_with_hole(60, 28, r));
        int filled_at = -1;
        for (int t = 0; t <= 20 && filled_at < 0; ++t) {
            const auto m = superlevel_mask_at(phi, 1.0, double(t));
            bool hole_open = false;
            for (std::size_t row = 25; row < 35; ++row) {
                for (std::size_t c = 25; c < 35; ++c) hole_open |= !m.at(row, c);
            }
            if (!hole_open) filled_at = t;
        }
        CHECK(std::abs(filled_at - std::ceil(r)) <= 1);
    }
}

TEST_CASE("lattice schedule") {
    const auto phi = signed_distance_field(disk_with_hole(41, 25, 8));
    LevelSetOptions opt;
    opt.stride = 5;
    const auto s = schedule_grid_vertices(phi, opt);
    CHECK(s.rows == 9);
    CHECK(s.cols == 9);
    REQUIRE(s.vertices.size() == 81);
    for (const auto& v : s.vertices) {
        CHECK(v.row % 5 == 0);
        REQUIRE(v.entry.has_value());
        // Entry step is the first integer T with phi + T >= 0.
        CHECK(double(*v.entry) == std::max(0.0, std::ceil(-phi.at(v.row, v.col))));
    }
    CHECK(lattice_neighbors(s, s.id(0, 0)).size() == 3);
    CHECK(lattice_neighbors(s, s.id(4, 4)).size() == 6);
    CHECK(lattice_neighbors(s, s.id(8, 8)).size() == 3);
    CHECK(lattice_neighbors(s, s.id(0, 8)).size() == 2);

    std::ostringstream out;
    write_schedule(out, s);
    CHECK(out.str().rfind("0\t0\t", 0) == 0);

    LevelSetOptions bad = opt;
    bad.stride = 0;
    CHECK_THROWS_AS(schedule_grid_vertices(phi, bad), std::invalid_argument);
    bad.stride = 41;
    CHECK_THROWS_AS(schedule_grid_vertices(phi, bad), std::invalid_argument);
    bad = opt;
    bad.dt = 0.0;
    CHECK_THROWS_AS(schedule_grid_vertices(phi, bad), std::invalid_argument);
}

TEST_CASE("level-set complexes") {
    SUBCASE("all-true mask") {
        ScopedWarningCapture warnings;
        const auto ls = build_levelset_complex(signed_distance_field(BitMask(21, 21, true)));
        for (const auto& e : ls.complex.entries()) CHECK(e.value == 0.0);
        CHECK(ls.complex.count_dim(0) == 25);
        CHECK(ls.complex.count_dim(1) == 2 * 4 * 5 + 16);
        CHECK(ls.complex.count_dim(2) == 32);
        const auto b = compute_persistence(ls.complex);
        CHECK(b.alive_count(0, 0.0) == 1);
        CHECK(b.alive_count(1, 0.0) == 0);
        CHECK(oracle::betti(complex_at(ls.complex, 0.0)) == std::array<long, 3>{1, 0, 0});
    }
    SUBCASE("annulus") {
        const auto raster = rasterize_mask(synth_annulus(20), Candidate::red);
        const auto ls = build_levelset_complex(signed_distance_field(raster.mask));
        const auto b = compute_persistence(ls.complex);
        const auto h1 = b.in_dim(1);
        REQUIRE(h1.size() == 1);
        CHECK(h1[0].birth == 0.0);
        CHECK(std::abs(h1[0].death - 20.0) <= 6.0);
        CHECK(b.in_dim(0).size() == 1);
        CHECK(testing_support::euler_mismatch(ls.complex, b) == "");
    }
    SUBCASE("two blobs merge at about half their gap") {
        for (double gap : {20.0, 40.0}) {
            const auto raster = rasterize_mask(synth_blobs(gap), Candidate::red);
            const auto ls = build_levelset_complex(signed_distance_field(raster.mask));
            const auto b = compute_persistence(ls.complex);
            CHECK(b.alive_count(0, 0.0) == 2);
            const auto h0 = b.in_dim(0);
            REQUIRE(h0.size() == 2);
            CHECK(h0[0].birth == 0.0);
            CHECK(std::abs(h0[0].death - gap / 2.0) <= 5.0);
            CHECK(testing_support::euler_mismatch(ls.complex, b) == "");
        }
    }
    SUBCASE("empty mask has no region to grow") {
        ScopedWarningCapture warnings;
        const auto phi = signed_distance_field(BitMask(21, 21));
        CHECK(warnings.contains("empty"));
        const auto ls = build_levelset_complex(phi);
        CHECK(ls.complex.empty());
        CHECK(ls.schedule.vertices.size() == 25);
        for (const auto& v : ls.schedule.vertices) CHECK_FALSE(v.entry.has_value());
        CHECK_FALSE(warnings.contains("never enter"));
        CHECK(superlevel_mask_at(phi, 1.0, 1000.0) == BitMask(21, 21));
    }
    SUBCASE("step budget too small") {
        BitMask m(30, 30);
        m.set(0, 0, true);
        LevelSetOptions opt;
        opt.n_steps = 3;
        ScopedWarningCapture warnings;
        const auto ls = build_levelset_complex(signed_distance_field(m), opt);
        CHECK(warnings.contains("never enter"));
        CHECK(ls.complex.count_dim(0) < 36);
        std::ostringstream out;
        write_schedule(out, ls.schedule);
        CHECK(out.str().find("inf") != std::string::npos);
    }
}

TEST_CASE("PGM output") {
    BitMask m(3, 2);
    m.set(0, 1, true);
    std::ostringstream out;
    write_pgm(out, m);
    const std::string s = out.str();
    CHECK(s.rfind("P5\n3 2\n255\n", 0) == 0);
    CHECK(s.size() == 11 + 6);
    CHECK(static_cast<unsigned char>(s[12]) == 255);
}
