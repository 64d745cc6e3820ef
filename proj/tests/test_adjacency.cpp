#include <random>
#include <sstream>

#include "doctest.h"
#include "geoph/adjacency.hpp"
#include "geoph/diagnostics.hpp"
#include "geoph/homology.hpp"
#include "geoph/synth.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace geoph;

namespace {

Precinct square(std::string id, double x, double y, std::uint64_t blue, std::uint64_t red, double side = 1.0) {
    std::vector<Ring> rings{{{x, y}, {x + side, y}, {x + side, y + side}, {x, y + side}, {x, y}}};
    normalize_polygon(rings);
    return {std::move(id), std::move(rings), blue, red};
}

// Entry level from integer vote counts: the smallest k >= 1 with
// 1 - k / 20 <= |b - r| / (b + r), i.e. k >= 40 * min(b, r) / (b + r).
double expected_level(const Precinct& p) {
    const std::uint64_t lo = std::min(p.votes_blue, p.votes_red);
    const std::uint64_t total = p.votes_blue + p.votes_red;
    const std::uint64_t k = std::max<std::uint64_t>(1, (40 * lo + total - 1) / total);
    return double(k) * 0.05;
}

}  // namespace

TEST_CASE("vote margins and winners") {
    CHECK(vote_margin(square("a", 0, 0, 30, 70)) == doctest::Approx(0.4));
    CHECK(vote_margin(square("a", 0, 0, 50, 50)) == 0.0);
    CHECK(vote_margin(square("a", 0, 0, 0, 100)) == 1.0);
    CHECK_THROWS_AS(vote_margin(square("a", 0, 0, 0, 0)), InputError);
    CHECK(winner(square("a", 0, 0, 30, 70)) == Candidate::red);
    CHECK_FALSE(winner(square("a", 0, 0, 5, 5)).has_value());
}

TEST_CASE("margin levels") {
    CHECK(margin_level(1.0, 0.05) == doctest::Approx(0.05));
    CHECK(margin_level(0.96, 0.05) == doctest::Approx(0.05));
    CHECK(margin_level(0.95, 0.05) == doctest::Approx(0.05));
    CHECK(margin_level(0.92, 0.05) == doctest::Approx(0.10));
    CHECK(margin_level(0.88, 0.05) == doctest::Approx(0.15));
    CHECK(margin_level(0.9, 0.05) == doctest::Approx(0.10));
    CHECK(margin_level(0.1, 0.05) == doctest::Approx(0.90));
    CHECK(margin_level(0.0, 0.05) == doctest::Approx(1.0));
    CHECK(margin_level(0.5, 0.25) == doctest::Approx(0.5));
}

TEST_CASE("segment distance") {
    CHECK(segment_distance({0, 0}, {2, 0}, {1, -1}, {1, 1}) == 0.0);
    CHECK(segment_distance({0, 0}, {1, 0}, {1, 0}, {2, 5}) == 0.0);
    CHECK(segment_distance({0, 0}, {1, 0}, {0, 2}, {1, 2}) == doctest::Approx(2.0));
    CHECK(segment_distance({0, 0}, {1, 0}, {2, 1}, {3, 1}) == doctest::Approx(std::sqrt(2.0)));
    CHECK(segment_distance({0, 0}, {2, 0}, {1, 0}, {3, 0}) == 0.0);
}

TEST_CASE("queen adjacency") {
    SUBCASE("shared edge") {
        PrecinctMap m{"m", {square("a", 0, 0, 1, 2), square("b", 1, 0, 1, 2)}};
        CHECK(queen_adjacency(m).adjacent(0, 1));
    }
    SUBCASE("shared corner only") {
        PrecinctMap m{"m", {square("a", 0, 0, 1, 2), square("b", 1, 1, 1, 2)}};
        CHECK(queen_adjacency(m).adjacent(0, 1));
    }
    SUBCASE("gap of ten tolerances") {
        PrecinctMap m{"m", {square("a", 0, 0, 1, 2), square("b", 1 + 1e-8, 0, 1, 2)}};
        CHECK_FALSE(queen_adjacency(m, 1e-9).adjacent(0, 1));
        CHECK(queen_adjacency(m, 1e-7).adjacent(0, 1));
    }
    SUBCASE("T-junction with no shared vertex") {
        PrecinctMap m{"m", {square("a", 0, 0, 1, 2, 2.0), square("b", 2, 0.5, 1, 2)}};
        CHECK(queen_adjacency(m).adjacent(0, 1));
    }
    SUBCASE("grid has every queen neighbour and nothing else") {
        const auto m = synth_grid(4);
        const auto g = queen_adjacency(m);
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (std::size_t j = i + 1; j < m.size(); ++j) {
                const long dr = long(i / 4) - long(j / 4), dc = long(i % 4) - long(j % 4);
                CHECK(g.adjacent(i, j) == (std::abs(dr) <= 1 && std::abs(dc) <= 1));
            }
        }
        std::ostringstream out;
        write_adjacency(out, g);
        CHECK(out.str().rfind("r0c0\tr0c1\n", 0) == 0);
    }
    CHECK_THROWS_AS(queen_adjacency(synth_grid(2), -1.0), std::invalid_argument);
}

TEST_CASE("adjacency complex values") {
    SUBCASE("three mutually adjacent precincts") {
        PrecinctMap m{"m", {square("a", 0, 0, 1, 49), square("b", 1, 0, 2, 48), square("c", 0, 1, 3, 47)}};
        const auto fc = build_adjacency_complex(m, queen_adjacency(m), Candidate::red);
        REQUIRE(fc.size() == 7);
        CHECK(fc[*fc.index_of(Simplex{0})].value == doctest::Approx(0.05));
        CHECK(fc[*fc.index_of(Simplex{1})].value == doctest::Approx(0.10));
        CHECK(fc[*fc.index_of(Simplex{2})].value == doctest::Approx(0.15));
        CHECK(fc[*fc.index_of(Simplex{0, 1})].value == doctest::Approx(0.10));
        CHECK(fc[*fc.index_of(Simplex{0, 2})].value == doctest::Approx(0.15));
        CHECK(fc[*fc.index_of(Simplex{0, 1, 2})].value == doctest::Approx(0.15));
    }
    SUBCASE("non-adjacent winners stay separate") {
        PrecinctMap m{"m", {square("a", 0, 0, 1, 9), square("b", 5, 0, 1, 9)}};
        const auto fc = build_adjacency_complex(m, queen_adjacency(m), Candidate::red);
        CHECK(fc.size() == 2);
        CHECK(compute_persistence(fc).alive_count(0, 1.0) == 2);
    }
    SUBCASE("ties and the other side are excluded") {
        PrecinctMap m{"m", {square("a", 0, 0, 5, 5), square("b", 1, 0, 9, 1), square("c", 2, 0, 1, 9)}};
        const auto fc = build_adjacency_complex(m, queen_adjacency(m), Candidate::red);
        REQUIRE(fc.size() == 1);
        CHECK(fc[0].simplex == Simplex{2});
    }
    SUBCASE("dissent fixture") {
        const auto m = synth_dissent();
        const auto fc = build_adjacency_complex(m, queen_adjacency(m), Candidate::red);
        CHECK(fc.count_dim(0) == 8);
        const auto b = compute_persistence(fc);
        const auto h1 = b.in_dim(1);
        REQUIRE(h1.size() == 1);
        CHECK(h1[0].infinite());
        CHECK(h1[0].birth == doctest::Approx(0.10));
        CHECK(b.in_dim(0).size() == 1);
        const auto blue = build_adjacency_complex(m, queen_adjacency(m), Candidate::blue);
        REQUIRE(blue.size() == 1);
        CHECK(blue[0].simplex == Simplex{4});
        CHECK(blue[0].value == doctest::Approx(0.90));
    }
}

TEST_CASE("random grids agree with the exhaustive clique complex") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const std::size_t rows = 1 + seed % 3, cols = 1 + (seed * 7) % 4;
        const auto m = synth_random_grid(rows, cols, seed);
        std::vector<VertexId> winners;
        std::map<VertexId, double> level;
        std::set<std::pair<VertexId, VertexId>> adj;
        for (VertexId i = 0; i < m.size(); ++i) {
            const auto& p = m.precincts[i];
            if (p.votes_red <= p.votes_blue) continue;
            winners.push_back(i);
            level[i] = expected_level(p);
        }
        for (VertexId a : winners) {
            for (VertexId b : winners) {
                const long dr = long(a / cols) - long(b / cols), dc = long(a % cols) - long(b % cols);
                if (a < b && std::abs(dr) <= 1 && std::abs(dc) <= 1) adj.insert({a, b});
            }
        }
        const auto expected = oracle::clique_complex(winners, level, adj);
        const auto fc = build_adjacency_complex(m, queen_adjacency(m), Candidate::red);
        REQUIRE(fc.size() == expected.size());
        for (const auto& e : fc.entries()) {
            const auto it = expected.find(e.simplex);
            REQUIRE(it != expected.end());
            CHECK(e.value == doctest::Approx(it->second));
        }
        CHECK(testing_support::euler_mismatch(fc, compute_persistence(fc)) == "");
    }
}

TEST_CASE("zero-area precinct is kept with a warning") {
    Precinct sliver{"s", {{{1, 0}, {2, 0}, {1, 0}}}, 1, 3};
    PrecinctMap m{"m", {square("a", 0, 0, 1, 2), sliver}};
    ScopedWarningCapture warnings;
    CHECK(queen_adjacency(m).adjacent(0, 1));
    CHECK(warnings.contains("zero area"));
}
