#include <cmath>
#include <sstream>

#include "doctest.h"
#include "geoph/complex.hpp"

using namespace geoph;

namespace {

FilteredComplex hollow_triangle(double edge_value = 1.0) {
    return FilteredComplex::from_entries({{{0}, 0.0},
                                          {{1}, 0.0},
                                          {{2}, 0.0},
                                          {{0, 1}, edge_value},
                                          {{0, 2}, edge_value},
                                          {{1, 2}, edge_value}});
}

}  // namespace

TEST_CASE("simplex vertices are sorted and validated") {
    const Simplex s{2, 0, 1};
    CHECK(s.dim() == 2);
    CHECK(s[0] == 0);
    CHECK(s[2] == 2);
    CHECK(s.to_string() == "0,1,2");
    CHECK(s == Simplex{0, 1, 2});
    CHECK_THROWS_AS(Simplex({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Simplex({0, 1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Simplex(std::initializer_list<VertexId>{}), std::invalid_argument);
}

TEST_CASE("boundary of a triangle is its three edges") {
    const auto b = Simplex{0, 1, 2}.boundary();
    REQUIRE(b.size() == 3);
    CHECK(std::find(b.begin(), b.end(), Simplex{0, 1}) != b.end());
    CHECK(std::find(b.begin(), b.end(), Simplex{0, 2}) != b.end());
    CHECK(std::find(b.begin(), b.end(), Simplex{1, 2}) != b.end());
    CHECK(Simplex{4}.boundary().empty());
}

TEST_CASE("filtration order is value, then dimension, then lexicographic") {
    const auto fc = FilteredComplex::from_entries(
        {{{0, 1}, 1.0}, {{1}, 0.5}, {{0}, 1.0}, {{0, 1, 2}, 1.0}, {{2}, 0.0}, {{1, 2}, 1.0}, {{0, 2}, 1.0}});
    std::vector<std::string> order;
    for (const auto& e : fc.entries()) order.push_back(e.simplex.to_string());
    CHECK(order == std::vector<std::string>{"2", "1", "0", "0,1", "0,2", "1,2", "0,1,2"});
    CHECK(fc.index_of(Simplex{0, 2}) == 4u);
    CHECK_FALSE(fc.index_of(Simplex{3}).has_value());
    CHECK(fc.count_dim(1) == 3);
    CHECK(fc.max_dim() == 2);
    CHECK(fc.max_value() == 1.0);
    CHECK(fc.distinct_values() == std::vector<double>{0.0, 0.5, 1.0});
}

TEST_CASE("invalid filtrations are rejected") {
    SUBCASE("missing face") {
        CHECK_THROWS_AS(FilteredComplex::from_entries({{{0}, 0.0}, {{0, 1}, 1.0}}), std::invalid_argument);
    }
    SUBCASE("face after coface") {
        CHECK_THROWS_AS(FilteredComplex::from_entries({{{0}, 0.0}, {{1}, 2.0}, {{0, 1}, 1.0}}),
                        std::invalid_argument);
    }
    SUBCASE("duplicate simplex") {
        CHECK_THROWS_AS(FilteredComplex::from_entries({{{0}, 0.0}, {{0}, 1.0}}), std::invalid_argument);
    }
    SUBCASE("non-finite value") {
        CHECK_THROWS_AS(FilteredComplex::from_entries({{{0}, std::nan("")}}), std::invalid_argument);
    }
    SUBCASE("problems are reported individually") {
        const std::vector<FiltrationEntry> bad{{{0}, 0.0}, {{0, 1}, 1.0}, {{0}, 2.0}};
        CHECK(check_filtration(bad).size() >= 2);
    }
}

TEST_CASE("close_under_faces inserts missing faces at the smallest coface value") {
    SUBCASE("single triangle") {
        const auto fc = close_under_faces({{{0, 1, 2}, 1.0}});
        CHECK(fc.size() == 7);
        for (const auto& e : fc.entries()) CHECK(e.value == 1.0);
    }
    SUBCASE("existing face keeps its value") {
        const auto fc = close_under_faces({{{0, 1}, 2.0}, {{1}, 1.0}});
        REQUIRE(fc.size() == 3);
        CHECK(fc[*fc.index_of(Simplex{0})].value == 2.0);
        CHECK(fc[*fc.index_of(Simplex{1})].value == 1.0);
    }
    SUBCASE("two cofaces give the minimum") {
        const auto fc = close_under_faces({{{0, 1, 2}, 3.0}, {{1, 2, 3}, 2.0}});
        CHECK(fc[*fc.index_of(Simplex{1, 2})].value == 2.0);
        CHECK(fc[*fc.index_of(Simplex{0, 1})].value == 3.0);
        CHECK(fc[*fc.index_of(Simplex{2})].value == 2.0);
    }
    SUBCASE("closed input is unchanged") {
        const auto fc = hollow_triangle();
        const auto again = close_under_faces({fc.entries().begin(), fc.entries().end()});
        REQUIRE(again.size() == fc.size());
        for (std::size_t i = 0; i < fc.size(); ++i) {
            CHECK(again[i].simplex == fc[i].simplex);
            CHECK(again[i].value == fc[i].value);
        }
    }
    SUBCASE("face listed above its coface is lowered") {
        const auto fc = close_under_faces({{{0}, 5.0}, {{0, 1}, 1.0}});
        CHECK(fc[*fc.index_of(Simplex{0})].value == 1.0);
    }
}

TEST_CASE("complex_at thresholds inclusively") {
    const auto hollow = hollow_triangle();
    std::vector<FiltrationEntry> v(hollow.entries().begin(), hollow.entries().end());
    v.push_back({{0, 1, 2}, 2.0});
    const auto fc = FilteredComplex::from_entries(v);
    CHECK(complex_at(fc, -1.0).empty());
    CHECK(complex_at(fc, 0.0).size() == 3);
    CHECK(complex_at(fc, 1.5).size() == 6);
    CHECK(complex_at(fc, 2.0).size() == 7);
    CHECK(complex_at(fc, 10.0).size() == 7);
}

TEST_CASE("euler characteristic") {
    const std::vector<Simplex> filled{{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
    const std::vector<Simplex> hollow(filled.begin(), filled.end() - 1);
    CHECK(euler_characteristic(filled) == 1);
    CHECK(euler_characteristic(hollow) == 0);
    CHECK(euler_characteristic(std::vector<Simplex>{{0}, {7}}) == 2);
}

TEST_CASE("complex text format round-trips exactly") {
    const auto fc = FilteredComplex::from_entries(
        {{{0}, 0.0}, {{1}, 0.1}, {{0, 1}, std::sqrt(2.0)}, {{2}, 1e-300}, {{1, 2}, 1.0 / 3.0}});
    std::stringstream ss;
    write_complex(ss, fc);
    CHECK(ss.str().find("0,1\t") != std::string::npos);
    const auto back = read_complex(ss);
    REQUIRE(back.size() == fc.size());
    for (std::size_t i = 0; i < fc.size(); ++i) {
        CHECK(back[i].simplex == fc[i].simplex);
        CHECK(back[i].value == fc[i].value);
    }
    std::istringstream bad("0,1 2.0\n");
    CHECK_THROWS_AS(read_complex(bad), std::invalid_argument);
}
