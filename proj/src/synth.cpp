#include "geoph/synth.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <fmt/format.h>

namespace geoph {
namespace {

Ring rect(double x0, double y0, double x1, double y1) {
    return {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}, {x0, y0}};
}

Precinct make(std::string id, std::vector<Ring> rings, std::uint64_t blue, std::uint64_t red) {
    normalize_polygon(rings);
    return {std::move(id), std::move(rings), blue, red};
}

Ring circle(double cx, double cy, double r, std::size_t segments) {
    Ring ring;
    for (std::size_t i = 0; i < segments; ++i) {
        const double a = 2.0 * std::numbers::pi * double(i) / double(segments);
        ring.push_back({cx + r * std::cos(a), cy + r * std::sin(a)});
    }
    ring.push_back(ring.front());
    return ring;
}

}  // namespace

PrecinctMap synth_grid(std::size_t n) {
    if (n == 0) throw std::invalid_argument("grid size must be positive");
    PrecinctMap m;
    m.name = fmt::format("grid{}", n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            m.precincts.push_back(make(fmt::format("r{}c{}", r, c),
                                       {rect(double(c), double(r), double(c + 1), double(r + 1))}, 30, 70));
        }
    }
    return m;
}

PrecinctMap synth_dissent() {
    PrecinctMap m;
    m.name = "dissent";
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            const bool centre = r == 1 && c == 1;
            m.precincts.push_back(make(fmt::format("r{}c{}", r, c),
                                       {rect(double(c), double(r), double(c + 1), double(r + 1))},
                                       centre ? 55 : 5, centre ? 45 : 95));
        }
    }
    return m;
}

PrecinctMap synth_annulus(double radius, double side, std::size_t segments) {
    if (!(radius > 0.0) || 2.0 * radius >= side) throw std::invalid_argument("annulus radius must fit inside the square");
    PrecinctMap m;
    m.name = fmt::format("annulus{}", radius);
    const double c = side / 2.0;
    m.precincts.push_back(make("ring", {rect(0.0, 0.0, side, side), circle(c, c, radius, segments)}, 10, 90));
    m.precincts.push_back(make("hole", {circle(c, c, radius, segments)}, 90, 10));
    return m;
}

PrecinctMap synth_blobs(double gap, double side) {
    const double w = (side - gap) / 2.0 - 20.0;
    if (!(gap > 0.0) || !(w > 0.0)) throw std::invalid_argument("blob gap does not fit");
    PrecinctMap m;
    m.name = fmt::format("blobs{}", gap);
    const double h = side / 2.0;
    Ring a = rect(20.0, h / 4.0, 20.0 + w, h / 4.0 + h / 2.0);
    Ring b = rect(20.0 + w + gap, h / 4.0, 20.0 + 2 * w + gap, h / 4.0 + h / 2.0);
    m.precincts.push_back(make("frame", {rect(0.0, 0.0, side, h), a, b}, 80, 20));
    m.precincts.push_back(make("west", {a}, 10, 90));
    m.precincts.push_back(make("east", {b}, 10, 90));
    return m;
}

PrecinctMap synth_random_grid(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> votes(0, 20);
    PrecinctMap m;
    m.name = fmt::format("random{}x{}_{}", rows, cols, seed);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const std::uint64_t blue = votes(rng);
            const std::uint64_t red = votes(rng) + (blue == 0 ? 1 : 0);
            m.precincts.push_back(make(fmt::format("r{}c{}", r, c),
                                       {rect(double(c), double(r), double(c + 1), double(r + 1))}, blue, red));
        }
    }
    return m;
}

}  // namespace geoph
