#pragma once

#include <cstddef>
#include <cstdint>

#include "geoph/precinct.hpp"

namespace geoph {

/// n x n grid of unit-square precincts, all won by red with margin 0.4.
PrecinctMap synth_grid(std::size_t n);

/// 3 x 3 grid: a blue centre (margin 0.1) inside a ring of red precincts
/// (margin 0.9).
PrecinctMap synth_dissent();

/// A side x side red square with a circular blue precinct of the given radius
/// at its centre. With side equal to the raster size, map units are cells.
PrecinctMap synth_annulus(double radius, double side = 250.0, std::size_t segments = 256);

/// Two red squares separated by `gap` map units inside a blue frame.
PrecinctMap synth_blobs(double gap, double side = 250.0);

/// rows x cols grid of unit squares with independent random votes (ties included).
PrecinctMap synth_random_grid(std::size_t rows, std::size_t cols, std::uint64_t seed);

}  // namespace geoph
