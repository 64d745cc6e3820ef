#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "geoph/precinct.hpp"

namespace geoph {

/// Reads a GeoJSON FeatureCollection of Polygon / MultiPolygon features with
/// properties `id` (string), `votes_blue` and `votes_red` (non-negative
/// integers). Coordinates are used as planar (x, y). Throws InputError naming
/// the offending feature on any contract violation.
PrecinctMap load_precincts(const std::filesystem::path& path);
PrecinctMap parse_precincts(const std::string& text, const std::string& name = "map");

/// Writes a map as a FeatureCollection; each precinct becomes a MultiPolygon
/// with one polygon per counter-clockwise ring and the clockwise rings that
/// follow it as holes.
void write_precincts(std::ostream& out, const PrecinctMap& m);

}  // namespace geoph
