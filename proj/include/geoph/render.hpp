#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geoph/geometry.hpp"
#include "geoph/homology.hpp"
#include "geoph/precinct.hpp"

namespace geoph {

struct Palette {
    std::string dark;
    std::string light;
};

Palette palette_for(Candidate c);

/// Fill colour for a precinct: white for a tie, otherwise a linear ramp from
/// white towards the winner's dark shade as the margin grows from 0 to 1.
std::string margin_shade(const Precinct& p);

/// One horizontal bar per visible pair, grouped by dimension. Long-persistence
/// bars use the dark shade; infinite bars run to the plot horizon and end in
/// an arrowhead. Axes are drawn with lines only, so bars are the only rects.
std::string barcode_svg(const Barcode& b, Candidate candidate);
void render_barcode_svg(const Barcode& b, Candidate candidate, const std::filesystem::path& path);

/// Closed walks covering an F2 cycle, one per connected component, each a
/// vertex sequence whose first and last entries coincide.
std::vector<std::vector<VertexId>> cycle_walks(std::span<const Simplex> edges);

/// Precinct polygons shaded by margin, overlaid with one closed polyline per
/// component of every visible dimension-1 generator, in the candidate's
/// colour; long-persistence loops are darker and thicker. Throws
/// std::invalid_argument when a generator vertex has no position.
std::string feature_map_svg(const PrecinctMap& m, const Barcode& b,
                            std::span<const std::optional<Point2>> positions, Candidate candidate);
void render_feature_map(const PrecinctMap& m, const Barcode& b,
                        std::span<const std::optional<Point2>> positions, Candidate candidate,
                        const std::filesystem::path& path);

}  // namespace geoph
