#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "geoph/adjacency.hpp"
#include "geoph/complex.hpp"
#include "geoph/homology.hpp"
#include "geoph/levelset.hpp"
#include "geoph/precinct.hpp"
#include "geoph/report.hpp"

namespace geoph {

struct RunConfig {
    Method method = Method::adjacency;
    Candidate candidate = Candidate::red;

    std::optional<double> eps_max;  // vr; defaults to the point-cloud diameter
    double step = kDefaultMarginStep;  // adjacency
    double tol = kDefaultAdjacencyTolerance;  // adjacency
    LevelSetOptions levelset;  // levelset
    std::size_t max_side = kMaxRasterSide;  // levelset

    // VR on more winning precincts than this warns; with alpha_switch it
    // falls back to the alpha complex instead.
    std::size_t vr_precinct_warning_threshold = 150;
    bool alpha_switch = true;
    double long_persistence_threshold = kLongPersistenceThreshold;

    // Throws InputError for out-of-range parameters.
    void validate() const;
};

struct PipelineResult {
    Method method = Method::adjacency;  // the builder actually used
    FilteredComplex complex;
    Barcode barcode;
    BenchmarkRow row;
    // Map position of each complex vertex, indexed by vertex id.
    std::vector<std::optional<Point2>> vertex_positions;

    std::optional<AdjacencyGraph> graph;
    std::optional<Raster> raster;
    std::optional<ScalarField> field;
    std::optional<GridVertexSchedule> schedule;
};

/// Filters to the candidate's winning precincts, builds the requested complex,
/// reduces it and classifies long-persistence bars. Builder failures are
/// rethrown as InputError or NumericalError with the method named.
PipelineResult run_pipeline(const RunConfig& cfg, const PrecinctMap& m);

/// complex.tsv, barcode.json, barcode.svg, feature_map.svg and timing.csv, plus
/// adjacency.tsv for the adjacency method and mask.pgm / field.pgm /
/// schedule.tsv for the level-set method.
void write_outputs(const PipelineResult& result, const PrecinctMap& m, const RunConfig& cfg,
                   const std::filesystem::path& out_dir);

}  // namespace geoph
