#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "geoph/complex.hpp"
#include "geoph/geometry.hpp"
#include "geoph/precinct.hpp"

namespace geoph {

inline constexpr std::size_t kMaxRasterSide = 250;

/// Row-major boolean grid; row 0 is the northern edge.
struct BitMask {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::uint8_t> cells;

    BitMask() = default;
    BitMask(std::size_t w, std::size_t h, bool fill = false)
        : width(w), height(h), cells(w * h, fill ? 1 : 0) {}

    bool at(std::size_t row, std::size_t col) const { return cells[row * width + col] != 0; }
    void set(std::size_t row, std::size_t col, bool v) { cells[row * width + col] = v ? 1 : 0; }
    std::size_t count() const;
    bool all() const { return count() == cells.size(); }
    bool none() const { return count() == 0; }
    friend bool operator==(const BitMask&, const BitMask&) = default;
};

/// Maps grid coordinates to map coordinates. (row, col) = (0, 0) is the
/// north-west corner of the first cell; cell centres sit at half-integers.
struct GridTransform {
    double origin_x = 0.0;  // map x of the west edge
    double origin_y = 0.0;  // map y of the north edge
    double cell_size = 1.0;

    Point2 to_map(double row, double col) const {
        return {origin_x + col * cell_size, origin_y - row * cell_size};
    }
    Point2 cell_center(std::size_t row, std::size_t col) const {
        return to_map(double(row) + 0.5, double(col) + 0.5);
    }
};

struct Raster {
    BitMask mask;
    GridTransform transform;
};

/// Even-odd scanline fill of the candidate's winning precincts, sampled at
/// cell centres. The grid covers the bounding box of the whole map with its
/// longer side equal to `max_side` cells. An empty map gives an all-false
/// max_side x max_side mask over the unit square.
Raster rasterize_mask(const PrecinctMap& m, Candidate candidate, std::size_t max_side = kMaxRasterSide);

/// Grid of reals aligned with a BitMask.
struct ScalarField {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<double> values;

    double at(std::size_t row, std::size_t col) const { return values[row * width + col]; }
};

/// Signed distance in cell units, positive inside. For a cell inside the
/// mask the value is (distance between its centre and the nearest outside
/// centre) - 1/2, and symmetrically negative outside, which places the zero
/// level on the cell faces. Exact Euclidean distance transform, clipped to
/// [-clip, clip]. A mask that is all true or all false gives a constant
/// +clip or -clip field with a warning.
ScalarField signed_distance_field(const BitMask& mask, double clip = double(kMaxRasterSide));

/// {x : phi(x) + v * T >= 0}: for constant outward speed and signed-distance
/// initial data this is the exact level-set solution at time T. A field with
/// no non-negative value has no region and stays empty.
BitMask superlevel_mask_at(const ScalarField& phi, double velocity, double time);

struct LevelSetOptions {
    double velocity = 1.0;
    double dt = 1.0;
    // 0 selects max(width, height).
    std::size_t n_steps = 0;
    std::size_t stride = 5;
};

/// Lattice points on rows and columns that are multiples of the stride, in
/// row-major order, with the first step at which each entered the evolving
/// region.
struct GridVertexSchedule {
    std::size_t stride = 5;
    std::size_t rows = 0;  // lattice rows
    std::size_t cols = 0;  // lattice columns
    struct Vertex {
        std::size_t row = 0;  // pixel row
        std::size_t col = 0;  // pixel column
        std::optional<std::size_t> entry;
    };
    std::vector<Vertex> vertices;

    VertexId id(std::size_t lattice_row, std::size_t lattice_col) const {
        return static_cast<VertexId>(lattice_row * cols + lattice_col);
    }
};

/// Steps T = 0..n_steps, adding each lattice point the first time it lies in
/// the superlevel set at time T * dt. Throws std::invalid_argument when the
/// stride is zero or does not fit inside the grid, or when velocity or dt is
/// not positive. No point enters when the field has no non-negative value.
GridVertexSchedule schedule_grid_vertices(const ScalarField& phi, const LevelSetOptions& options);

/// Lattice neighbours of a vertex: the four cardinal ones plus north-west and
/// south-east, which triangulates each lattice square along one diagonal.
std::vector<VertexId> lattice_neighbors(const GridVertexSchedule& s, VertexId v);

struct LevelSetComplex {
    FilteredComplex complex;
    GridVertexSchedule schedule;
};

/// Filtered complex on the stride lattice: a vertex enters at its scheduled
/// step, an edge or triangle once all its vertices have entered. Warns when
/// some lattice point never enters within n_steps.
LevelSetComplex build_levelset_complex(const ScalarField& phi, const LevelSetOptions& options = {});

/// 8-bit binary PGM (P5). Masks map to 0/255; fields are scaled linearly from
/// their minimum to maximum.
void write_pgm(std::ostream& out, const BitMask& mask);
void write_pgm(std::ostream& out, const ScalarField& field);

/// `row<TAB>col<TAB>entry_time` per lattice point; `inf` for points that never enter.
void write_schedule(std::ostream& out, const GridVertexSchedule& s);

}  // namespace geoph
