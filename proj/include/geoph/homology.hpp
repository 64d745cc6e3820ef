#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "geoph/complex.hpp"

namespace geoph {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Sparse F2 boundary matrix. Column j holds the sorted row indices of the
/// codimension-one faces of simplex j, in filtration order.
struct BoundaryMatrix {
    std::vector<std::vector<std::size_t>> columns;
    std::vector<int> dims;

    std::size_t size() const { return columns.size(); }
};

BoundaryMatrix build_boundary_matrix(const FilteredComplex& fc);

inline constexpr std::size_t kNoIndex = std::numeric_limits<std::size_t>::max();

/// Output of the standard left-to-right column reduction R = D V.
struct ReducedMatrix {
    std::vector<std::vector<std::size_t>> columns;  // R
    std::vector<int> dims;
    // V restricted to edge columns: the edges whose boundaries were summed into
    // column j. Empty for other dimensions.
    std::vector<std::vector<std::size_t>> chains;
    // For a birth column, the column that kills it; for a death column, the
    // column it kills; kNoIndex when unpaired.
    std::vector<std::size_t> partner;

    std::size_t size() const { return columns.size(); }
    bool is_zero(std::size_t j) const { return columns[j].empty(); }
    std::size_t low(std::size_t j) const { return columns[j].back(); }
};

ReducedMatrix reduce_matrix(BoundaryMatrix m);

/// A homology class with its lifetime [birth, death). Values are filtration
/// values, not column indices.
struct PersistencePair {
    int dimension = 0;
    double birth = 0.0;
    double death = kInfinity;
    std::size_t birth_index = 0;
    std::size_t death_index = kNoIndex;
    // Vertex for dimension 0, an F2 cycle of edges for dimension 1.
    std::vector<Simplex> generator;
    bool long_persistence = false;
    // Set by classify_long_persistence for dimension-1 pairs.
    std::optional<double> ratio;

    bool infinite() const { return death == kInfinity; }
    bool zero_length() const { return death == birth; }
    double persistence() const { return death - birth; }
    bool alive_at(double t) const { return birth <= t && t < death; }
};

/// All pairs from one reduction. Zero-length pairs are kept here for oracle
/// checks; visible() drops them.
struct Barcode {
    std::vector<PersistencePair> pairs;
    double max_filtration = 0.0;

    std::vector<PersistencePair> visible() const;
    std::vector<PersistencePair> in_dim(int dim) const;
    // Longest visible bar in `dim`, infinite deaths replaced by max_filtration.
    double max_persistence(int dim) const;
    std::size_t alive_count(int dim, double t) const;
};

Barcode persistence_pairs(const ReducedMatrix& reduced, const FilteredComplex& fc);

/// Convenience: build, reduce, pair.
Barcode compute_persistence(const FilteredComplex& fc);

/// Edge set of the reduction chain of the class's birth column: a cycle present
/// at the birth value. Throws std::invalid_argument unless pair.dimension == 1.
std::vector<Simplex> extract_generator_cycle(const ReducedMatrix& reduced,
                                             const FilteredComplex& fc,
                                             const PersistencePair& pair);

inline constexpr double kLongPersistenceThreshold = 0.75;

/// Flags dimension-1 pairs whose persistence is at least `threshold` times the
/// longest dimension-1 persistence. Infinite bars count as max_filtration - birth
/// in the denominator and are always flagged.
Barcode classify_long_persistence(Barcode barcode,
                                  double threshold = kLongPersistenceThreshold);

/// Betti numbers (b0, b1, b2) by dense Gaussian elimination over F2 on the
/// boundary maps. Independent of reduce_matrix; intended as a test oracle.
std::array<long, 3> betti_oracle(std::span<const Simplex> complex);

}  // namespace geoph
