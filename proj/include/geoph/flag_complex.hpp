#pragma once

#include <span>
#include <vector>

#include "geoph/complex.hpp"

namespace geoph {

struct WeightedEdge {
    VertexId u = 0;
    VertexId v = 0;
    double value = 0.0;
};

/// Clique (flag) complex up to `max_dim` (1 or 2) of a graph whose vertices
/// 0..n-1 enter at `vertex_values`. Built incrementally: vertices are added in
/// order of entry value (ties by index) and each new vertex is coned over its
/// lower neighbors. An edge enters no earlier than either endpoint and a
/// triangle at the maximum of its three edges.
///
/// `labels`, when non-empty, renames vertex i to labels[i] in the output.
FilteredComplex incremental_flag_complex(std::span<const double> vertex_values,
                                         std::span<const WeightedEdge> edges, int max_dim,
                                         std::span<const VertexId> labels = {});

}  // namespace geoph
