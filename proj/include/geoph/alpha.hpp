#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "geoph/complex.hpp"
#include "geoph/geometry.hpp"

namespace geoph {

/// Delaunay triangulation of a planar point cloud. Vertex ids index the cloud.
struct Triangulation {
    std::size_t num_points = 0;
    std::vector<std::array<VertexId, 3>> triangles;  // counter-clockwise
    std::vector<std::array<VertexId, 2>> edges;      // (lo, hi), sorted
    std::vector<bool> on_hull;                       // parallel to edges
    // Exact repeats of an earlier point: (duplicate, representative).
    std::vector<std::pair<VertexId, VertexId>> duplicates;
};

struct DelaunayOptions {
    // Incircle determinants this close to zero are decided exactly.
    double incircle_tolerance = 1e-12;
    // Check every triangle's circumcircle against every point after building.
    bool verify = true;
};

/// Bowyer-Watson incremental insertion in input order. Four or more
/// cocircular points are resolved so every such diagonal is the
/// lexicographically smallest choice. With fewer than three distinct points
/// the result has edges only. Throws NumericalError when three or more
/// distinct points are all collinear, or when verification fails.
Triangulation delaunay_triangulation(const PointCloud& pc, const DelaunayOptions& options = {});

/// Violations of the empty-circumcircle, orientation and triangle-count
/// properties; empty when `tri` is a Delaunay triangulation of `pc`.
std::vector<std::string> verify_delaunay(const Triangulation& tri, const PointCloud& pc,
                                         double incircle_tolerance = 1e-12);

/// Alpha filtration in the radius convention: vertices at 0, triangles at
/// their circumradius, Gabriel edges at half their length and other edges at
/// the smallest value of an incident triangle.
FilteredComplex alpha_filtration(const Triangulation& tri, const PointCloud& pc);

}  // namespace geoph
