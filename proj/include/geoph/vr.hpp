#pragma once

#include <optional>

#include "geoph/complex.hpp"
#include "geoph/geometry.hpp"

namespace geoph {

/// Vietoris-Rips filtration of a planar point cloud. Vertices enter at 0, an
/// edge at the Euclidean distance between its endpoints and a triangle at its
/// longest side; only simplices with value <= eps_max are kept. Vertex i of the
/// output is point i of the cloud.
///
/// eps_max defaults to the diameter of the cloud, which yields the complete
/// flag complex up to dimension max_dim. Throws std::invalid_argument when
/// eps_max <= 0 or max_dim is outside [0, 2]. Coincident points are accepted
/// with a warning and produce zero-length edges.
FilteredComplex build_vr_complex(const PointCloud& pc, std::optional<double> eps_max = {},
                                 int max_dim = 2);

}  // namespace geoph
