#include "geoph/vr.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "geoph/diagnostics.hpp"
#include "geoph/flag_complex.hpp"

namespace geoph {

double diameter(const PointCloud& pc) {
    double d = 0.0;
    for (std::size_t i = 0; i < pc.size(); ++i) {
        for (std::size_t j = i + 1; j < pc.size(); ++j) d = std::max(d, distance(pc.points[i], pc.points[j]));
    }
    return d;
}

std::vector<std::pair<std::size_t, std::size_t>> coincident_pairs(const PointCloud& pc) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < pc.size(); ++i) {
        for (std::size_t j = i + 1; j < pc.size(); ++j) {
            if (pc.points[i] == pc.points[j]) out.emplace_back(i, j);
        }
    }
    return out;
}

FilteredComplex build_vr_complex(const PointCloud& pc, std::optional<double> eps_max, int max_dim) {
    for (const auto& p : pc.points) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw std::invalid_argument("point cloud has a non-finite coordinate");
        }
    }
    double eps = 0.0;
    if (eps_max) {
        eps = *eps_max;
        if (!(eps > 0.0)) throw std::invalid_argument(fmt::format("eps_max must be positive, got {}", eps));
    } else {
        eps = diameter(pc);
        if (eps == 0.0) eps = 1.0;  // zero or one distinct location
    }
    if (max_dim < 0 || max_dim > 2) throw std::invalid_argument("max_dim must be in [0, 2]");

    const std::size_t n = pc.size();
    std::vector<WeightedEdge> edges;
    std::size_t coincident = 0;
    if (max_dim >= 1) {
        // Lower neighbours of each vertex in input order.
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t u = 0; u < v; ++u) {
                const double d = distance(pc.points[u], pc.points[v]);
                if (d > eps) continue;
                if (d == 0.0) ++coincident;
                edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), d});
            }
        }
    }
    if (coincident > 0) warn(fmt::format("{} coincident point pair(s) give zero-length edges", coincident));
    std::vector<double> zeros(n, 0.0);
    return incremental_flag_complex(zeros, edges, max_dim);
}

}  // namespace geoph
