#include "geoph/precinct.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

#include "geoph/diagnostics.hpp"

namespace geoph {

std::string_view to_string(Candidate c) { return c == Candidate::blue ? "blue" : "red"; }

Candidate parse_candidate(std::string_view s) {
    if (s == "blue") return Candidate::blue;
    if (s == "red") return Candidate::red;
    throw InputError(fmt::format("unknown candidate '{}' (expected blue or red)", s));
}

Candidate opponent(Candidate c) { return c == Candidate::blue ? Candidate::red : Candidate::blue; }

BoundingBox Precinct::bounds() const {
    BoundingBox b;
    for (const auto& ring : rings) {
        for (const auto& p : ring) b.extend(p);
    }
    return b;
}

BoundingBox PrecinctMap::bounds() const {
    BoundingBox b;
    for (const auto& p : precincts) b.extend(p.bounds());
    return b;
}

void PrecinctMap::check_unique_ids() const {
    std::set<std::string_view> seen;
    for (const auto& p : precincts) {
        if (!seen.insert(p.id).second) throw InputError(fmt::format("duplicate precinct id '{}'", p.id));
    }
}

double signed_area(const Ring& ring) {
    double twice = 0.0;
    for (std::size_t i = 0; i + 1 < ring.size(); ++i) {
        twice += ring[i].x * ring[i + 1].y - ring[i + 1].x * ring[i].y;
    }
    return twice / 2.0;
}

void normalize_polygon(std::vector<Ring>& polygon) {
    for (std::size_t k = 0; k < polygon.size(); ++k) {
        auto& ring = polygon[k];
        if (ring.empty()) continue;
        if (!(ring.front() == ring.back())) ring.push_back(ring.front());
        const double area = signed_area(ring);
        const bool want_ccw = k == 0;
        if ((want_ccw && area < 0) || (!want_ccw && area > 0)) std::reverse(ring.begin(), ring.end());
    }
}

double vote_margin(const Precinct& p) {
    const std::uint64_t total = p.votes_blue + p.votes_red;
    if (total == 0) throw InputError(fmt::format("precinct '{}' has no votes; margin undefined", p.id));
    const double diff = p.votes_blue > p.votes_red ? double(p.votes_blue - p.votes_red)
                                                   : double(p.votes_red - p.votes_blue);
    return diff / double(total);
}

std::optional<Candidate> winner(const Precinct& p) {
    if (p.votes_blue > p.votes_red) return Candidate::blue;
    if (p.votes_red > p.votes_blue) return Candidate::red;
    return std::nullopt;
}

std::vector<std::size_t> winning_precincts(const PrecinctMap& m, Candidate c) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (winner(m.precincts[i]) == c) out.push_back(i);
    }
    return out;
}

Point2 centroid(const Precinct& p) {
    double area = 0.0, cx = 0.0, cy = 0.0;
    std::size_t count = 0;
    double sx = 0.0, sy = 0.0;
    // Work relative to one vertex to keep the cross products well conditioned.
    Point2 ref{};
    for (const auto& ring : p.rings) {
        if (!ring.empty()) {
            ref = ring.front();
            break;
        }
    }
    for (const auto& ring : p.rings) {
        for (std::size_t i = 0; i + 1 < ring.size(); ++i) {
            const Point2 a{ring[i].x - ref.x, ring[i].y - ref.y};
            const Point2 b{ring[i + 1].x - ref.x, ring[i + 1].y - ref.y};
            const double cross = a.x * b.y - b.x * a.y;
            area += cross;
            cx += (a.x + b.x) * cross;
            cy += (a.y + b.y) * cross;
            sx += a.x;
            sy += a.y;
            ++count;
        }
    }
    area /= 2.0;
    if (std::abs(area) > 0.0) return {ref.x + cx / (6.0 * area), ref.y + cy / (6.0 * area)};
    warn(fmt::format("precinct '{}' has zero area; using vertex average as centroid", p.id));
    if (count == 0) throw InputError(fmt::format("precinct '{}' has no vertices", p.id));
    return {ref.x + sx / double(count), ref.y + sy / double(count)};
}

PointCloud centroids(const PrecinctMap& m) {
    std::vector<std::size_t> all(m.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    return centroids(m, all);
}

PointCloud centroids(const PrecinctMap& m, const std::vector<std::size_t>& subset) {
    PointCloud pc;
    for (std::size_t i : subset) {
        if (i >= m.size()) throw std::invalid_argument("precinct index out of range");
        pc.points.push_back(centroid(m.precincts[i]));
        pc.labels.push_back(m.precincts[i].id);
    }
    return pc;
}

}  // namespace geoph
