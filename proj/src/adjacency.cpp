#include "geoph/adjacency.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

#include "geoph/diagnostics.hpp"
#include "geoph/flag_complex.hpp"
#include "geoph/predicates.hpp"

namespace geoph {
namespace {

constexpr std::size_t kNoLocal = static_cast<std::size_t>(-1);

double point_segment_distance(const Point2& p, const Point2& a, const Point2& b) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    if (len2 == 0.0) return distance(p, a);
    double t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return distance(p, Point2{a.x + t * dx, a.y + t * dy});
}

bool on_segment(const Point2& p, const Point2& a, const Point2& b) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    const int o1 = orient2d(a, b, c), o2 = orient2d(a, b, d);
    const int o3 = orient2d(c, d, a), o4 = orient2d(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && on_segment(c, a, b)) return true;
    if (o2 == 0 && on_segment(d, a, b)) return true;
    if (o3 == 0 && on_segment(a, c, d)) return true;
    if (o4 == 0 && on_segment(b, c, d)) return true;
    return false;
}

struct Segment {
    Point2 a, b;
    BoundingBox box;
};

std::vector<Segment> segments_of(const Precinct& p) {
    std::vector<Segment> out;
    for (const auto& ring : p.rings) {
        for (std::size_t i = 0; i + 1 < ring.size(); ++i) {
            Segment s{ring[i], ring[i + 1], {}};
            s.box.extend(s.a);
            s.box.extend(s.b);
            out.push_back(s);
        }
    }
    return out;
}

bool boundaries_touch(const std::vector<Segment>& p, const std::vector<Segment>& q, double tol) {
    for (const auto& s : p) {
        for (const auto& t : q) {
            if (!s.box.overlaps(t.box, tol)) continue;
            if (segment_distance(s.a, s.b, t.a, t.b) <= tol) return true;
        }
    }
    return false;
}

}  // namespace

double segment_distance(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    if (segments_intersect(a, b, c, d)) return 0.0;
    return std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d),
                     point_segment_distance(c, a, b), point_segment_distance(d, a, b)});
}

bool AdjacencyGraph::adjacent(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges.begin(), edges.end(), std::pair{i, j});
}

AdjacencyGraph queen_adjacency(const PrecinctMap& m, double tol) {
    if (!(tol >= 0.0)) throw std::invalid_argument("adjacency tolerance must be non-negative");
    AdjacencyGraph g;
    const std::size_t n = m.size();
    std::vector<std::vector<Segment>> segs(n);
    std::vector<BoundingBox> boxes(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& p = m.precincts[i];
        g.ids.push_back(p.id);
        segs[i] = segments_of(p);
        boxes[i] = p.bounds();
        double area = 0.0;
        for (const auto& ring : p.rings) area += signed_area(ring);
        if (area == 0.0) warn(fmt::format("precinct '{}' is degenerate (zero area)", p.id));
    }
    // Sweep over precincts sorted by left edge; a pair can only touch if
    // their padded x-ranges overlap.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return boxes[a].min_x < boxes[b].min_x; });
    for (std::size_t oi = 0; oi < n; ++oi) {
        const std::size_t i = order[oi];
        for (std::size_t oj = oi + 1; oj < n; ++oj) {
            const std::size_t j = order[oj];
            if (boxes[j].min_x > boxes[i].max_x + tol) break;
            if (!boxes[i].overlaps(boxes[j], tol)) continue;
            if (boundaries_touch(segs[i], segs[j], tol)) g.edges.emplace_back(std::min(i, j), std::max(i, j));
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

void write_adjacency(std::ostream& out, const AdjacencyGraph& g) {
    for (const auto& [i, j] : g.edges) out << g.ids[i] << '\t' << g.ids[j] << '\n';
}

double margin_level(double margin, double step) {
    if (!(step > 0.0) || step > 1.0) throw std::invalid_argument("margin step must be in (0, 1]");
    // Threshold comparisons absorb rounding in 1 - k * step so that a margin
    // sitting exactly on a threshold enters at that threshold.
    constexpr double kSlack = 1e-12;
    const long last = static_cast<long>(std::ceil(1.0 / step - kSlack));
    for (long k = 1; k < last; ++k) {
        if (margin >= 1.0 - double(k) * step - kSlack) return double(k) * step;
    }
    return double(last) * step;
}

FilteredComplex build_adjacency_complex(const PrecinctMap& m, const AdjacencyGraph& g,
                                        Candidate candidate, double step) {
    if (g.ids.size() != m.size()) throw std::invalid_argument("adjacency graph does not match map");
    const auto winners = winning_precincts(m, candidate);
    std::vector<std::size_t> local(m.size(), kNoLocal);
    std::vector<double> values;
    std::vector<VertexId> labels;
    for (std::size_t i : winners) {
        local[i] = values.size();
        values.push_back(margin_level(vote_margin(m.precincts[i]), step));
        labels.push_back(static_cast<VertexId>(i));
    }
    std::vector<WeightedEdge> edges;
    for (const auto& [i, j] : g.edges) {
        if (local[i] == kNoLocal || local[j] == kNoLocal) continue;
        const auto u = static_cast<VertexId>(local[i]);
        const auto v = static_cast<VertexId>(local[j]);
        edges.push_back({u, v, std::max(values[u], values[v])});
    }
    return incremental_flag_complex(values, edges, 2, labels);
}

}  // namespace geoph
