#include "geoph/alpha.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include <fmt/format.h>

#include "geoph/diagnostics.hpp"
#include "geoph/predicates.hpp"

namespace geoph {
namespace {

constexpr VertexId kGhost = std::numeric_limits<VertexId>::max();

// A real triangle (counter-clockwise) or a ghost triangle (u, v, kGhost) that
// stands for the region beyond hull edge u->v. The hull interior lies to the
// right of u->v.
struct Tri {
    VertexId a, b, c;
    bool ghost() const { return c == kGhost; }
};

std::array<VertexId, 2> sorted_edge(VertexId u, VertexId v) {
    return u < v ? std::array<VertexId, 2>{u, v} : std::array<VertexId, 2>{v, u};
}

class BowyerWatson {
public:
    BowyerWatson(const std::vector<Point2>& pts, double tol) : pts_(pts), tol_(tol) {}

    void start(VertexId a, VertexId b, VertexId c) {
        tris_ = {{a, b, c}, {b, a, kGhost}, {c, b, kGhost}, {a, c, kGhost}};
    }

    void insert(VertexId p) {
        std::vector<Tri> keep;
        std::vector<Tri> cavity;
        keep.reserve(tris_.size() + 4);
        for (const auto& t : tris_) (in_conflict(t, p) ? cavity : keep).push_back(t);
        if (cavity.empty()) {
            throw NumericalError(fmt::format("point {} lies in no conflict region", p));
        }
        std::set<std::pair<VertexId, VertexId>> directed;
        for (const auto& t : cavity) {
            directed.emplace(t.a, t.b);
            directed.emplace(t.b, t.c);
            directed.emplace(t.c, t.a);
        }
        for (const auto& [u, v] : directed) {
            if (directed.count({v, u})) continue;
            if (u == kGhost) {
                keep.push_back({v, p, kGhost});
            } else if (v == kGhost) {
                keep.push_back({p, u, kGhost});
            } else {
                if (orient2d(pts_[u], pts_[v], pts_[p]) <= 0) {
                    throw NumericalError(
                        fmt::format("cavity of point {} is not star-shaped", p));
                }
                keep.push_back({u, v, p});
            }
        }
        tris_.swap(keep);
    }

    std::vector<std::array<VertexId, 3>> real_triangles() const {
        std::vector<std::array<VertexId, 3>> out;
        for (const auto& t : tris_) {
            if (!t.ghost()) out.push_back({t.a, t.b, t.c});
        }
        return out;
    }

private:
    bool in_conflict(const Tri& t, VertexId p) const {
        const Point2& q = pts_[p];
        if (!t.ghost()) return incircle(pts_[t.a], pts_[t.b], pts_[t.c], q, tol_) > 0;
        const int side = orient2d(pts_[t.a], pts_[t.b], q);
        if (side > 0) return true;
        // On the hull line: only the open segment belongs to this ghost.
        return side == 0 && diametral_side(pts_[t.a], pts_[t.b], q) < 0;
    }

    const std::vector<Point2>& pts_;
    double tol_;
    std::vector<Tri> tris_;
};

// Rotates a triangle so it starts at its smallest vertex, keeping orientation.
std::array<VertexId, 3> canonical_rotation(std::array<VertexId, 3> t) {
    auto it = std::min_element(t.begin(), t.end());
    std::rotate(t.begin(), it, t.end());
    return t;
}

struct EdgeUse {
    std::size_t tri;
    VertexId opposite;
};

std::map<std::array<VertexId, 2>, std::vector<EdgeUse>> edge_uses(
    const std::vector<std::array<VertexId, 3>>& tris) {
    std::map<std::array<VertexId, 2>, std::vector<EdgeUse>> uses;
    for (std::size_t i = 0; i < tris.size(); ++i) {
        const auto& t = tris[i];
        for (int k = 0; k < 3; ++k) {
            uses[sorted_edge(t[k], t[(k + 1) % 3])].push_back({i, t[(k + 2) % 3]});
        }
    }
    return uses;
}

// Flips cocircular quadrilateral diagonals until each one is the
// lexicographically smaller of its two choices. Each flip strictly lowers the
// sorted edge list, so this terminates.
void canonicalize_cocircular(std::vector<std::array<VertexId, 3>>& tris,
                             const std::vector<Point2>& pts) {
    bool changed = true;
    while (changed) {
        changed = false;
        auto uses = edge_uses(tris);
        for (const auto& [edge, list] : uses) {
            if (list.size() != 2) continue;
            const VertexId c = list[0].opposite;
            const VertexId d = list[1].opposite;
            if (sorted_edge(c, d) >= edge) continue;
            auto t1 = tris[list[0].tri];
            // Orient t1 as (u, v, c).
            while (t1[2] != c) std::rotate(t1.begin(), t1.begin() + 1, t1.end());
            const VertexId u = t1[0], v = t1[1];
            if (incircle(pts[u], pts[v], pts[c], pts[d], 0.0) != 0) continue;
            tris[list[0].tri] = {u, d, c};
            tris[list[1].tri] = {d, v, c};
            changed = true;
            break;
        }
    }
}

}  // namespace

Triangulation delaunay_triangulation(const PointCloud& pc, const DelaunayOptions& options) {
    Triangulation tri;
    tri.num_points = pc.size();
    const auto& pts = pc.points;
    for (const auto& p : pts) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw InputError("point cloud has a non-finite coordinate");
        }
    }

    std::map<std::pair<double, double>, VertexId> first_at;
    std::vector<VertexId> distinct;
    for (VertexId i = 0; i < pts.size(); ++i) {
        auto [it, inserted] = first_at.emplace(std::pair{pts[i].x, pts[i].y}, i);
        if (inserted) {
            distinct.push_back(i);
        } else {
            tri.duplicates.emplace_back(i, it->second);
        }
    }
    if (!tri.duplicates.empty()) {
        warn(fmt::format("{} duplicate point(s) excluded from the triangulation",
                         tri.duplicates.size()));
    }

    if (distinct.size() == 2) {
        tri.edges.push_back(sorted_edge(distinct[0], distinct[1]));
        tri.on_hull.push_back(true);
    }
    if (distinct.size() < 3) return tri;

    const VertexId a = distinct[0], b = distinct[1];
    auto third = std::find_if(distinct.begin() + 2, distinct.end(),
                              [&](VertexId c) { return orient2d(pts[a], pts[b], pts[c]) != 0; });
    if (third == distinct.end()) {
        throw NumericalError("degenerate triangulation: all points are collinear");
    }
    const VertexId c = *third;

    BowyerWatson bw(pts, options.incircle_tolerance);
    if (orient2d(pts[a], pts[b], pts[c]) > 0) {
        bw.start(a, b, c);
    } else {
        bw.start(a, c, b);
    }
    for (VertexId p : distinct) {
        if (p != a && p != b && p != c) bw.insert(p);
    }

    tri.triangles = bw.real_triangles();
    canonicalize_cocircular(tri.triangles, pts);
    for (auto& t : tri.triangles) t = canonical_rotation(t);
    std::sort(tri.triangles.begin(), tri.triangles.end());

    for (const auto& [edge, list] : edge_uses(tri.triangles)) {
        tri.edges.push_back(edge);
        tri.on_hull.push_back(list.size() == 1);
    }

    if (options.verify) {
        auto problems = verify_delaunay(tri, pc, options.incircle_tolerance);
        if (!problems.empty()) {
            throw NumericalError("Delaunay verification failed: " + problems.front());
        }
    }
    return tri;
}

std::vector<std::string> verify_delaunay(const Triangulation& tri, const PointCloud& pc,
                                         double incircle_tolerance) {
    std::vector<std::string> problems;
    const auto& pts = pc.points;
    for (const auto& t : tri.triangles) {
        if (orient2d(pts[t[0]], pts[t[1]], pts[t[2]]) <= 0) {
            problems.push_back(fmt::format("triangle ({},{},{}) is not counter-clockwise", t[0],
                                           t[1], t[2]));
            continue;
        }
        for (VertexId p = 0; p < pts.size(); ++p) {
            if (p == t[0] || p == t[1] || p == t[2]) continue;
            if (incircle(pts[t[0]], pts[t[1]], pts[t[2]], pts[p], incircle_tolerance) > 0) {
                problems.push_back(fmt::format("point {} inside circumcircle of ({},{},{})", p,
                                               t[0], t[1], t[2]));
            }
        }
    }
    if (!tri.triangles.empty()) {
        // A triangulation of n points with h of them on the hull boundary has 2n - 2 - h triangles.
        std::set<VertexId> hull_vertices;
        for (std::size_t i = 0; i < tri.edges.size(); ++i) {
            if (tri.on_hull[i]) hull_vertices.insert(tri.edges[i].begin(), tri.edges[i].end());
        }
        const std::size_t n = pts.size() - tri.duplicates.size();
        const std::size_t expected = 2 * n - 2 - hull_vertices.size();
        if (tri.triangles.size() != expected) {
            problems.push_back(fmt::format("{} triangles, expected {} for {} points with {} on the hull",
                                           tri.triangles.size(), expected, n,
                                           hull_vertices.size()));
        }
    }
    return problems;
}

FilteredComplex alpha_filtration(const Triangulation& tri, const PointCloud& pc) {
    const auto& pts = pc.points;
    std::vector<FiltrationEntry> entries;
    entries.reserve(pts.size() + tri.edges.size() + tri.triangles.size());
    for (VertexId v = 0; v < pts.size(); ++v) entries.push_back({Simplex{v}, 0.0});

    std::map<std::array<VertexId, 2>, double> face_value;
    std::map<std::array<VertexId, 2>, std::vector<VertexId>> opposite;
    for (const auto& t : tri.triangles) {
        const double r = circumradius(pts[t[0]], pts[t[1]], pts[t[2]]);
        entries.push_back({Simplex{t[0], t[1], t[2]}, r});
        for (int k = 0; k < 3; ++k) {
            auto e = sorted_edge(t[k], t[(k + 1) % 3]);
            auto [it, inserted] = face_value.emplace(e, r);
            if (!inserted) it->second = std::min(it->second, r);
            opposite[e].push_back(t[(k + 2) % 3]);
        }
    }
    for (const auto& e : tri.edges) {
        bool gabriel = true;
        if (auto it = opposite.find(e); it != opposite.end()) {
            for (VertexId w : it->second) {
                if (diametral_side(pts[e[0]], pts[e[1]], pts[w]) < 0) gabriel = false;
            }
        }
        const double value =
            gabriel ? distance(pts[e[0]], pts[e[1]]) / 2.0 : face_value.at(e);
        entries.push_back({Simplex{e[0], e[1]}, value});
    }
    for (const auto& [dup, rep] : tri.duplicates) entries.push_back({Simplex{dup, rep}, 0.0});
    return close_under_faces(std::move(entries));
}

}  // namespace geoph
