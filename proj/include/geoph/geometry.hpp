#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace geoph {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

inline double distance(const Point2& a, const Point2& b) { return std::hypot(a.x - b.x, a.y - b.y); }

struct BoundingBox {
    double min_x = std::numeric_limits<double>::infinity();
    double min_y = std::numeric_limits<double>::infinity();
    double max_x = -std::numeric_limits<double>::infinity();
    double max_y = -std::numeric_limits<double>::infinity();

    bool empty() const { return min_x > max_x; }
    double width() const { return empty() ? 0.0 : max_x - min_x; }
    double height() const { return empty() ? 0.0 : max_y - min_y; }

    void extend(const Point2& p) {
        min_x = std::min(min_x, p.x);
        min_y = std::min(min_y, p.y);
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }
    void extend(const BoundingBox& b) {
        if (b.empty()) return;
        extend(Point2{b.min_x, b.min_y});
        extend(Point2{b.max_x, b.max_y});
    }
    bool overlaps(const BoundingBox& o, double pad) const {
        return !(o.min_x > max_x + pad || o.max_x < min_x - pad || o.min_y > max_y + pad ||
                 o.max_y < min_y - pad);
    }
};

/// Points in map units, typically precinct centroids. `labels[i]` names the
/// precinct that produced point i when present.
struct PointCloud {
    std::vector<Point2> points;
    std::vector<std::string> labels;

    std::size_t size() const { return points.size(); }
};

double diameter(const PointCloud& pc);

/// Index pairs (i < j) of exactly coincident points.
std::vector<std::pair<std::size_t, std::size_t>> coincident_pairs(const PointCloud& pc);

}  // namespace geoph
