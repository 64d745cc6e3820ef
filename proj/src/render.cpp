#include "geoph/render.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

#include "geoph/diagnostics.hpp"

namespace geoph {
namespace {

constexpr double kWidth = 800.0;
constexpr double kLeft = 50.0;
constexpr double kRight = 30.0;
constexpr double kTop = 20.0;
constexpr double kBarHeight = 8.0;
constexpr double kBarGap = 4.0;
constexpr double kGroupGap = 24.0;
constexpr double kAxisHeight = 40.0;

struct Rgb {
    int r, g, b;
};

Rgb parse_hex(const std::string& hex) {
    return {std::stoi(hex.substr(1, 2), nullptr, 16), std::stoi(hex.substr(3, 2), nullptr, 16),
            std::stoi(hex.substr(5, 2), nullptr, 16)};
}

std::string to_hex(Rgb c) { return fmt::format("#{:02x}{:02x}{:02x}", c.r, c.g, c.b); }

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError(fmt::format("cannot write '{}'", path.string()));
    out << text;
}

std::string svg_open(double w, double h) {
    return fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" "
        "viewBox=\"0 0 {:.0f} {:.0f}\" font-family=\"sans-serif\" font-size=\"11\">\n",
        w, h, w, h);
}

}  // namespace

Palette palette_for(Candidate c) {
    if (c == Candidate::blue) return {"#08306b", "#6baed6"};
    return {"#67000d", "#fb6a4a"};
}

std::string margin_shade(const Precinct& p) {
    const auto w = winner(p);
    if (!w) return "#ffffff";
    const double t = std::clamp(vote_margin(p), 0.0, 1.0);
    const Rgb dark = parse_hex(palette_for(*w).dark);
    auto mix = [t](int channel) { return static_cast<int>(std::lround(255.0 + (channel - 255.0) * t)); };
    return to_hex({mix(dark.r), mix(dark.g), mix(dark.b)});
}

std::string barcode_svg(const Barcode& b, Candidate candidate) {
    const Palette pal = palette_for(candidate);
    const auto bars = b.visible();

    int top_dim = 1;
    double lo = 0.0, hi = b.max_filtration;
    for (const auto& p : bars) {
        top_dim = std::max(top_dim, p.dimension);
        lo = std::min(lo, p.birth);
        hi = std::max(hi, p.infinite() ? p.birth : p.death);
    }
    if (hi <= lo) hi = lo + 1.0;
    const double plot_w = kWidth - kLeft - kRight;
    // Finite data occupies the first 95% of the axis; the rest is the horizon.
    const double horizon = kLeft + plot_w;
    const double scale = 0.95 * plot_w / (hi - lo);
    auto x_of = [&](double t) { return kLeft + (t - lo) * scale; };

    double height = kTop;
    for (int d = 0; d <= top_dim; ++d) {
        const auto n = static_cast<double>(
            std::count_if(bars.begin(), bars.end(), [d](const auto& p) { return p.dimension == d; }));
        height += 16.0 + n * (kBarHeight + kBarGap) + kGroupGap;
    }
    height += kAxisHeight;

    std::string svg = svg_open(kWidth, height);
    double y = kTop;
    for (int d = 0; d <= top_dim; ++d) {
        svg += fmt::format("<text x=\"4\" y=\"{:.2f}\" font-weight=\"bold\">H{}</text>\n", y + 10.0, d);
        y += 16.0;
        for (const auto& p : bars) {
            if (p.dimension != d) continue;
            const std::string& fill = p.long_persistence ? pal.dark : pal.light;
            const double x0 = x_of(p.birth);
            if (p.infinite()) {
                const double tip = horizon - 6.0;
                svg += fmt::format(
                    "<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"{}\"/>\n", x0,
                    y, std::max(0.0, tip - x0), kBarHeight, fill);
                svg += fmt::format(
                    "<polygon points=\"{:.2f},{:.2f} {:.2f},{:.2f} {:.2f},{:.2f}\" fill=\"{}\"/>\n", tip,
                    y - 2.0, horizon, y + kBarHeight / 2.0, tip, y + kBarHeight + 2.0, fill);
            } else {
                svg += fmt::format(
                    "<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"{}\"/>\n", x0,
                    y, p.persistence() * scale, kBarHeight, fill);
            }
            y += kBarHeight + kBarGap;
        }
        y += kGroupGap;
    }

    const double axis_y = y;
    svg += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"black\"/>\n",
                       kLeft, axis_y, horizon, axis_y);
    for (int i = 0; i <= 4; ++i) {
        const double t = lo + (hi - lo) * i / 4.0;
        const double x = x_of(t);
        svg += fmt::format(
            "<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"black\"/>\n", x,
            axis_y, x, axis_y + 5.0);
        svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{:.4g}</text>\n", x,
                           axis_y + 18.0, t);
    }
    svg += "</svg>\n";
    return svg;
}

void render_barcode_svg(const Barcode& b, Candidate candidate, const std::filesystem::path& path) {
    write_file(path, barcode_svg(b, candidate));
}

std::vector<std::vector<VertexId>> cycle_walks(std::span<const Simplex> edges) {
    std::map<VertexId, std::vector<VertexId>> adj;
    for (const auto& e : edges) {
        if (e.dim() != 1) throw std::invalid_argument("cycle contains a non-edge simplex");
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    for (auto& [v, nbrs] : adj) {
        if (nbrs.size() % 2 != 0) throw std::invalid_argument("edge set is not an F2 cycle");
        // Pop from the back, so keep the smallest neighbour last.
        std::sort(nbrs.begin(), nbrs.end(), std::greater<>());
    }
    std::set<std::pair<VertexId, VertexId>> used;
    auto take = [&](VertexId v) -> std::optional<VertexId> {
        auto& nbrs = adj[v];
        while (!nbrs.empty()) {
            const VertexId w = nbrs.back();
            nbrs.pop_back();
            auto key = std::minmax(v, w);
            if (used.insert({key.first, key.second}).second) return w;
        }
        return std::nullopt;
    };

    std::vector<std::vector<VertexId>> walks;
    for (const auto& [start, unused] : adj) {
        (void)unused;
        if (adj[start].empty()) continue;
        // Hierholzer's algorithm.
        std::vector<VertexId> stack{start}, circuit;
        while (!stack.empty()) {
            if (auto next = take(stack.back())) {
                stack.push_back(*next);
            } else {
                circuit.push_back(stack.back());
                stack.pop_back();
            }
        }
        if (circuit.size() > 1) {
            std::reverse(circuit.begin(), circuit.end());
            walks.push_back(std::move(circuit));
        }
    }
    return walks;
}

std::string feature_map_svg(const PrecinctMap& m, const Barcode& b,
                            std::span<const std::optional<Point2>> positions, Candidate candidate) {
    BoundingBox box = m.bounds();
    for (const auto& p : positions) {
        if (p) box.extend(*p);
    }
    if (box.empty()) box.extend(Point2{0.0, 0.0});
    const double extent = std::max({box.width(), box.height(), 1e-12});
    const double margin = 10.0;
    const double scale = (kWidth - 2 * margin) / extent;
    const double height = box.height() * scale + 2 * margin;
    auto sx = [&](double x) { return margin + (x - box.min_x) * scale; };
    auto sy = [&](double y) { return margin + (box.max_y - y) * scale; };

    std::string svg = svg_open(kWidth, std::ceil(height));
    for (const auto& p : m.precincts) {
        std::string d;
        for (const auto& ring : p.rings) {
            for (std::size_t i = 0; i + 1 < ring.size(); ++i) {
                d += fmt::format("{}{:.2f},{:.2f} ", i == 0 ? "M" : "L", sx(ring[i].x), sy(ring[i].y));
            }
            d += "Z ";
        }
        if (!d.empty()) d.pop_back();
        svg += fmt::format(
            "<path d=\"{}\" fill=\"{}\" fill-rule=\"evenodd\" stroke=\"#999999\" stroke-width=\"0.5\"/>\n", d,
            margin_shade(p));
    }

    const Palette pal = palette_for(candidate);
    for (const auto& pair : b.in_dim(1)) {
        for (const auto& walk : cycle_walks(pair.generator)) {
            std::string pts;
            for (VertexId v : walk) {
                if (v >= positions.size() || !positions[v]) {
                    throw std::invalid_argument(fmt::format("generator vertex {} has no position", v));
                }
                pts += fmt::format("{:.2f},{:.2f} ", sx(positions[v]->x), sy(positions[v]->y));
            }
            pts.pop_back();
            svg += fmt::format(
                "<polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{}\" "
                "stroke-linejoin=\"round\"/>\n",
                pts, pair.long_persistence ? pal.dark : pal.light, pair.long_persistence ? "3" : "1.2");
        }
    }
    svg += "</svg>\n";
    return svg;
}

void render_feature_map(const PrecinctMap& m, const Barcode& b,
                        std::span<const std::optional<Point2>> positions, Candidate candidate,
                        const std::filesystem::path& path) {
    write_file(path, feature_map_svg(m, b, positions, candidate));
}

}  // namespace geoph
