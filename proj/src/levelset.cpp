#include "geoph/levelset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

#include "geoph/diagnostics.hpp"
#include "geoph/flag_complex.hpp"

namespace geoph {
namespace {

constexpr double kFar = std::numeric_limits<double>::infinity();

// Felzenszwalb-Huttenlocher lower envelope of parabolas: out[q] = min_p (q - p)^2 + f[p].
void distance_1d(const std::vector<double>& f, std::vector<double>& out, std::vector<std::size_t>& v,
                 std::vector<double>& z) {
    const std::size_t n = f.size();
    out.assign(n, kFar);
    v.assign(n, 0);
    z.assign(n + 1, 0.0);
    std::size_t k = 0;
    bool any = false;
    for (std::size_t q = 0; q < n; ++q) {
        if (f[q] == kFar) continue;
        if (!any) {
            v[0] = q;
            z[0] = -kFar;
            z[1] = kFar;
            any = true;
            continue;
        }
        double s = 0.0;
        while (true) {
            const double p = double(v[k]);
            s = ((f[q] + double(q) * double(q)) - (f[v[k]] + p * p)) / (2.0 * double(q) - 2.0 * p);
            if (s <= z[k] && k > 0) {
                --k;
                continue;
            }
            break;
        }
        if (s <= z[k]) {
            // k == 0 and the new parabola dominates everywhere.
            v[0] = q;
            z[0] = -kFar;
            z[1] = kFar;
            continue;
        }
        ++k;
        v[k] = q;
        z[k] = s;
        z[k + 1] = kFar;
    }
    if (!any) return;
    k = 0;
    for (std::size_t q = 0; q < n; ++q) {
        while (z[k + 1] < double(q)) ++k;
        const double d = double(q) - double(v[k]);
        out[q] = d * d + f[v[k]];
    }
}

// Squared Euclidean distance from every cell centre to the nearest cell with
// cells[i] == target.
std::vector<double> squared_distance_to(const BitMask& mask, std::uint8_t target) {
    const std::size_t w = mask.width, h = mask.height;
    std::vector<double> grid(w * h);
    for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = mask.cells[i] == target ? 0.0 : kFar;

    std::vector<double> f, out, z;
    std::vector<std::size_t> v;
    for (std::size_t c = 0; c < w; ++c) {
        f.resize(h);
        for (std::size_t r = 0; r < h; ++r) f[r] = grid[r * w + c];
        distance_1d(f, out, v, z);
        for (std::size_t r = 0; r < h; ++r) grid[r * w + c] = out[r];
    }
    for (std::size_t r = 0; r < h; ++r) {
        f.assign(grid.begin() + std::ptrdiff_t(r * w), grid.begin() + std::ptrdiff_t((r + 1) * w));
        distance_1d(f, out, v, z);
        std::copy(out.begin(), out.end(), grid.begin() + std::ptrdiff_t(r * w));
    }
    return grid;
}

void fill_precinct(const Precinct& p, const GridTransform& tf, BitMask& mask) {
    const BoundingBox box = p.bounds();
    if (box.empty()) return;
    const double cell = tf.cell_size;
    // Rows whose centre line can cross the precinct.
    const double top = (tf.origin_y - box.max_y) / cell - 0.5;
    const double bottom = (tf.origin_y - box.min_y) / cell - 0.5;
    const auto first_row = static_cast<std::size_t>(std::max(0.0, std::floor(top)));
    const auto last_row = std::min<double>(double(mask.height) - 1.0, std::ceil(bottom));
    std::vector<double> xs;
    for (std::size_t r = first_row; double(r) <= last_row; ++r) {
        const double y = tf.origin_y - (double(r) + 0.5) * cell;
        xs.clear();
        for (const auto& ring : p.rings) {
            for (std::size_t i = 0; i + 1 < ring.size(); ++i) {
                const Point2& a = ring[i];
                const Point2& b = ring[i + 1];
                if ((a.y > y) != (b.y > y)) xs.push_back(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
            }
        }
        std::sort(xs.begin(), xs.end());
        for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
            // Centres c with xs[k] <= origin + (c + 0.5) * cell < xs[k + 1].
            const double lo = std::ceil((xs[k] - tf.origin_x) / cell - 0.5);
            const double hi = std::ceil((xs[k + 1] - tf.origin_x) / cell - 0.5);
            for (double c = std::max(lo, 0.0); c < hi && c < double(mask.width); c += 1.0) {
                mask.set(r, static_cast<std::size_t>(c), true);
            }
        }
    }
}

}  // namespace

std::size_t BitMask::count() const {
    return static_cast<std::size_t>(std::count(cells.begin(), cells.end(), std::uint8_t{1}));
}

Raster rasterize_mask(const PrecinctMap& m, Candidate candidate, std::size_t max_side) {
    if (max_side == 0) throw std::invalid_argument("raster side must be positive");
    Raster out;
    const BoundingBox box = m.bounds();
    if (box.empty()) {
        out.mask = BitMask(max_side, max_side);
        out.transform = {0.0, 1.0, 1.0 / double(max_side)};
        return out;
    }
    const double extent = std::max(box.width(), box.height());
    const double cell = extent > 0.0 ? extent / double(max_side) : 1.0;
    auto cells_for = [&](double len) {
        return std::clamp<std::size_t>(static_cast<std::size_t>(std::ceil(len / cell - 1e-9)), 1,
                                       max_side);
    };
    out.mask = BitMask(cells_for(box.width()), cells_for(box.height()));
    out.transform = {box.min_x, box.max_y, cell};
    for (std::size_t i : winning_precincts(m, candidate)) fill_precinct(m.precincts[i], out.transform, out.mask);
    return out;
}

ScalarField signed_distance_field(const BitMask& mask, double clip) {
    if (!(clip > 0.0)) throw std::invalid_argument("clip must be positive");
    ScalarField phi;
    phi.width = mask.width;
    phi.height = mask.height;
    const std::size_t inside = mask.count();
    if (inside == 0 || inside == mask.cells.size()) {
        warn(inside == 0 ? "mask is empty; signed distance is constant -clip"
                         : "mask is full; signed distance is constant +clip");
        phi.values.assign(mask.cells.size(), inside == 0 ? -clip : clip);
        return phi;
    }
    const auto to_outside = squared_distance_to(mask, 0);
    const auto to_inside = squared_distance_to(mask, 1);
    phi.values.resize(mask.cells.size());
    for (std::size_t i = 0; i < phi.values.size(); ++i) {
        const double d = mask.cells[i] ? std::sqrt(to_outside[i]) - 0.5 : 0.5 - std::sqrt(to_inside[i]);
        phi.values[i] = std::clamp(d, -clip, clip);
    }
    return phi;
}

namespace {

// No non-negative value means there is no region for the front to grow from.
bool empty_region(const ScalarField& phi) {
    return std::none_of(phi.values.begin(), phi.values.end(), [](double x) { return x >= 0.0; });
}

}  // namespace

BitMask superlevel_mask_at(const ScalarField& phi, double velocity, double time) {
    if (!(velocity > 0.0)) throw std::invalid_argument("velocity must be positive");
    if (!(time >= 0.0)) throw std::invalid_argument("time must be non-negative");
    BitMask mask(phi.width, phi.height);
    if (empty_region(phi)) return mask;
    const double lift = velocity * time;
    for (std::size_t i = 0; i < phi.values.size(); ++i) mask.cells[i] = phi.values[i] + lift >= 0.0;
    return mask;
}

GridVertexSchedule schedule_grid_vertices(const ScalarField& phi, const LevelSetOptions& options) {
    if (options.stride == 0) throw std::invalid_argument("stride must be positive");
    if (options.stride >= phi.width || options.stride >= phi.height) {
        throw std::invalid_argument(fmt::format(
            "stride {} leaves no vertex lattice on a {}x{} grid", options.stride, phi.width, phi.height));
    }
    if (!(options.velocity > 0.0)) throw std::invalid_argument("velocity must be positive");
    if (!(options.dt > 0.0)) throw std::invalid_argument("dt must be positive");
    const std::size_t n_steps = options.n_steps ? options.n_steps : std::max(phi.width, phi.height);

    GridVertexSchedule s;
    s.stride = options.stride;
    s.rows = (phi.height - 1) / s.stride + 1;
    s.cols = (phi.width - 1) / s.stride + 1;
    for (std::size_t lr = 0; lr < s.rows; ++lr) {
        for (std::size_t lc = 0; lc < s.cols; ++lc) s.vertices.push_back({lr * s.stride, lc * s.stride, {}});
    }
    // Each step admits the lattice points of the current superlevel set that
    // are not yet present.
    std::size_t pending = empty_region(phi) ? 0 : s.vertices.size();
    for (std::size_t step = 0; step <= n_steps && pending > 0; ++step) {
        const double lift = options.velocity * double(step) * options.dt;
        for (auto& v : s.vertices) {
            if (v.entry) continue;
            if (phi.at(v.row, v.col) + lift >= 0.0) {
                v.entry = step;
                --pending;
            }
        }
    }
    return s;
}

std::vector<VertexId> lattice_neighbors(const GridVertexSchedule& s, VertexId v) {
    const auto lr = static_cast<long>(v / s.cols);
    const auto lc = static_cast<long>(v % s.cols);
    static constexpr long kOffsets[6][2] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}, {-1, -1}, {1, 1}};
    std::vector<VertexId> out;
    for (const auto& d : kOffsets) {
        const long r = lr + d[0], c = lc + d[1];
        if (r < 0 || c < 0 || r >= long(s.rows) || c >= long(s.cols)) continue;
        out.push_back(s.id(std::size_t(r), std::size_t(c)));
    }
    return out;
}

LevelSetComplex build_levelset_complex(const ScalarField& phi, const LevelSetOptions& options) {
    LevelSetComplex out;
    out.schedule = schedule_grid_vertices(phi, options);
    const auto& verts = out.schedule.vertices;

    std::vector<std::size_t> local(verts.size(), verts.size());
    std::vector<double> values;
    std::vector<VertexId> labels;
    std::size_t missing = 0;
    for (VertexId id = 0; id < verts.size(); ++id) {
        if (!verts[id].entry) {
            ++missing;
            continue;
        }
        local[id] = values.size();
        values.push_back(double(*verts[id].entry));
        labels.push_back(id);
    }
    if (missing > 0 && !empty_region(phi)) {
        warn(fmt::format("{} lattice point(s) never enter within the step budget; "
                         "increase n_steps to close every hole",
                         missing));
    }
    std::vector<WeightedEdge> edges;
    for (VertexId id = 0; id < verts.size(); ++id) {
        if (local[id] == verts.size()) continue;
        for (VertexId nb : lattice_neighbors(out.schedule, id)) {
            if (nb < id || local[nb] == verts.size()) continue;
            const auto u = static_cast<VertexId>(local[id]);
            const auto w = static_cast<VertexId>(local[nb]);
            edges.push_back({u, w, std::max(values[u], values[w])});
        }
    }
    out.complex = incremental_flag_complex(values, edges, 2, labels);
    return out;
}

void write_pgm(std::ostream& out, const BitMask& mask) {
    out << "P5\n" << mask.width << ' ' << mask.height << "\n255\n";
    for (auto c : mask.cells) out.put(static_cast<char>(c ? 255 : 0));
}

void write_pgm(std::ostream& out, const ScalarField& field) {
    out << "P5\n" << field.width << ' ' << field.height << "\n255\n";
    if (field.values.empty()) return;
    const auto [lo, hi] = std::minmax_element(field.values.begin(), field.values.end());
    const double span = *hi - *lo;
    for (double v : field.values) {
        const double t = span > 0.0 ? (v - *lo) / span : 0.5;
        out.put(static_cast<char>(static_cast<unsigned char>(std::lround(t * 255.0))));
    }
}

void write_schedule(std::ostream& out, const GridVertexSchedule& s) {
    for (const auto& v : s.vertices) {
        out << v.row << '\t' << v.col << '\t';
        if (v.entry) {
            out << *v.entry;
        } else {
            out << "inf";
        }
        out << '\n';
    }
}

}  // namespace geoph
