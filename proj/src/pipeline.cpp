#include "geoph/pipeline.hpp"

#include <chrono>
#include <fstream>
#include <stdexcept>

#include <fmt/format.h>

#include "geoph/alpha.hpp"
#include "geoph/diagnostics.hpp"
#include "geoph/render.hpp"
#include "geoph/vr.hpp"

namespace geoph {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <class F>
auto with_context(Method method, F&& f) {
    try {
        return f();
    } catch (const NumericalError& e) {
        throw NumericalError(fmt::format("{} builder: {}", to_string(method), e.what()));
    } catch (const InputError& e) {
        throw InputError(fmt::format("{} builder: {}", to_string(method), e.what()));
    } catch (const std::invalid_argument& e) {
        throw InputError(fmt::format("{} builder: {}", to_string(method), e.what()));
    }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError(fmt::format("cannot write '{}'", path.string()));
    out << text;
}

}  // namespace

void RunConfig::validate() const {
    if (eps_max && !(*eps_max > 0.0)) throw InputError("--eps-max must be positive");
    if (!(step > 0.0 && step <= 1.0)) throw InputError("--step must be in (0, 1]");
    if (!(tol >= 0.0)) throw InputError("--tol must be non-negative");
    if (levelset.stride == 0) throw InputError("--stride must be positive");
    if (!(levelset.velocity > 0.0)) throw InputError("--velocity must be positive");
    if (!(levelset.dt > 0.0)) throw InputError("--dt must be positive");
    if (max_side == 0 || max_side > kMaxRasterSide) {
        throw InputError(fmt::format("raster side must be in [1, {}]", kMaxRasterSide));
    }
    if (!(long_persistence_threshold > 0.0 && long_persistence_threshold <= 1.0)) {
        throw InputError("long-persistence threshold must be in (0, 1]");
    }
}

PipelineResult run_pipeline(const RunConfig& cfg, const PrecinctMap& m) {
    cfg.validate();
    PipelineResult result;
    result.method = cfg.method;
    const auto winners = winning_precincts(m, cfg.candidate);

    if (cfg.method == Method::vr && winners.size() > cfg.vr_precinct_warning_threshold) {
        if (cfg.alpha_switch) {
            warn(fmt::format("{} winning precincts exceed the VR limit of {}; using the alpha complex",
                             winners.size(), cfg.vr_precinct_warning_threshold));
            result.method = Method::alpha;
        } else {
            warn(fmt::format("VR complex on {} precincts (limit {}) may be very large", winners.size(),
                             cfg.vr_precinct_warning_threshold));
        }
    }

    const auto build_start = Clock::now();
    switch (result.method) {
        case Method::vr:
        case Method::alpha: {
            const PointCloud pc = centroids(m, winners);
            result.complex = with_context(result.method, [&] {
                if (result.method == Method::vr) return build_vr_complex(pc, cfg.eps_max);
                return alpha_filtration(delaunay_triangulation(pc), pc);
            });
            for (const auto& p : pc.points) result.vertex_positions.emplace_back(p);
            break;
        }
        case Method::adjacency: {
            result.graph = with_context(result.method, [&] { return queen_adjacency(m, cfg.tol); });
            result.complex = with_context(result.method, [&] {
                return build_adjacency_complex(m, *result.graph, cfg.candidate, cfg.step);
            });
            result.vertex_positions.resize(m.size());
            for (std::size_t i : winners) result.vertex_positions[i] = centroid(m.precincts[i]);
            break;
        }
        case Method::levelset: {
            result.raster = with_context(result.method, [&] { return rasterize_mask(m, cfg.candidate, cfg.max_side); });
            result.field = signed_distance_field(result.raster->mask, double(cfg.max_side));
            auto ls = with_context(result.method, [&] { return build_levelset_complex(*result.field, cfg.levelset); });
            result.complex = std::move(ls.complex);
            result.schedule = std::move(ls.schedule);
            for (const auto& v : result.schedule->vertices) {
                result.vertex_positions.emplace_back(
                    result.raster->transform.cell_center(v.row, v.col));
            }
            break;
        }
    }
    result.row.build_seconds = seconds_since(build_start);

    const auto ph_start = Clock::now();
    result.barcode = classify_long_persistence(compute_persistence(result.complex),
                                               cfg.long_persistence_threshold);
    result.row.ph_seconds = seconds_since(ph_start);

    result.row.input = m.name;
    result.row.candidate = cfg.candidate;
    result.row.method = result.method;
    result.row.simplex_count = result.complex.size();
    return result;
}

void write_outputs(const PipelineResult& result, const PrecinctMap& m, const RunConfig& cfg,
                   const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw InputError(fmt::format("cannot create '{}': {}", out_dir.string(), ec.message()));

    {
        std::ofstream out(out_dir / "complex.tsv", std::ios::binary);
        write_complex(out, result.complex);
    }
    write_text(out_dir / "barcode.json", barcode_json(result.barcode));
    render_barcode_svg(result.barcode, cfg.candidate, out_dir / "barcode.svg");
    render_feature_map(m, result.barcode, result.vertex_positions, cfg.candidate, out_dir / "feature_map.svg");
    write_text(out_dir / "timing.csv", benchmark_csv({result.row}));

    if (result.graph) {
        std::ofstream out(out_dir / "adjacency.tsv", std::ios::binary);
        write_adjacency(out, *result.graph);
    }
    if (result.raster) {
        std::ofstream out(out_dir / "mask.pgm", std::ios::binary);
        write_pgm(out, result.raster->mask);
    }
    if (result.field) {
        std::ofstream out(out_dir / "field.pgm", std::ios::binary);
        write_pgm(out, *result.field);
    }
    if (result.schedule) {
        std::ofstream out(out_dir / "schedule.tsv", std::ios::binary);
        write_schedule(out, *result.schedule);
    }
}

}  // namespace geoph
