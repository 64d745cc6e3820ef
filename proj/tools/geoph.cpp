// geoph: filtered complexes and persistent homology for precinct maps.
//
//   geoph build --method <m> --candidate <blue|red> --input <file> --out <dir> [options]
//   geoph bench --input-dir <dir> --out <file>
//   geoph synth --fixture <grid|annulus|blobs|dissent> --out <file>
//
// Exit codes: 0 success, 2 input error, 3 numerical failure.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "geoph/diagnostics.hpp"
#include "geoph/geojson.hpp"
#include "geoph/pipeline.hpp"
#include "geoph/synth.hpp"

namespace fs = std::filesystem;
using namespace geoph;

namespace {

constexpr int kInputErrorExit = 2;
constexpr int kNumericalErrorExit = 3;

std::size_t thread_budget() {
    std::size_t n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("GEOPH_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) n = std::min<std::size_t>(n, static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            warn(fmt::format("ignoring GEOPH_THREADS='{}'", env));
        }
    }
    return n;
}

struct BuildArgs {
    std::string method = "adjacency";
    std::string candidate = "red";
    std::string input;
    std::string out;
    std::optional<double> eps_max;
    double step = kDefaultMarginStep;
    std::size_t stride = 5;
    double velocity = 1.0;
    double dt = 1.0;
    std::size_t steps = 0;
    double tol = kDefaultAdjacencyTolerance;
    std::size_t vr_limit = 150;
    bool no_alpha_switch = false;
};

int run_build(const BuildArgs& a) {
    RunConfig cfg;
    cfg.method = parse_method(a.method);
    cfg.candidate = parse_candidate(a.candidate);
    cfg.eps_max = a.eps_max;
    cfg.step = a.step;
    cfg.tol = a.tol;
    cfg.levelset.stride = a.stride;
    cfg.levelset.velocity = a.velocity;
    cfg.levelset.dt = a.dt;
    cfg.levelset.n_steps = a.steps;
    cfg.vr_precinct_warning_threshold = a.vr_limit;
    cfg.alpha_switch = !a.no_alpha_switch;

    const PrecinctMap m = load_precincts(a.input);
    const PipelineResult r = run_pipeline(cfg, m);
    write_outputs(r, m, cfg, a.out);

    std::size_t h1 = r.barcode.in_dim(1).size();
    std::size_t long_h1 = 0;
    for (const auto& p : r.barcode.in_dim(1)) long_h1 += p.long_persistence ? 1 : 0;
    std::cout << fmt::format("{} {} {}: {} simplices, {} H0 bars, {} H1 bars ({} long)\n", m.name,
                             to_string(r.method), to_string(cfg.candidate), r.complex.size(),
                             r.barcode.in_dim(0).size(), h1, long_h1);
    return 0;
}

int run_bench(const std::string& input_dir, const std::string& out) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(input_dir)) {
        const auto ext = entry.path().extension();
        if (entry.is_regular_file() && (ext == ".geojson" || ext == ".json")) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw InputError(fmt::format("no .geojson files in '{}'", input_dir));

    std::vector<PrecinctMap> maps;
    for (const auto& f : files) maps.push_back(load_precincts(f));

    struct Job {
        std::size_t map;
        RunConfig cfg;
    };
    std::vector<Job> jobs;
    for (std::size_t i = 0; i < maps.size(); ++i) {
        for (Candidate c : {Candidate::blue, Candidate::red}) {
            for (Method method : {Method::vr, Method::adjacency, Method::levelset}) {
                RunConfig cfg;
                cfg.method = method;
                cfg.candidate = c;
                jobs.push_back({i, cfg});
            }
        }
    }

    std::vector<BenchmarkRow> rows(jobs.size());
    std::vector<std::string> errors;
    std::mutex error_mutex;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t j = next++; j < jobs.size(); j = next++) {
            try {
                rows[j] = run_pipeline(jobs[j].cfg, maps[jobs[j].map]).row;
            } catch (const std::exception& e) {
                std::lock_guard lock(error_mutex);
                errors.push_back(fmt::format("{} {} {}: {}", maps[jobs[j].map].name,
                                             to_string(jobs[j].cfg.method),
                                             to_string(jobs[j].cfg.candidate), e.what()));
                rows[j].input.clear();
            }
        }
    };
    std::vector<std::thread> pool;
    const std::size_t n_threads = std::min(thread_budget(), jobs.size());
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::sort(errors.begin(), errors.end());
    for (const auto& e : errors) warn(e);
    std::erase_if(rows, [](const BenchmarkRow& r) { return r.input.empty(); });
    if (rows.empty()) throw NumericalError("every benchmark job failed");
    benchmark_report(rows, out);
    std::cout << fmt::format("{} rows written to {}\n", rows.size(), out);
    return 0;
}

int run_synth(const std::string& fixture, const std::string& out, std::size_t n, double radius,
              double gap) {
    PrecinctMap m;
    if (fixture == "grid") {
        m = synth_grid(n);
    } else if (fixture == "annulus") {
        m = synth_annulus(radius);
    } else if (fixture == "blobs") {
        m = synth_blobs(gap);
    } else if (fixture == "dissent") {
        m = synth_dissent();
    } else {
        throw InputError(fmt::format("unknown fixture '{}'", fixture));
    }
    std::ofstream file(out, std::ios::binary);
    if (!file) throw InputError(fmt::format("cannot write '{}'", out));
    write_precincts(file, m);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Filtered simplicial complexes and persistent homology for precinct maps"};
    app.require_subcommand(1);

    BuildArgs build;
    auto* build_cmd = app.add_subcommand("build", "Build one complex and its barcode");
    build_cmd->add_option("--method", build.method, "vr | alpha | adjacency | levelset")->required();
    build_cmd->add_option("--candidate", build.candidate, "blue | red")->required();
    build_cmd->add_option("--input", build.input, "GeoJSON FeatureCollection")->required();
    build_cmd->add_option("--out", build.out, "Output directory")->required();
    build_cmd->add_option("--eps-max", build.eps_max, "VR cutoff (default: point-cloud diameter)");
    build_cmd->add_option("--step", build.step, "Vote-margin step for adjacency complexes");
    build_cmd->add_option("--stride", build.stride, "Lattice stride in pixels for level-set complexes");
    build_cmd->add_option("--velocity", build.velocity, "Front speed in cells per unit time");
    build_cmd->add_option("--dt", build.dt, "Time per level-set step");
    build_cmd->add_option("--steps", build.steps, "Number of level-set steps (default: raster side)");
    build_cmd->add_option("--tol", build.tol, "Queen-adjacency boundary tolerance in map units");
    build_cmd->add_option("--vr-limit", build.vr_limit, "Winning-precinct count above which VR warns");
    build_cmd->add_flag("--no-alpha-switch", build.no_alpha_switch,
                        "Keep VR above the limit instead of switching to alpha");

    std::string bench_dir, bench_out;
    auto* bench_cmd = app.add_subcommand("bench", "Size and timing tables over a directory of maps");
    bench_cmd->add_option("--input-dir", bench_dir, "Directory of .geojson / .json maps")->required();
    bench_cmd->add_option("--out", bench_out, "CSV path; the text tables go next to it")->required();

    std::string fixture, synth_out;
    std::size_t grid_n = 5;
    double radius = 20.0, gap = 20.0;
    auto* synth_cmd = app.add_subcommand("synth", "Write a synthetic precinct map");
    synth_cmd->add_option("--fixture", fixture, "grid | annulus | blobs | dissent")->required();
    synth_cmd->add_option("--out", synth_out, "GeoJSON path to write")->required();
    synth_cmd->add_option("--n", grid_n, "Grid side for the grid fixture");
    synth_cmd->add_option("--radius", radius, "Hole radius for the annulus fixture");
    synth_cmd->add_option("--gap", gap, "Separation for the blobs fixture");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kInputErrorExit;
    }

    try {
        if (*build_cmd) return run_build(build);
        if (*bench_cmd) return run_bench(bench_dir, bench_out);
        if (*synth_cmd) return run_synth(fixture, synth_out, grid_n, radius, gap);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputErrorExit;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputErrorExit;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputErrorExit;
    } catch (const NumericalError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNumericalErrorExit;
    }
    return 0;
}
