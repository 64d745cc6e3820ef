#include "geoph/report.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <stdexcept>
#include <tuple>

#include <fmt/format.h>

#include "geoph/diagnostics.hpp"
#include "json.hpp"

namespace geoph {
namespace {

constexpr Method kMethods[] = {Method::vr, Method::alpha, Method::adjacency, Method::levelset};
constexpr Candidate kCandidates[] = {Candidate::blue, Candidate::red};

std::string_view method_title(Method m) {
    switch (m) {
        case Method::vr: return "VR";
        case Method::alpha: return "Alpha";
        case Method::adjacency: return "Adjacency";
        case Method::levelset: return "Level-set";
    }
    return "?";
}

void sort_rows(std::vector<BenchmarkRow>& rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const BenchmarkRow& a, const BenchmarkRow& b) {
        return std::tuple(a.input, a.candidate, a.method) < std::tuple(b.input, b.candidate, b.method);
    });
}

std::string seconds(double s) { return fmt::format("{:.3g} s", s); }

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& body) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : body) {
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
        std::string out;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) out += "  ";
            out += c == 0 ? fmt::format("{:<{}}", cells[c], width[c]) : fmt::format("{:>{}}", cells[c], width[c]);
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        return out + '\n';
    };
    std::string out = line(header);
    std::size_t total = 0;
    for (auto w : width) total += w;
    out += std::string(total + 2 * (width.size() - 1), '-') + '\n';
    for (const auto& row : body) out += line(row);
    return out;
}

}  // namespace

std::string_view to_string(Method m) {
    switch (m) {
        case Method::vr: return "vr";
        case Method::alpha: return "alpha";
        case Method::adjacency: return "adjacency";
        case Method::levelset: return "levelset";
    }
    return "?";
}

Method parse_method(std::string_view s) {
    for (Method m : kMethods) {
        if (to_string(m) == s) return m;
    }
    throw InputError(fmt::format("unknown method '{}' (expected vr, alpha, adjacency or levelset)", s));
}

std::string barcode_json(const Barcode& b) {
    using nlohmann::json;
    json bars = json::array();
    for (const auto& p : b.visible()) {
        json generator = json::array();
        for (const auto& s : p.generator) {
            generator.push_back(std::vector<VertexId>(s.vertices().begin(), s.vertices().end()));
        }
        bars.push_back({{"dimension", p.dimension},
                        {"birth", p.birth},
                        {"death", p.infinite() ? json(nullptr) : json(p.death)},
                        {"long_persistence", p.long_persistence},
                        {"generator", generator}});
    }
    json doc = {{"max_filtration", b.max_filtration}, {"bars", bars}};
    return doc.dump(1) + '\n';
}

std::string benchmark_csv(std::vector<BenchmarkRow> rows) {
    sort_rows(rows);
    std::string out = "input,candidate,method,simplex_count,build_seconds,ph_seconds\n";
    for (const auto& r : rows) {
        out += fmt::format("{},{},{},{},{},{}\n", r.input, to_string(r.candidate), to_string(r.method),
                           r.simplex_count, r.build_seconds, r.ph_seconds);
    }
    return out;
}

std::string benchmark_table(std::vector<BenchmarkRow> rows) {
    sort_rows(rows);
    std::vector<std::string> inputs;
    std::map<std::tuple<std::string, Method, Candidate>, BenchmarkRow> cell;
    for (const auto& r : rows) {
        if (inputs.empty() || inputs.back() != r.input) inputs.push_back(r.input);
        cell[{r.input, r.method, r.candidate}] = r;
    }
    std::vector<std::string> header{"Input"};
    for (Method m : kMethods) {
        for (Candidate c : kCandidates) header.push_back(fmt::format("{} {}", method_title(m), to_string(c)));
    }
    std::vector<std::vector<std::string>> sizes, times;
    for (const auto& input : inputs) {
        std::vector<std::string> s{input}, t{input};
        for (Method m : kMethods) {
            for (Candidate c : kCandidates) {
                auto it = cell.find({input, m, c});
                if (it == cell.end()) {
                    s.emplace_back("--");
                    t.emplace_back("--");
                } else {
                    s.push_back(std::to_string(it->second.simplex_count));
                    t.push_back(seconds(it->second.build_seconds) + " / " + seconds(it->second.ph_seconds));
                }
            }
        }
        sizes.push_back(std::move(s));
        times.push_back(std::move(t));
    }
    return "Sizes (number of simplices)\n\n" + render_table(header, sizes) +
           "\nComputation times (complex / persistent homology)\n\n" + render_table(header, times);
}

void benchmark_report(const std::vector<BenchmarkRow>& rows, const std::filesystem::path& path) {
    if (rows.empty()) throw std::invalid_argument("benchmark report needs at least one row");
    auto write = [](const std::filesystem::path& p, const std::string& text) {
        std::ofstream out(p, std::ios::binary);
        if (!out) throw InputError(fmt::format("cannot write '{}'", p.string()));
        out << text;
    };
    write(path, benchmark_csv(rows));
    auto table_path = path;
    table_path.replace_extension(path.extension() == ".txt" ? ".table.txt" : ".txt");
    write(table_path, benchmark_table(rows));
}

}  // namespace geoph
