#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "geoph/homology.hpp"
#include "geoph/precinct.hpp"

namespace geoph {

enum class Method { vr, alpha, adjacency, levelset };

std::string_view to_string(Method m);
// Throws InputError on an unknown name.
Method parse_method(std::string_view s);

struct BenchmarkRow {
    std::string input;
    Candidate candidate = Candidate::blue;
    Method method = Method::vr;
    std::size_t simplex_count = 0;
    double build_seconds = 0.0;
    double ph_seconds = 0.0;
};

/// Visible bars as JSON:
/// {"max_filtration": x, "bars": [{dimension, birth, death|null, long_persistence,
///  generator: [[vertex ids], ...]}, ...]}
std::string barcode_json(const Barcode& b);

/// Long-form CSV, one line per row sorted by input name (then candidate, method).
std::string benchmark_csv(std::vector<BenchmarkRow> rows);

/// Size and timing tables with one column per (method, candidate) pair and
/// "--" where no row exists.
std::string benchmark_table(std::vector<BenchmarkRow> rows);

/// Writes the CSV to `path` and the aligned tables next to it with a .txt
/// extension. Throws std::invalid_argument on an empty row list.
void benchmark_report(const std::vector<BenchmarkRow>& rows, const std::filesystem::path& path);

}  // namespace geoph
