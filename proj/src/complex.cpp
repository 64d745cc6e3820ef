#include "geoph/complex.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

namespace geoph {

Simplex::Simplex(std::initializer_list<VertexId> vertices)
    : Simplex(std::span<const VertexId>(vertices.begin(), vertices.size())) {}

Simplex::Simplex(std::span<const VertexId> vertices) {
    if (vertices.empty() || vertices.size() > 3) {
        throw std::invalid_argument(
            fmt::format("simplex must have 1 to 3 vertices, got {}", vertices.size()));
    }
    size_ = static_cast<std::uint8_t>(vertices.size());
    std::copy(vertices.begin(), vertices.end(), v_.begin());
    std::sort(v_.begin(), v_.begin() + size_);
    if (std::adjacent_find(v_.begin(), v_.begin() + size_) != v_.begin() + size_) {
        throw std::invalid_argument("simplex has a repeated vertex");
    }
}

std::vector<Simplex> Simplex::boundary() const {
    std::vector<Simplex> faces;
    if (size_ < 2) return faces;
    faces.reserve(size_);
    for (std::size_t skip = 0; skip < size_; ++skip) {
        std::array<VertexId, 2> f{};
        std::size_t k = 0;
        for (std::size_t i = 0; i < size_; ++i) {
            if (i != skip) f[k++] = v_[i];
        }
        faces.emplace_back(std::span<const VertexId>(f.data(), k));
    }
    return faces;
}

std::string Simplex::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < size_; ++i) {
        if (i) out += ',';
        out += std::to_string(v_[i]);
    }
    return out;
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
    return std::lexicographical_compare_three_way(a.v_.begin(), a.v_.begin() + a.size_,
                                                  b.v_.begin(), b.v_.begin() + b.size_);
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
    std::size_t h = s.size();
    for (VertexId v : s.vertices()) {
        h ^= std::hash<VertexId>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

bool filtration_less(const FiltrationEntry& a, const FiltrationEntry& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.simplex.dim() != b.simplex.dim()) return a.simplex.dim() < b.simplex.dim();
    return a.simplex < b.simplex;
}

std::vector<std::string> check_filtration(std::span<const FiltrationEntry> entries) {
    std::vector<std::string> problems;
    std::unordered_map<Simplex, double, SimplexHash> values;
    values.reserve(entries.size());
    for (const auto& e : entries) {
        if (e.simplex.size() == 0) {
            problems.push_back("empty simplex");
            continue;
        }
        if (!std::isfinite(e.value)) {
            problems.push_back(fmt::format("non-finite value at {}", e.simplex.to_string()));
        }
        if (!values.emplace(e.simplex, e.value).second) {
            problems.push_back(fmt::format("duplicate simplex {}", e.simplex.to_string()));
        }
    }
    for (const auto& e : entries) {
        for (const auto& face : e.simplex.boundary()) {
            auto it = values.find(face);
            if (it == values.end()) {
                problems.push_back(fmt::format("face {} of {} missing", face.to_string(),
                                               e.simplex.to_string()));
            } else if (it->second > e.value) {
                problems.push_back(fmt::format("face {} enters at {} after coface {} at {}",
                                               face.to_string(), it->second,
                                               e.simplex.to_string(), e.value));
            }
        }
    }
    return problems;
}

FilteredComplex FilteredComplex::from_entries(std::vector<FiltrationEntry> entries) {
    auto problems = check_filtration(entries);
    if (!problems.empty()) {
        std::string msg = "invalid filtered complex:";
        for (std::size_t i = 0; i < problems.size() && i < 5; ++i) msg += "\n  " + problems[i];
        if (problems.size() > 5) msg += fmt::format("\n  ... and {} more", problems.size() - 5);
        throw std::invalid_argument(msg);
    }
    std::sort(entries.begin(), entries.end(), filtration_less);

    FilteredComplex fc;
    fc.entries_ = std::move(entries);
    fc.index_.reserve(fc.entries_.size());
    for (std::size_t i = 0; i < fc.entries_.size(); ++i) fc.index_.emplace(fc.entries_[i].simplex, i);
    return fc;
}

std::optional<std::size_t> FilteredComplex::index_of(const Simplex& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t FilteredComplex::count_dim(int dim) const {
    return static_cast<std::size_t>(std::count_if(
        entries_.begin(), entries_.end(), [dim](const auto& e) { return e.simplex.dim() == dim; }));
}

int FilteredComplex::max_dim() const {
    int d = -1;
    for (const auto& e : entries_) d = std::max(d, e.simplex.dim());
    return d;
}

double FilteredComplex::max_value() const { return entries_.empty() ? 0.0 : entries_.back().value; }

std::vector<double> FilteredComplex::distinct_values() const {
    std::vector<double> out;
    for (const auto& e : entries_) {
        if (out.empty() || out.back() != e.value) out.push_back(e.value);
    }
    return out;
}

FilteredComplex close_under_faces(std::vector<FiltrationEntry> entries) {
    std::unordered_map<Simplex, double, SimplexHash> values;
    values.reserve(entries.size() * 2);
    for (const auto& e : entries) {
        if (!std::isfinite(e.value)) {
            throw std::invalid_argument(
                fmt::format("non-finite filtration value at {}", e.simplex.to_string()));
        }
        auto [it, inserted] = values.emplace(e.simplex, e.value);
        if (!inserted) it->second = std::min(it->second, e.value);
    }
    // Push values down one dimension at a time: triangles first, then edges.
    for (int dim = Simplex::kMaxDim; dim >= 1; --dim) {
        std::vector<std::pair<Simplex, double>> level;
        for (const auto& [s, v] : values) {
            if (s.dim() == dim) level.emplace_back(s, v);
        }
        for (const auto& [s, v] : level) {
            for (const auto& face : s.boundary()) {
                auto [it, inserted] = values.emplace(face, v);
                if (!inserted) it->second = std::min(it->second, v);
            }
        }
    }
    std::vector<FiltrationEntry> closed;
    closed.reserve(values.size());
    for (const auto& [s, v] : values) closed.push_back({s, v});
    return FilteredComplex::from_entries(std::move(closed));
}

std::vector<Simplex> complex_at(const FilteredComplex& fc, double t) {
    std::vector<Simplex> out;
    for (const auto& e : fc.entries()) {
        if (e.value > t) break;
        out.push_back(e.simplex);
    }
    return out;
}

long euler_characteristic(std::span<const Simplex> complex) {
    long chi = 0;
    for (const auto& s : complex) chi += (s.dim() % 2 == 0) ? 1 : -1;
    return chi;
}

void write_complex(std::ostream& out, const FilteredComplex& fc) {
    for (const auto& e : fc.entries()) {
        out << e.simplex.to_string() << '\t' << fmt::format("{}", e.value) << '\n';
    }
}

FilteredComplex read_complex(std::istream& in) {
    std::vector<FiltrationEntry> entries;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw std::invalid_argument(fmt::format("line {}: missing tab", lineno));
        }
        std::vector<VertexId> verts;
        std::size_t pos = 0;
        while (pos < tab) {
            auto comma = line.find(',', pos);
            if (comma == std::string::npos || comma > tab) comma = tab;
            VertexId v{};
            auto [p, ec] = std::from_chars(line.data() + pos, line.data() + comma, v);
            if (ec != std::errc{} || p != line.data() + comma) {
                throw std::invalid_argument(fmt::format("line {}: bad vertex id", lineno));
            }
            verts.push_back(v);
            pos = comma + 1;
        }
        double value = 0.0;
        try {
            std::size_t used = 0;
            value = std::stod(line.substr(tab + 1), &used);
            if (tab + 1 + used != line.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw std::invalid_argument(fmt::format("line {}: bad filtration value", lineno));
        }
        entries.push_back({Simplex(verts), value});
    }
    return FilteredComplex::from_entries(std::move(entries));
}

}  // namespace geoph
