#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace geoph {

using VertexId = std::uint32_t;

/// A vertex, edge or triangle. Vertices are kept sorted and distinct, which
/// is the canonical form over F2 where orientation carries no information.
class Simplex {
public:
    static constexpr int kMaxDim = 2;

    Simplex() = default;
    // Throws std::invalid_argument on 0 or more than 3 vertices, or repeated vertices.
    Simplex(std::initializer_list<VertexId> vertices);
    explicit Simplex(std::span<const VertexId> vertices);

    int dim() const { return static_cast<int>(size_) - 1; }
    std::size_t size() const { return size_; }
    std::span<const VertexId> vertices() const { return {v_.data(), size_}; }
    VertexId operator[](std::size_t i) const { return v_[i]; }

    /// Codimension-one faces, obtained by deleting each vertex in turn.
    std::vector<Simplex> boundary() const;

    std::string to_string() const;

    // Lexicographic on the vertex list; a prefix sorts first.
    friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b);
    friend bool operator==(const Simplex& a, const Simplex& b) = default;

private:
    std::array<VertexId, 3> v_{};
    std::uint8_t size_ = 0;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept;
};

struct FiltrationEntry {
    Simplex simplex;
    double value = 0.0;
};

/// Total order used everywhere a filtration is linearised:
/// value, then dimension (faces before cofaces), then lexicographic.
bool filtration_less(const FiltrationEntry& a, const FiltrationEntry& b);

/// Problems found by check_filtration; empty when the entries form a valid
/// filtered complex.
std::vector<std::string> check_filtration(std::span<const FiltrationEntry> entries);

/// Immutable filtered simplicial complex of dimension at most 2. Entries are
/// stored in filtration order, so entry index doubles as boundary-matrix
/// column index.
class FilteredComplex {
public:
    FilteredComplex() = default;

    // Validates closure, monotonicity and uniqueness; throws std::invalid_argument
    // listing the first problems otherwise. Entries are sorted on the way in.
    static FilteredComplex from_entries(std::vector<FiltrationEntry> entries);

    std::span<const FiltrationEntry> entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const FiltrationEntry& operator[](std::size_t i) const { return entries_[i]; }

    std::optional<std::size_t> index_of(const Simplex& s) const;
    std::size_t count_dim(int dim) const;
    int max_dim() const;
    double max_value() const;
    std::vector<double> distinct_values() const;

private:
    std::vector<FiltrationEntry> entries_;
    std::unordered_map<Simplex, std::size_t, SimplexHash> index_;
};

/// Inserts every missing face with the minimum value over its cofaces and
/// lowers any face whose value exceeds that of a coface. Duplicate simplices
/// keep their smallest value. Throws std::invalid_argument on non-finite values.
FilteredComplex close_under_faces(std::vector<FiltrationEntry> entries);

/// Sublevel complex {sigma : value(sigma) <= t}, in filtration order.
std::vector<Simplex> complex_at(const FilteredComplex& fc, double t);

/// V - E + F for a complex of dimension at most 2.
long euler_characteristic(std::span<const Simplex> complex);

/// One simplex per line, `v0[,v1[,v2]]<TAB>value`, in filtration order.
void write_complex(std::ostream& out, const FilteredComplex& fc);
FilteredComplex read_complex(std::istream& in);

}  // namespace geoph
