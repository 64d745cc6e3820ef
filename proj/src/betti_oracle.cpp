// Brute-force Betti numbers. Deliberately shares nothing with the
// persistence reduction: dense matrices, row echelon form, rank counting.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "geoph/homology.hpp"

namespace geoph {
namespace {

using Row = std::vector<std::uint64_t>;

// Rank over F2 of a dense matrix given as rows of packed bits.
long f2_rank(std::vector<Row> rows, std::size_t ncols) {
    long rank = 0;
    std::size_t next = 0;
    for (std::size_t col = 0; col < ncols && next < rows.size(); ++col) {
        const std::size_t word = col / 64;
        const std::uint64_t bit = std::uint64_t{1} << (col % 64);
        std::size_t pivot = next;
        while (pivot < rows.size() && !(rows[pivot][word] & bit)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[next]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != next && (rows[r][word] & bit)) {
                for (std::size_t w = 0; w < rows[r].size(); ++w) rows[r][w] ^= rows[next][w];
            }
        }
        ++next;
        ++rank;
    }
    return rank;
}

// Rank of the boundary map from k-simplices to (k-1)-simplices. One row per
// k-simplex, one column per (k-1)-simplex.
long boundary_rank(const std::vector<Simplex>& higher, const std::vector<Simplex>& lower) {
    if (higher.empty() || lower.empty()) return 0;
    std::map<Simplex, std::size_t> column;
    for (std::size_t i = 0; i < lower.size(); ++i) column.emplace(lower[i], i);
    const std::size_t words = (lower.size() + 63) / 64;
    std::vector<Row> rows;
    rows.reserve(higher.size());
    for (const auto& s : higher) {
        Row row(words, 0);
        // Faces by explicit vertex deletion.
        for (std::size_t skip = 0; skip < s.size(); ++skip) {
            std::vector<VertexId> face;
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (i != skip) face.push_back(s[i]);
            }
            auto it = column.find(Simplex(face));
            if (it == column.end()) throw std::invalid_argument("complex is not closed under faces");
            row[it->second / 64] ^= std::uint64_t{1} << (it->second % 64);
        }
        rows.push_back(std::move(row));
    }
    return f2_rank(std::move(rows), lower.size());
}

}  // namespace

std::array<long, 3> betti_oracle(std::span<const Simplex> complex) {
    std::array<std::vector<Simplex>, 3> by_dim;
    for (const auto& s : complex) by_dim.at(static_cast<std::size_t>(s.dim())).push_back(s);
    for (auto& v : by_dim) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    const long rank1 = boundary_rank(by_dim[1], by_dim[0]);
    const long rank2 = boundary_rank(by_dim[2], by_dim[1]);
    const long n0 = static_cast<long>(by_dim[0].size());
    const long n1 = static_cast<long>(by_dim[1].size());
    const long n2 = static_cast<long>(by_dim[2].size());
    return {n0 - rank1, n1 - rank1 - rank2, n2 - rank2};
}

}  // namespace geoph
