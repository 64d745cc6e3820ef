#include "geoph/homology.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace geoph {
namespace {

// Symmetric difference of two sorted index lists, written into `target`.
void add_column(std::vector<std::size_t>& target, const std::vector<std::size_t>& source,
                std::vector<std::size_t>& scratch) {
    scratch.clear();
    std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(),
                                  std::back_inserter(scratch));
    target.swap(scratch);
}

}  // namespace

BoundaryMatrix build_boundary_matrix(const FilteredComplex& fc) {
    BoundaryMatrix m;
    m.columns.resize(fc.size());
    m.dims.resize(fc.size());
    for (std::size_t j = 0; j < fc.size(); ++j) {
        const auto& s = fc[j].simplex;
        m.dims[j] = s.dim();
        auto& col = m.columns[j];
        for (const auto& face : s.boundary()) col.push_back(*fc.index_of(face));
        std::sort(col.begin(), col.end());
    }
    return m;
}

ReducedMatrix reduce_matrix(BoundaryMatrix m) {
    ReducedMatrix r;
    const std::size_t n = m.size();
    r.columns = std::move(m.columns);
    r.dims = std::move(m.dims);
    r.chains.resize(n);
    r.partner.assign(n, kNoIndex);

    std::vector<std::size_t> pivot_col(n, kNoIndex);
    std::vector<std::size_t> scratch;
    for (std::size_t j = 0; j < n; ++j) {
        const bool track = r.dims[j] == 1;
        if (track) r.chains[j] = {j};
        auto& col = r.columns[j];
        while (!col.empty()) {
            std::size_t k = pivot_col[col.back()];
            if (k == kNoIndex) break;
            add_column(col, r.columns[k], scratch);
            if (track) add_column(r.chains[j], r.chains[k], scratch);
        }
        if (!col.empty()) {
            std::size_t birth = col.back();
            pivot_col[birth] = j;
            r.partner[birth] = j;
            r.partner[j] = birth;
        }
    }
    return r;
}

std::vector<Simplex> extract_generator_cycle(const ReducedMatrix& reduced,
                                             const FilteredComplex& fc,
                                             const PersistencePair& pair) {
    if (pair.dimension != 1) {
        throw std::invalid_argument("generator cycles exist only for dimension-1 classes");
    }
    std::vector<Simplex> cycle;
    for (std::size_t idx : reduced.chains.at(pair.birth_index)) cycle.push_back(fc[idx].simplex);
    std::sort(cycle.begin(), cycle.end());
    return cycle;
}

Barcode persistence_pairs(const ReducedMatrix& reduced, const FilteredComplex& fc) {
    Barcode b;
    b.max_filtration = fc.max_value();
    for (std::size_t j = 0; j < reduced.size(); ++j) {
        if (!reduced.is_zero(j)) continue;  // death column
        PersistencePair p;
        p.dimension = reduced.dims[j];
        p.birth_index = j;
        p.birth = fc[j].value;
        if (reduced.partner[j] != kNoIndex) {
            p.death_index = reduced.partner[j];
            p.death = fc[p.death_index].value;
        }
        if (p.dimension == 0) {
            p.generator = {fc[j].simplex};
        } else if (p.dimension == 1) {
            p.generator = extract_generator_cycle(reduced, fc, p);
        }
        b.pairs.push_back(std::move(p));
    }
    std::stable_sort(b.pairs.begin(), b.pairs.end(),
                     [](const PersistencePair& a, const PersistencePair& c) {
                         if (a.dimension != c.dimension) return a.dimension < c.dimension;
                         if (a.birth != c.birth) return a.birth < c.birth;
                         if (a.death != c.death) return a.death < c.death;
                         return a.birth_index < c.birth_index;
                     });
    return b;
}

Barcode compute_persistence(const FilteredComplex& fc) {
    return persistence_pairs(reduce_matrix(build_boundary_matrix(fc)), fc);
}

std::vector<PersistencePair> Barcode::visible() const {
    std::vector<PersistencePair> out;
    for (const auto& p : pairs) {
        if (!p.zero_length()) out.push_back(p);
    }
    return out;
}

std::vector<PersistencePair> Barcode::in_dim(int dim) const {
    std::vector<PersistencePair> out;
    for (const auto& p : pairs) {
        if (p.dimension == dim && !p.zero_length()) out.push_back(p);
    }
    return out;
}

double Barcode::max_persistence(int dim) const {
    double best = 0.0;
    for (const auto& p : pairs) {
        if (p.dimension != dim || p.zero_length()) continue;
        double death = p.infinite() ? max_filtration : p.death;
        best = std::max(best, death - p.birth);
    }
    return best;
}

std::size_t Barcode::alive_count(int dim, double t) const {
    return static_cast<std::size_t>(std::count_if(pairs.begin(), pairs.end(), [&](const auto& p) {
        return p.dimension == dim && p.alive_at(t);
    }));
}

Barcode classify_long_persistence(Barcode barcode, double threshold) {
    const double denom = barcode.max_persistence(1);
    for (auto& p : barcode.pairs) {
        if (p.dimension != 1) continue;
        if (p.infinite()) {
            double span = barcode.max_filtration - p.birth;
            p.ratio = denom > 0.0 ? span / denom : 1.0;
            p.long_persistence = true;
            continue;
        }
        p.ratio = denom > 0.0 ? p.persistence() / denom : 0.0;
        p.long_persistence = !p.zero_length() && *p.ratio >= threshold;
    }
    return barcode;
}

}  // namespace geoph
