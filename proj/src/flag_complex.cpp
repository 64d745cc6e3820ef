#include "geoph/flag_complex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include <fmt/format.h>

namespace geoph {
namespace {

struct Neighbor {
    VertexId id;
    double value;
};

std::uint64_t edge_key(VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

FilteredComplex incremental_flag_complex(std::span<const double> vertex_values,
                                         std::span<const WeightedEdge> edges, int max_dim,
                                         std::span<const VertexId> labels) {
    if (max_dim < 0 || max_dim > Simplex::kMaxDim) {
        throw std::invalid_argument(fmt::format("max_dim must be in [0, 2], got {}", max_dim));
    }
    const std::size_t n = vertex_values.size();
    if (!labels.empty() && labels.size() != n) {
        throw std::invalid_argument("label count does not match vertex count");
    }
    auto label = [&](VertexId i) { return labels.empty() ? i : labels[i]; };

    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), VertexId{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](VertexId a, VertexId b) { return vertex_values[a] < vertex_values[b]; });
    std::vector<std::size_t> rank(n);
    for (std::size_t i = 0; i < n; ++i) rank[order[i]] = i;

    std::unordered_map<std::uint64_t, double> edge_value;
    std::vector<std::vector<Neighbor>> lower(n);
    if (max_dim >= 1) {
        edge_value.reserve(edges.size());
        for (const auto& e : edges) {
            if (e.u >= n || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
            if (e.u == e.v) continue;
            double value = std::max({e.value, vertex_values[e.u], vertex_values[e.v]});
            auto [it, inserted] = edge_value.emplace(edge_key(e.u, e.v), value);
            if (!inserted) {
                it->second = std::min(it->second, value);
                continue;
            }
            VertexId hi = rank[e.u] > rank[e.v] ? e.u : e.v;
            VertexId lo = hi == e.u ? e.v : e.u;
            lower[hi].push_back({lo, 0.0});
        }
        for (auto& list : lower) {
            std::sort(list.begin(), list.end(),
                      [&](const Neighbor& a, const Neighbor& b) { return rank[a.id] < rank[b.id]; });
        }
    }

    std::vector<FiltrationEntry> entries;
    entries.reserve(n + edge_value.size());
    for (VertexId v : order) {
        entries.push_back({Simplex{label(v)}, vertex_values[v]});
        auto& lows = lower[v];
        for (auto& u : lows) {
            u.value = edge_value.at(edge_key(u.id, v));
            entries.push_back({Simplex{label(u.id), label(v)}, u.value});
        }
        if (max_dim < 2) continue;
        for (std::size_t i = 0; i < lows.size(); ++i) {
            for (std::size_t j = i + 1; j < lows.size(); ++j) {
                auto it = edge_value.find(edge_key(lows[i].id, lows[j].id));
                if (it == edge_value.end()) continue;
                double value = std::max({lows[i].value, lows[j].value, it->second});
                entries.push_back({Simplex{label(lows[i].id), label(lows[j].id), label(v)}, value});
            }
        }
    }
    return FilteredComplex::from_entries(std::move(entries));
}

}  // namespace geoph
