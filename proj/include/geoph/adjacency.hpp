#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "geoph/complex.hpp"
#include "geoph/precinct.hpp"

namespace geoph {

/// Queen adjacency between precincts. Nodes are indices into the source
/// PrecinctMap; edges are (i, j) with i < j, sorted.
struct AdjacencyGraph {
    std::vector<std::string> ids;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    bool adjacent(std::size_t i, std::size_t j) const;
};

inline constexpr double kDefaultAdjacencyTolerance = 1e-9;

/// Minimum distance between segments ab and cd (0 when they intersect).
double segment_distance(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

/// Two precincts are adjacent when their boundaries come within `tol` of each
/// other anywhere, so a single shared corner suffices. Zero-area precincts are
/// kept with a warning.
AdjacencyGraph queen_adjacency(const PrecinctMap& m, double tol = kDefaultAdjacencyTolerance);

/// `id1<TAB>id2` per edge.
void write_adjacency(std::ostream& out, const AdjacencyGraph& g);

inline constexpr double kDefaultMarginStep = 0.05;

/// Entry level of a precinct with margin `margin`: the smallest k * step with
/// k >= 1 such that margin >= 1 - k * step.
double margin_level(double margin, double step);

/// Clique 2-complex of the candidate's precincts, filtered by vote margin.
/// Precinct i (index into m) is vertex i; only strict-majority winners for
/// `candidate` appear. Edges join adjacent winners at the later endpoint's
/// level and triangles fill every pairwise-adjacent triple.
FilteredComplex build_adjacency_complex(const PrecinctMap& m, const AdjacencyGraph& g,
                                        Candidate candidate, double step = kDefaultMarginStep);

}  // namespace geoph
