#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geoph/geometry.hpp"

namespace geoph {

enum class Candidate { blue, red };

std::string_view to_string(Candidate c);
// Throws InputError for anything other than "blue" or "red".
Candidate parse_candidate(std::string_view s);
Candidate opponent(Candidate c);

/// Closed ring: first point equals last point.
using Ring = std::vector<Point2>;

struct Precinct {
    std::string id;
    // Outer rings counter-clockwise, holes clockwise (see normalize_polygon).
    std::vector<Ring> rings;
    std::uint64_t votes_blue = 0;
    std::uint64_t votes_red = 0;

    std::uint64_t votes(Candidate c) const { return c == Candidate::blue ? votes_blue : votes_red; }
    BoundingBox bounds() const;
};

struct PrecinctMap {
    std::string name;
    std::vector<Precinct> precincts;

    std::size_t size() const { return precincts.size(); }
    BoundingBox bounds() const;
    // Throws InputError on a repeated id.
    void check_unique_ids() const;
};

/// Closes each ring and orients the first ring of a polygon counter-clockwise
/// and the remaining rings (holes) clockwise.
void normalize_polygon(std::vector<Ring>& polygon);

double signed_area(const Ring& ring);

/// |V_b - V_r| / (V_b + V_r). Throws InputError when the precinct has no votes.
double vote_margin(const Precinct& p);

/// Strict-majority winner; std::nullopt for a tie (including 0-0).
std::optional<Candidate> winner(const Precinct& p);

/// Indices of precincts the candidate won by strict majority.
std::vector<std::size_t> winning_precincts(const PrecinctMap& m, Candidate c);

/// Area-weighted centroid over all rings using signed areas, so holes
/// subtract. Falls back to the vertex average, with a warning, when the net
/// area is zero.
Point2 centroid(const Precinct& p);

/// Centroids of every precinct, labelled by id.
PointCloud centroids(const PrecinctMap& m);

/// Centroids of exactly the precincts in `subset`; empty in, empty out.
PointCloud centroids(const PrecinctMap& m, const std::vector<std::size_t>& subset);

}  // namespace geoph
