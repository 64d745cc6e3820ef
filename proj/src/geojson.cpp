#include "geoph/geojson.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include "json.hpp"

#include "geoph/diagnostics.hpp"

namespace geoph {
namespace {

using nlohmann::json;

Ring parse_ring(const json& coords, const std::string& where) {
    if (!coords.is_array()) throw InputError(where + ": ring is not an array");
    Ring ring;
    for (const auto& pos : coords) {
        if (!pos.is_array() || pos.size() < 2 || !pos[0].is_number() || !pos[1].is_number()) {
            throw InputError(where + ": position must be [x, y]");
        }
        ring.push_back({pos[0].get<double>(), pos[1].get<double>()});
    }
    if (ring.size() < 3) throw InputError(where + ": ring has fewer than 3 positions");
    return ring;
}

std::vector<Ring> parse_polygon(const json& coords, const std::string& where) {
    if (!coords.is_array() || coords.empty()) throw InputError(where + ": polygon has no rings");
    std::vector<Ring> polygon;
    for (const auto& ring : coords) polygon.push_back(parse_ring(ring, where));
    normalize_polygon(polygon);
    return polygon;
}

std::uint64_t vote_count(const json& props, const char* key, const std::string& where) {
    auto it = props.find(key);
    if (it == props.end()) throw InputError(fmt::format("{}: missing property '{}'", where, key));
    if (!it->is_number_integer() || (!it->is_number_unsigned() && it->get<std::int64_t>() < 0)) {
        throw InputError(fmt::format("{}: property '{}' must be a non-negative integer", where, key));
    }
    return it->get<std::uint64_t>();
}

json ring_json(const Ring& ring) {
    json out = json::array();
    for (const auto& p : ring) out.push_back({p.x, p.y});
    return out;
}

}  // namespace

PrecinctMap parse_precincts(const std::string& text, const std::string& name) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(fmt::format("{}: malformed JSON: {}", name, e.what()));
    }
    if (!doc.is_object() || doc.value("type", "") != "FeatureCollection" || !doc.contains("features") ||
        !doc["features"].is_array()) {
        throw InputError(fmt::format("{}: expected a GeoJSON FeatureCollection", name));
    }
    PrecinctMap m;
    m.name = name;
    std::size_t index = 0;
    for (const auto& feature : doc["features"]) {
        std::string where = fmt::format("feature #{}", index++);
        if (!feature.is_object()) throw InputError(where + ": not an object");
        const json props = feature.contains("properties") && feature["properties"].is_object()
                               ? feature["properties"]
                               : json::object();
        auto id = props.find("id");
        if (id == props.end()) throw InputError(where + ": missing property 'id'");
        if (!id->is_string()) throw InputError(where + ": property 'id' must be a string");
        Precinct p;
        p.id = id->get<std::string>();
        where = fmt::format("feature '{}'", p.id);
        p.votes_blue = vote_count(props, "votes_blue", where);
        p.votes_red = vote_count(props, "votes_red", where);

        if (!feature.contains("geometry") || !feature["geometry"].is_object()) {
            throw InputError(where + ": missing geometry");
        }
        const auto& geom = feature["geometry"];
        const std::string type = geom.value("type", "");
        if (!geom.contains("coordinates")) throw InputError(where + ": geometry has no coordinates");
        const auto& coords = geom["coordinates"];
        if (type == "Polygon") {
            p.rings = parse_polygon(coords, where);
        } else if (type == "MultiPolygon") {
            if (!coords.is_array() || coords.empty()) throw InputError(where + ": empty MultiPolygon");
            for (const auto& poly : coords) {
                auto rings = parse_polygon(poly, where);
                p.rings.insert(p.rings.end(), rings.begin(), rings.end());
            }
        } else {
            throw InputError(fmt::format("{}: unsupported geometry type '{}'", where, type));
        }
        m.precincts.push_back(std::move(p));
    }
    m.check_unique_ids();
    return m;
}

PrecinctMap load_precincts(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError(fmt::format("cannot open '{}'", path.string()));
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_precincts(buffer.str(), path.stem().string());
}

void write_precincts(std::ostream& out, const PrecinctMap& m) {
    json features = json::array();
    for (const auto& p : m.precincts) {
        json polygons = json::array();
        for (const auto& ring : p.rings) {
            if (signed_area(ring) >= 0.0 || polygons.empty()) {
                polygons.push_back(json::array({ring_json(ring)}));
            } else {
                polygons.back().push_back(ring_json(ring));
            }
        }
        features.push_back({{"type", "Feature"},
                            {"properties",
                             {{"id", p.id}, {"votes_blue", p.votes_blue}, {"votes_red", p.votes_red}}},
                            {"geometry", {{"type", "MultiPolygon"}, {"coordinates", polygons}}}});
    }
    json doc = {{"type", "FeatureCollection"}, {"name", m.name}, {"features", features}};
    out << doc.dump(1) << '\n';
}

}  // namespace geoph
