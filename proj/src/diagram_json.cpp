#include "tqft/diagram_json.hpp"

#include "tqft/error.hpp"

#include <json.hpp>

#include <limits>

namespace tqft {

namespace {

using nlohmann::json;

ArcId arc_id(const json& v) {
    if (!v.is_number_integer()) throw Error(ErrorCode::parse_error, "arc ids must be integers");
    auto x = v.get<long long>();
    if (x < 0 || x > std::numeric_limits<ArcId>::max())
        throw Error(ErrorCode::parse_error, "arc id out of range: " + std::to_string(x));
    return static_cast<ArcId>(x);
}

} // namespace

TangleDiagram parse_diagram_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::parse_error, e.what());
    }
    if (!doc.is_object()) throw Error(ErrorCode::parse_error, "top level must be an object");
    for (const auto& [key, _] : doc.items())
        if (key != "crossings" && key != "free_loops" && key != "boundary")
            throw Error(ErrorCode::parse_error, "unknown key '" + key + "'");
    if (!doc.contains("crossings") || !doc["crossings"].is_array())
        throw Error(ErrorCode::parse_error, "\"crossings\" must be an array");

    std::vector<Crossing> crossings;
    for (const auto& c : doc["crossings"]) {
        if (!c.is_array() || c.size() != 4) throw Error(ErrorCode::parse_error, "each crossing must have 4 arc ids");
        crossings.push_back({arc_id(c[0]), arc_id(c[1]), arc_id(c[2]), arc_id(c[3])});
    }
    std::size_t loops = 0;
    if (doc.contains("free_loops")) {
        const auto& f = doc["free_loops"];
        if (!f.is_number_integer() || f.get<long long>() < 0)
            throw Error(ErrorCode::parse_error, "\"free_loops\" must be a nonnegative integer");
        loops = f.get<std::size_t>();
    }
    std::vector<ArcId> boundary;
    if (doc.contains("boundary")) {
        if (!doc["boundary"].is_array()) throw Error(ErrorCode::parse_error, "\"boundary\" must be an array");
        for (const auto& b : doc["boundary"]) boundary.push_back(arc_id(b));
    }
    return TangleDiagram(std::move(crossings), loops, std::move(boundary));
}

std::string diagram_to_json(const TangleDiagram& t) {
    json doc;
    doc["crossings"] = json::array();
    for (const auto& c : t.crossings()) doc["crossings"].push_back({c[0], c[1], c[2], c[3]});
    doc["free_loops"] = t.free_loops();
    doc["boundary"] = t.boundary();
    return doc.dump();
}

} // namespace tqft
