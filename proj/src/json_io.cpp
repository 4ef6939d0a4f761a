#include "latwidth/json_io.hpp"

#include <fstream>
#include <sstream>

namespace lw {

static Q coord_from_json(const json& c, const std::string& field) {
    try {
        if (c.is_string()) return parse_rational(c.get<std::string>());
        if (c.is_number_integer()) return make_q(c.get<long long>());
    } catch (const Error&) {
    }
    throw Error("MalformedJSON", "field '" + field + "': expected a rational string like \"p/q\" or an integer");
}

Polygon polygon_from_json(const json& j) {
    if (!j.is_object()) throw Error("MalformedJSON", "top level: expected an object with a 'vertices' field");
    if (!j.contains("vertices")) throw Error("MalformedJSON", "field 'vertices': missing");
    const json& v = j["vertices"];
    if (!v.is_array()) throw Error("MalformedJSON", "field 'vertices': expected an array");
    if (v.empty()) throw Error("MalformedJSON", "field 'vertices': empty");
    std::vector<Pt> pts;
    for (size_t i = 0; i < v.size(); ++i) {
        std::string f = "vertices[" + std::to_string(i) + "]";
        if (!v[i].is_array() || v[i].size() != 2) throw Error("MalformedJSON", "field '" + f + "': expected a pair");
        pts.push_back(Pt(coord_from_json(v[i][0], f + "[0]"), coord_from_json(v[i][1], f + "[1]")));
    }
    return convex_hull(pts);
}

json point_to_json(const Pt& p) { return json::array({to_string(p.x), to_string(p.y)}); }
json ipoint_to_json(const IPt& p) { return json::array({p.x, p.y}); }

json polygon_to_json(const Polygon& P) {
    json v = json::array();
    for (auto& p : P.v) v.push_back(point_to_json(p));
    return json{{"vertices", v}};
}

Polygon read_polygon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("MalformedJSON", "cannot open " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error("MalformedJSON", path + ": " + e.what());
    }
    return polygon_from_json(j);
}

json region_to_json(const Region& r) {
    json hs = json::array();
    for (size_t i = 0; i < r.halfplanes.size(); ++i) {
        const auto& h = r.halfplanes[i];
        hs.push_back({{"normal", json::array({to_string(h.normal.x), to_string(h.normal.y)})},
                      {"offset", to_string(h.offset)},
                      {"strict", (bool)r.open[i]}});
    }
    return json{{"halfplanes", hs}};
}

json regionset_to_json(const RegionSet& rs) {
    json cells = json::array();
    for (auto& c : rs.cells) cells.push_back(region_to_json(c));
    return json{{"cells", cells}};
}

RegionSet regionset_from_json(const json& j) {
    if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array())
        throw Error("MalformedJSON", "field 'cells': expected an array");
    RegionSet rs;
    for (size_t i = 0; i < j["cells"].size(); ++i) {
        const json& c = j["cells"][i];
        std::string f = "cells[" + std::to_string(i) + "]";
        if (!c.is_object() || !c.contains("halfplanes") || !c["halfplanes"].is_array())
            throw Error("MalformedJSON", "field '" + f + ".halfplanes': expected an array");
        Region r;
        for (size_t k = 0; k < c["halfplanes"].size(); ++k) {
            const json& h = c["halfplanes"][k];
            std::string g = f + ".halfplanes[" + std::to_string(k) + "]";
            if (!h.is_object() || !h.contains("normal") || !h["normal"].is_array() || h["normal"].size() != 2)
                throw Error("MalformedJSON", "field '" + g + ".normal': expected a pair");
            if (!h.contains("offset")) throw Error("MalformedJSON", "field '" + g + ".offset': missing");
            HalfPlane hp{Pt(coord_from_json(h["normal"][0], g + ".normal[0]"), coord_from_json(h["normal"][1], g + ".normal[1]")),
                         coord_from_json(h["offset"], g + ".offset")};
            bool strict = h.contains("strict") && h["strict"].is_boolean() && h["strict"].get<bool>();
            r.add(hp, strict);
        }
        rs.cells.push_back(std::move(r));
    }
    return rs;
}

json report_to_json(const VerificationReport& r) {
    json verts = json::array();
    for (auto& [x, y] : r.best_vertices) verts.push_back(json::array({x, y}));
    json cert = nullptr;
    if (r.certificate) {
        json par = json::array();
        for (auto& p : r.certificate->params) par.push_back(to_string(p));
        cert = {{"params", par}, {"polygon", polygon_to_json(r.certificate->polygon)}, {"width", to_string(r.certificate->width)}};
    }
    json j{{"case", r.case_name},
           {"grid_resolution", r.grid_resolution},
           {"effective_resolution", r.effective_resolution},
           {"refine_iters", r.refine_iters},
           {"tol", r.tol},
           {"best_width_found", r.best_width_found},
           {"best_parameters", r.best_parameters},
           {"best_vertices", verts},
           {"certificate", cert},
           {"margin_to_3", r.margin_to_3},
           {"degeneration_flag", r.degeneration_flag},
           {"normalization", r.normalization},
           {"feasible_points", r.feasible_points},
           {"evaluations", r.evaluations},
           {"passed", r.passed}};
    if (!r.route.empty()) j["route"] = r.route;
    return j;
}

json search_to_json(const SearchResult& r) {
    json am = json::array();
    for (auto& P : r.argmax_polygons) am.push_back(polygon_to_json(P));
    json hist = json::object();
    for (auto& [k, v] : r.histogram) hist[k] = v;
    return json{{"max_width", to_string(r.max_width)}, {"argmax_polygons", am}, {"histogram", hist}, {"visited", r.visited}};
}

}  // namespace lw
