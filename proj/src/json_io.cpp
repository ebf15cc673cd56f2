#include "dualgraph/json_io.hpp"

#include <fstream>
#include <sstream>

namespace dualgraph {

using nlohmann::json;

json graph_to_json(const DualGraph& g)
{
    json verts = json::array();
    for (const Vertex& v : g.vertices())
        verts.push_back({{"id", v.id}, {"r", v.r}, {"g", v.g}, {"a", v.a}});
    json edges = json::array();
    for (const Edge& e : g.edge_list())
        edges.push_back({{"a", g.vertex(e.i).id}, {"b", g.vertex(e.j).id}, {"m", e.mult}});
    return {{"schema", json_schema_version},
            {"vertices", verts},
            {"edges", edges},
            {"minimal", g.minimal_mode()}};
}

DualGraph graph_from_json(const json& j)
{
    std::vector<Vertex> verts;
    std::vector<std::string> ids;
    for (const json& jv : j.at("vertices")) {
        Vertex v;
        v.id = jv.at("id").get<std::string>();
        v.r = jv.value("r", 1LL);
        v.g = jv.value("g", 0LL);
        v.a = jv.at("a").get<long long>();
        if (v.r <= 0 || v.g < 0 || v.a <= 0)
            throw std::invalid_argument("vertex '" + v.id + "': need r >= 1, g >= 0, a >= 1");
        ids.push_back(v.id);
        verts.push_back(std::move(v));
    }
    auto find = [&](const std::string& id) {
        for (size_t i = 0; i < ids.size(); ++i)
            if (ids[i] == id) return static_cast<int>(i);
        throw std::invalid_argument("unknown vertex '" + id + "' in edge");
    };
    std::vector<Edge> edges;
    if (j.contains("edges"))
        for (const json& je : j.at("edges"))
            edges.push_back({find(je.at("a").get<std::string>()), find(je.at("b").get<std::string>()),
                             je.value("m", 1LL)});
    return DualGraph::from_parts(std::move(verts), edges, j.value("minimal", true));
}

DualGraph read_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return graph_from_json(json::parse(text));
    return parse_graph(text);
}

namespace {

json rational_array(const std::vector<Rational>& v)
{
    json arr = json::array();
    for (const Rational& x : v) arr.push_back(x.str());
    return arr;
}

} // namespace

json discrepancy_to_json(const DiscrepancyResult& res)
{
    return {{"schema", json_schema_version},
            {"canonical_degrees", res.canonical_degrees},
            {"delta", rational_array(res.delta)},
            {"discrepancies", rational_array(res.discrepancies)},
            {"class", numeric_class_name(res.klass)},
            {"delta_equals_E", res.delta_equals_E}};
}

json match_to_json(const FamilyMatch& m)
{
    json params = json::object();
    for (const auto& [k, v] : m.params) params[k] = v;
    return {{"schema", json_schema_version},
            {"family", family_name(m.family)},
            {"figure", m.matched() ? json(m.figure) : json(nullptr)},
            {"variant", m.variant},
            {"params", params}};
}

json cross_check_to_json(const ConsistencyVerdict& v)
{
    const char* kind = v.kind == Consistency::consistent     ? "consistent"
                       : v.kind == Consistency::inconsistent ? "inconsistent"
                                                             : "unmatched";
    json out = match_to_json(v.match);
    out["consistency"] = kind;
    out["numeric"] = discrepancy_to_json(v.numeric);
    if (v.kind == Consistency::inconsistent) out["details"] = v.details;
    return out;
}

json curve_report_to_json(const WeierstrassCubic& w, const CurveReport& rep)
{
    const char* kind = rep.kind == CurveKind::smooth ? "smooth"
                       : rep.kind == CurveKind::node ? "node"
                                                     : "cusp";
    json out = {{"schema", json_schema_version}, {"p", w.p},
                {"a", w.a},                      {"b", w.b},
                {"c", w.c},                      {"discriminant", rep.discriminant},
                {"verdict", kind}};
    if (rep.kind != CurveKind::smooth) out["point"] = {rep.point[0], rep.point[1]};
    return out;
}

json scan_to_json(const std::vector<ScanPoint>& points)
{
    json arr = json::array();
    for (const ScanPoint& pt : points) {
        if (pt.x[1] == 0 && pt.y[1] == 0)
            arr.push_back({pt.x[0], pt.y[0]});
        else
            arr.push_back({{pt.x[0], pt.x[1]}, {pt.y[0], pt.y[1]}});
    }
    return arr;
}

json audit_to_json(const AuditReport& rep)
{
    json unmatched = json::array();
    for (const UnmatchedEntry& e : rep.unmatched)
        unmatched.push_back({{"key", e.key}, {"class", numeric_class_name(e.klass)}});
    json inconsistent = json::array();
    for (const InconsistentEntry& e : rep.inconsistent)
        inconsistent.push_back({{"key", e.key}, {"details", e.details}});
    return {{"schema", json_schema_version},
            {"total_enumerated", rep.total_enumerated},
            {"negative_definite", rep.negative_definite_count},
            {"klt", rep.klt_count},
            {"lc", rep.lc_count},
            {"not_lc", rep.not_lc_count},
            {"consistent", rep.consistent_count},
            {"unmatched_not_lc", rep.unmatched_not_lc},
            {"unmatched", unmatched},
            {"inconsistent", inconsistent}};
}

} // namespace dualgraph
