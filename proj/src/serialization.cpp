#include "mcg/serialization.hpp"

#include <algorithm>
#include <sstream>

namespace mcg {

namespace {

int as_int(const Json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw InvalidArgument(std::string("JSON field '") + key + "' missing or not an integer");
    return j.at(key).get<int>();
}

} // namespace

Json to_json(SurfaceSig s) { return Json{{"g", s.g}, {"b", s.b}}; }

SurfaceSig surface_from_json(const Json& j)
{
    SurfaceSig s{as_int(j, "g"), as_int(j, "b")};
    if (s.g < 0 || s.b < 0)
        throw InvalidArgument("negative surface signature");
    return s;
}

Json to_json(const GluingPattern& p)
{
    Json pieces = Json::array(), edges = Json::array();
    for (auto s : p.pieces)
        pieces.push_back(to_json(s));
    for (auto [a, b] : p.edges)
        edges.push_back({a, b});
    return Json{{"pieces", pieces}, {"edges", edges}};
}

GluingPattern pattern_from_json(const Json& j)
{
    GluingPattern p;
    for (const auto& piece : j.at("pieces"))
        p.pieces.push_back(surface_from_json(piece));
    for (const auto& e : j.at("edges")) {
        int a = e.at(0).get<int>(), b = e.at(1).get<int>();
        p.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    return p;
}

Json to_json(const Triangulation& T)
{
    Json tris = Json::array();
    for (const auto& tri : T.triangles()) {
        Json sides = Json::array();
        for (auto s : tri)
            sides.push_back({{"edge", s.edge}, {"side", s.flag}});
        tris.push_back(sides);
    }
    return Json{{"surface", to_json(T.surface())},
                {"edges", T.edge_count()},
                {"triangles", tris}};
}

Json to_json(const Multicurve& m)
{
    Json comps = Json::array();
    for (const auto& c : m)
        comps.push_back({{"weights", c.weights}, {"mult", c.mult}});
    return Json{{"components", comps}};
}

Multicurve multicurve_from_json(const Json& j)
{
    if (!j.contains("components") || !j.at("components").is_array())
        throw InvalidArgument("multicurve JSON needs a 'components' array");
    std::vector<Component> parts;
    for (const auto& c : j.at("components")) {
        Component comp;
        comp.weights = c.at("weights").get<WeightVector>();
        comp.mult = c.contains("mult") ? c.at("mult").get<int>() : 1;
        if (comp.mult < 1)
            throw InvalidArgument("component multiplicity must be >= 1");
        parts.push_back(std::move(comp));
    }
    return canonical(std::move(parts));
}

std::string_view kind_tag(GraphKind kind) { return kind == GraphKind::Multicurve ? "mk" : "ixi"; }

GraphKind parse_kind_tag(std::string_view tag)
{
    if (tag == "mk")
        return GraphKind::Multicurve;
    if (tag == "ixi")
        return GraphKind::Interpolating;
    throw InvalidArgument("graph kind must be mk or ixi, got '" + std::string(tag) + "'");
}

Json to_json(const MulticurveGraphInstance& G)
{
    Json edges = Json::array();
    for (std::size_t i = 0; i < G.adjacency.size(); ++i)
        for (int j : G.adjacency[i])
            if (static_cast<int>(i) < j)
                edges.push_back({i, j});
    return Json{{"kind", kind_tag(G.kind)},     {"param", G.param},
                {"surface", to_json(G.surface)}, {"max_weight", G.max_weight},
                {"curves", G.curves},            {"vertices", G.vertices},
                {"edges", edges}};
}

MulticurveGraphInstance graph_from_json(const Json& j)
{
    MulticurveGraphInstance G;
    G.kind = parse_kind_tag(j.at("kind").get<std::string>());
    G.param = as_int(j, "param");
    G.surface = surface_from_json(j.at("surface"));
    G.max_weight = as_int(j, "max_weight");
    G.curves = j.at("curves").get<std::vector<WeightVector>>();
    G.vertices = j.at("vertices").get<std::vector<Vertex>>();
    const int n = static_cast<int>(G.vertices.size());
    G.adjacency.assign(n, {});
    for (const auto& e : j.at("edges")) {
        int a = e.at(0).get<int>(), b = e.at(1).get<int>();
        if (a < 0 || b < 0 || a >= n || b >= n || a == b)
            throw InvalidArgument("graph JSON has an invalid edge");
        G.adjacency[a].push_back(b);
        G.adjacency[b].push_back(a);
    }
    for (auto& nb : G.adjacency)
        std::sort(nb.begin(), nb.end());
    return G;
}

std::string to_dot(const MulticurveGraphInstance& G)
{
    std::ostringstream out;
    out << "graph \"" << kind_tag(G.kind) << "_" << G.param << "_" << G.surface.g << "_"
        << G.surface.b << "\" {\n";
    for (std::size_t i = 0; i < G.vertices.size(); ++i) {
        out << "  v" << i << " [label=\"";
        for (std::size_t t = 0; t < G.vertices[i].size(); ++t)
            out << (t ? "," : "") << "c" << G.vertices[i][t];
        out << "\"];\n";
    }
    for (std::size_t i = 0; i < G.adjacency.size(); ++i)
        for (int j : G.adjacency[i])
            if (static_cast<int>(i) < j)
                out << "  v" << i << " -- v" << j << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace mcg
