#include "doctest.h"

#include "mcg/serialization.hpp"

#include <string>

using namespace mcg;

TEST_SUITE("serialization") {

TEST_CASE("surfaces")
{
    CHECK(to_json(SurfaceSig{2, 3}).dump() == R"({"g":2,"b":3})");
    CHECK(surface_from_json(Json::parse(R"({"b":1,"g":4})")) == SurfaceSig{4, 1});
    CHECK_THROWS_AS(surface_from_json(Json::parse(R"({"g":-1,"b":1})")), InvalidArgument);
    CHECK_THROWS_AS(surface_from_json(Json::parse(R"({"g":1})")), InvalidArgument);
    CHECK_THROWS_AS(surface_from_json(Json::parse(R"({"g":"1","b":1})")), InvalidArgument);
}

TEST_CASE("gluing patterns")
{
    const GluingPattern p{{{0, 3}, {1, 2}}, {{0, 1}, {1, 1}}};
    const Json j = to_json(p);
    CHECK(j.dump() ==
          R"({"pieces":[{"g":0,"b":3},{"g":1,"b":2}],"edges":[[0,1],[1,1]]})");
    const auto back = pattern_from_json(j);
    CHECK(back.pieces == p.pieces);
    CHECK(back.edges == p.edges);
    CHECK(pattern_from_json(Json::parse(R"({"pieces":[{"g":0,"b":3},{"g":0,"b":3}],"edges":[[1,0]]})"))
              .edges == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("triangulations")
{
    const auto T = generate_triangulation({1, 1});
    const Json j = to_json(T);
    CHECK(j.at("surface") == to_json(SurfaceSig{1, 1}));
    CHECK(j.at("edges") == 3);
    REQUIRE(j.at("triangles").size() == 2);
    for (std::size_t t = 0; t < 2; ++t)
        for (std::size_t s = 0; s < 3; ++s) {
            CHECK(j["triangles"][t][s]["edge"] == T.triangles()[t][s].edge);
            CHECK(j["triangles"][t][s]["side"] == T.triangles()[t][s].flag);
        }
}

TEST_CASE("multicurves")
{
    const Multicurve m{{{1, 0, 1}, 1}, {{1, 1, 0}, 2}};
    const Json j = to_json(m);
    CHECK(j.dump() ==
          R"({"components":[{"weights":[1,0,1],"mult":1},{"weights":[1,1,0],"mult":2}]})");
    CHECK(multicurve_from_json(j) == m);
    CHECK(multicurve_from_json(Json::parse(
              R"({"components":[{"weights":[1,1,0]},{"weights":[1,0,1]},{"weights":[1,1,0]}]})")) ==
          m);
    CHECK(multicurve_from_json(Json::parse(R"({"components":[]})")).empty());
    CHECK_THROWS_AS(multicurve_from_json(Json::parse(R"({"weights":[1,1,0]})")), InvalidArgument);
    CHECK_THROWS_AS(
        multicurve_from_json(Json::parse(R"({"components":[{"weights":[1,1,0],"mult":0}]})")),
        InvalidArgument);
}

TEST_CASE("graphs round trip")
{
    const Inventory inv({0, 5}, 2);
    for (auto kind : {GraphKind::Multicurve, GraphKind::Interpolating}) {
        const auto G = build_graph(inv, kind, 1);
        const Json j = to_json(G);
        CHECK(j.at("kind") == std::string(kind_tag(kind)));
        CHECK(j.at("edges").size() == G.edge_count());
        const auto H = graph_from_json(Json::parse(j.dump()));
        CHECK(H.kind == G.kind);
        CHECK(H.param == G.param);
        CHECK(H.surface == G.surface);
        CHECK(H.max_weight == G.max_weight);
        CHECK(H.curves == G.curves);
        CHECK(H.vertices == G.vertices);
        CHECK(H.adjacency == G.adjacency);
    }
    Json bad = to_json(build_graph(inv, GraphKind::Multicurve, 1));
    bad["edges"].push_back({0, 0});
    CHECK_THROWS_AS(graph_from_json(bad), InvalidArgument);
    bad["kind"] = "pants";
    CHECK_THROWS_AS(graph_from_json(bad), InvalidArgument);
}

TEST_CASE("kind tags")
{
    CHECK(kind_tag(GraphKind::Multicurve) == "mk");
    CHECK(kind_tag(GraphKind::Interpolating) == "ixi");
    CHECK(parse_kind_tag("mk") == GraphKind::Multicurve);
    CHECK(parse_kind_tag("ixi") == GraphKind::Interpolating);
    CHECK_THROWS_AS(parse_kind_tag("cc"), InvalidArgument);
}

TEST_CASE("dot output")
{
    MulticurveGraphInstance G;
    G.kind = GraphKind::Multicurve;
    G.param = 1;
    G.surface = {0, 5};
    G.vertices = {{0}, {1}, {2}};
    G.adjacency = {{1}, {0, 2}, {1}};
    CHECK(to_dot(G) == "graph \"mk_1_0_5\" {\n"
                       "  v0 [label=\"c0\"];\n"
                       "  v1 [label=\"c1\"];\n"
                       "  v2 [label=\"c2\"];\n"
                       "  v0 -- v1;\n"
                       "  v1 -- v2;\n"
                       "}\n");
}

}
