#include "doctest.h"

#include "mcg/graph_lab.hpp"
#include "mcg/normal_curves.hpp"

#include <algorithm>
#include <set>

using namespace mcg;

namespace {

WeightVector around_edge(const Triangulation& T, int e)
{
    WeightVector v(T.edge_count(), 0);
    for (int vtx : {T.tail_vertex(e), T.head_vertex(e)})
        for (int f = 0; f < T.edge_count(); ++f)
            v[f] += T.vertex_links()[vtx][f];
    v[e] -= 2;
    return v;
}

int total_complexity(const std::vector<PieceSig>& pieces)
{
    int c = 0;
    for (auto p : pieces)
        c += p.complexity();
    return c;
}

int total_euler(const std::vector<PieceSig>& pieces)
{
    int c = 0;
    for (auto p : pieces)
        c += p.euler();
    return c;
}

void check_cut(const Inventory& inv, const Vertex& v)
{
    const SurfaceSig s = inv.surface();
    const auto& cut = inv.cut(v);
    const auto& pieces = cut.pieces();
    CHECK(total_euler(pieces) == s.euler());
    CHECK(total_complexity(pieces) == s.complexity() - static_cast<int>(v.size()));
    for (auto p : pieces)
        CHECK(is_essential_piece(p));
    CHECK_FALSE(pattern_violation(cut.as_pattern(), s));
    // one-piece cuts along non-separating curves are realized by loops
    if (pieces.size() >= 2)
        CHECK(gluing_feasible(pieces, s));
    CHECK(cut.curve_sides().size() == v.size());
    for (int vtx = 0; vtx < inv.triangulation().vertex_count(); ++vtx) {
        CHECK(cut.vertex_piece(vtx) >= 0);
        CHECK(cut.vertex_piece(vtx) < static_cast<int>(pieces.size()));
    }
}

}

TEST_SUITE("cut_complex") {

TEST_CASE("curve around an edge of the five-punctured sphere")
{
    const auto T = generate_triangulation({0, 5});
    const auto c = around_edge(T, 1);
    const CutComplex cut(T, Multicurve{{c, 1}});
    REQUIRE(cut.pieces().size() == 2);
    CHECK(cut_pieces(T, Multicurve{{c, 1}}) == std::vector<PieceSig>{{0, 3}, {0, 4}});
    const int small = cut.pieces()[0] == PieceSig{0, 3} ? 0 : 1;
    CHECK(cut.vertex_piece(T.tail_vertex(1)) == small);
    CHECK(cut.vertex_piece(T.head_vertex(1)) == small);
    int in_small = 0;
    for (int v = 0; v < 5; ++v)
        in_small += cut.vertex_piece(v) == small;
    CHECK(in_small == 2);
    const auto& sides = cut.curve_sides();
    REQUIRE(sides.size() == 1);
    CHECK(sides[0].first != sides[0].second);
}

TEST_CASE("empty cut is the whole surface")
{
    for (SurfaceSig s : {SurfaceSig{0, 4}, SurfaceSig{1, 1}, SurfaceSig{2, 0}, SurfaceSig{1, 3}}) {
        const auto T = generate_triangulation(s);
        CHECK(cut_pieces(T, {}) == std::vector<PieceSig>{s});
    }
}

TEST_CASE("multiplicities do not change the cut")
{
    const auto T = generate_triangulation({0, 5});
    const auto c = around_edge(T, 1);
    CHECK(cut_pieces(T, Multicurve{{c, 3}}) == cut_pieces(T, Multicurve{{c, 1}}));
}

TEST_CASE("single curves on the genus two closed surface")
{
    const auto T = generate_triangulation({2, 0});
    std::set<std::vector<PieceSig>> seen;
    for (const auto& c : enumerate_curves(T, 2)) {
        auto pieces = cut_pieces(T, Multicurve{{c, 1}});
        CHECK((pieces == std::vector<PieceSig>{{1, 2}} ||
               pieces == std::vector<PieceSig>{{1, 1}, {1, 1}}));
        seen.insert(pieces);
    }
    CHECK(seen.size() == 2);
}

TEST_CASE("single curves on the six-punctured sphere and the twice-punctured torus")
{
    {
        const auto T = generate_triangulation({0, 6});
        std::set<std::vector<PieceSig>> seen;
        for (const auto& c : enumerate_curves(T, 2))
            seen.insert(cut_pieces(T, Multicurve{{c, 1}}));
        CHECK(seen == std::set<std::vector<PieceSig>>{{{0, 3}, {0, 5}}, {{0, 4}, {0, 4}}});
    }
    {
        const auto T = generate_triangulation({1, 2});
        std::set<std::vector<PieceSig>> seen;
        for (const auto& c : enumerate_curves(T, 2))
            seen.insert(cut_pieces(T, Multicurve{{c, 1}}));
        CHECK(seen == std::set<std::vector<PieceSig>>{{{0, 3}, {1, 1}}, {{0, 4}}});
    }
}

TEST_CASE("cut invariants over small multicurves")
{
    for (SurfaceSig s : {SurfaceSig{0, 5}, SurfaceSig{1, 2}, SurfaceSig{0, 6}, SurfaceSig{1, 3}}) {
        const Inventory inv(s, 2);
        for (int k = 1; k <= std::min(3, s.complexity()); ++k)
            for (const auto& v : enumerate_multicurves(inv, k))
                check_cut(inv, v);
    }
}

TEST_CASE("pants decompositions cut into pairs of pants")
{
    for (SurfaceSig s : {SurfaceSig{0, 5}, SurfaceSig{1, 2}}) {
        const Inventory inv(s, 3);
        const auto pants = enumerate_multicurves(inv, s.complexity());
        REQUIRE_FALSE(pants.empty());
        for (const auto& P : pants) {
            const auto& pieces = inv.cut(P).pieces();
            CHECK(static_cast<int>(pieces.size()) == -s.euler());
            for (auto p : pieces)
                CHECK(p == PieceSig{0, 3});
        }
    }
}

TEST_CASE("locate")
{
    const Inventory inv({0, 5}, 3);
    const auto pants = enumerate_multicurves(inv, 2);
    REQUIRE_FALSE(pants.empty());
    for (const auto& P : pants)
        for (int drop = 0; drop < 2; ++drop) {
            const Vertex rest{P[1 - drop]};
            const auto& cut = inv.cut(rest);
            auto where = cut.locate(inv.curves()[P[drop]]);
            REQUIRE(where.has_value());
            CHECK(cut.pieces()[*where].complexity() == 1);
            CHECK_FALSE(cut.locate(inv.curves()[P[1 - drop]]).has_value());
        }
    const Vertex single{0};
    const auto& cut = inv.cut(single);
    for (int j = 1; j < inv.size(); ++j)
        if (!inv.disjoint(0, j))
            CHECK_THROWS_AS(cut.locate(inv.curves()[j]), InvalidArgument);
    CHECK_THROWS_AS(cut.locate(inv.triangulation().vertex_links()[0]), InvalidArgument);
}

TEST_CASE("locate agrees with the pieces' complexities on the genus one surface")
{
    // every curve disjoint from a separating curve lies in a piece that can hold it
    const Inventory inv({1, 3}, 2);
    for (int a = 0; a < inv.size(); ++a) {
        const auto& cut = inv.cut({a});
        for (int c = 0; c < inv.size(); ++c) {
            if (c == a || !inv.disjoint(a, c))
                continue;
            auto where = cut.locate(inv.curves()[c]);
            REQUIRE(where.has_value());
            CHECK(cut.pieces()[*where].complexity() >= 1);
        }
    }
}

TEST_CASE("invalid multicurves are rejected")
{
    const auto T = generate_triangulation({0, 5});
    const Inventory inv({0, 5}, 2);
    int a = -1, b = -1;
    for (int i = 0; i < inv.size() && a < 0; ++i)
        for (int j = i + 1; j < inv.size(); ++j)
            if (!inv.disjoint(i, j)) {
                a = i;
                b = j;
                break;
            }
    REQUIRE(a >= 0);
    CHECK_THROWS_AS(CutComplex(T, multicurve_of({inv.curves()[a], inv.curves()[b]})),
                    InvalidArgument);
    CHECK_THROWS_AS(CutComplex(T, Multicurve{{T.vertex_links()[0], 1}}), InvalidArgument);
}

}
