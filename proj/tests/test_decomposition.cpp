#include "doctest.h"

#include "brute_force.hpp"
#include "mcg/decomposition.hpp"

#include <algorithm>
#include <set>

using namespace mcg;

namespace {

std::vector<std::vector<PieceSig>> multisets(SurfaceSig target, int min_c, int max_pieces)
{
    std::vector<std::vector<PieceSig>> out;
    for (const auto& d : enumerate_decompositions(target, min_c, max_pieces)) {
        auto p = d.pattern.pieces;
        std::sort(p.begin(), p.end());
        out.push_back(p);
    }
    return out;
}

bool contains(const std::vector<std::vector<PieceSig>>& all, std::vector<PieceSig> ms)
{
    std::sort(ms.begin(), ms.end());
    return std::find(all.begin(), all.end(), ms) != all.end();
}

}

TEST_SUITE("decomposition") {

TEST_CASE("gluing feasibility examples")
{
    const PieceSig two_tori[] = {{1, 1}, {1, 1}};
    CHECK(gluing_feasible(two_tori, {2, 0}));
    CHECK_FALSE(gluing_feasible(two_tori, {2, 1}));
    const PieceSig spheres[] = {{0, 4}, {0, 5}};
    CHECK(gluing_feasible(spheres, {0, 7}));
    const PieceSig whole[] = {{2, 0}};
    CHECK(gluing_feasible(whole, {2, 0}));
    const PieceSig other[] = {{1, 2}};
    CHECK_FALSE(gluing_feasible(other, {2, 0}));
    CHECK_FALSE(gluing_feasible(std::span<const PieceSig>{}, {2, 0}));
    // enough Euler characteristic but too few circles to connect three pieces
    const PieceSig lonely[] = {{1, 1}, {1, 1}, {1, 1}};
    CHECK_FALSE(gluing_feasible(lonely, {1, 3}));
    CHECK_FALSE(gluing_feasible(lonely, {3, 0}));
}

TEST_CASE("gluing feasibility agrees with explicit multigraph search")
{
    for (int g = 0; g <= 3; ++g)
        for (int b = 0; b <= 4; ++b) {
            SurfaceSig target{g, b};
            if (target.complexity() < 1 || -target.euler() > 5)
                continue;
            for (const auto& ms : brute::piece_multisets(target)) {
                const bool mine = gluing_feasible(ms, target);
                CHECK_MESSAGE(mine == brute::realizable(ms, target), to_string(target));
                auto pattern = build_gluing_pattern(ms, target);
                CHECK(pattern.has_value() == mine);
                if (pattern)
                    CHECK_FALSE(pattern_violation(*pattern, target).has_value());
            }
        }
}

TEST_CASE("pattern validation")
{
    GluingPattern p{{{1, 1}, {1, 1}}, {{0, 1}}};
    CHECK_FALSE(pattern_violation(p, {2, 0}).has_value());
    CHECK(p.derived_genus() == 2);
    CHECK(p.degrees() == std::vector<int>{1, 1});
    GluingPattern disconnected{{{1, 1}, {1, 1}}, {}};
    CHECK(pattern_violation(disconnected, {2, 2}).has_value());
    GluingPattern overused{{{1, 1}, {1, 1}}, {{0, 1}, {0, 1}}};
    CHECK(pattern_violation(overused, {2, 0}).has_value());
    GluingPattern loop{{{1, 2}}, {{0, 0}}};
    CHECK_FALSE(pattern_violation(loop, {2, 0}).has_value());
    GluingPattern annulus{{{0, 2}, {1, 2}}, {{0, 1}}};
    CHECK(pattern_violation(annulus, {1, 2}).has_value());
}

TEST_CASE("required edges")
{
    const PieceSig trio[] = {{1, 1}, {1, 1}, {0, 4}};
    const std::pair<int, int> need[] = {{0, 2}, {1, 2}};
    auto p = build_pattern_with_edges(trio, {2, 2}, need);
    REQUIRE(p.has_value());
    CHECK_FALSE(pattern_violation(*p, {2, 2}).has_value());
    CHECK(std::count(p->edges.begin(), p->edges.end(), std::pair{0, 2}) >= 1);
    CHECK(std::count(p->edges.begin(), p->edges.end(), std::pair{1, 2}) >= 1);
    const std::pair<int, int> impossible[] = {{0, 1}, {0, 2}};
    CHECK_FALSE(build_pattern_with_edges(trio, {2, 2}, impossible).has_value());
}

TEST_CASE("enumeration examples")
{
    auto g2 = multisets({2, 0}, 1, 2);
    CHECK(contains(g2, {{1, 1}, {1, 1}}));
    CHECK(contains(g2, {{2, 0}}));
    // every piece of a (0,5) cut with complexity >= 1 would need 4 circles
    CHECK(multisets({0, 5}, 1, 3) == std::vector<std::vector<PieceSig>>{{{0, 5}}});
    CHECK(multisets({1, 1}, 2, 2).empty());
}

TEST_CASE("enumeration is canonical and duplicate free")
{
    for (int g = 0; g <= 3; ++g)
        for (int b = 0; b <= 4; ++b) {
            SurfaceSig t{g, b};
            if (t.complexity() < 1)
                continue;
            std::set<std::vector<PieceSig>> seen;
            for_each_decomposition(t, 0, -t.euler(), [&](const CutDecomposition& d) {
                const auto& p = d.pattern.pieces;
                CHECK(std::is_sorted(p.begin(), p.end()));
                CHECK(seen.insert(p).second);
                CHECK_FALSE(pattern_violation(d.pattern, t).has_value());
                for (auto piece : p)
                    CHECK(is_essential_piece(piece));
            });
        }
}

TEST_CASE("mu oracle examples")
{
    CHECK(mu_oracle({2, 0}, 3) == 1);
    CHECK(mu_oracle({2, 0}, 1) == 2);
    CHECK(mu_oracle({0, 7}, 1) == 2);
    CHECK(mu_oracle({1, 1}, 2) == 0);
    CHECK_THROWS_AS(mu_oracle({2, 0}, 0), InvalidArgument);
}

TEST_CASE("mu oracle agrees with explicit multigraph search")
{
    for (int g = 0; g <= 3; ++g)
        for (int b = 0; b <= 4; ++b) {
            SurfaceSig t{g, b};
            if (t.complexity() < 1 || -t.euler() > 5)
                continue;
            for (int xi = 1; xi <= t.complexity(); ++xi)
                CHECK_MESSAGE(mu_oracle(t, xi) == brute::mu(t, xi), to_string(t), " xi=", xi);
        }
}

TEST_CASE("condition A and B examples")
{
    CHECK(condition_A({2, 2}, 2));
    CHECK_FALSE(condition_A({2, 2}, 3));
    CHECK(condition_B({2, 2}, 2));
    CHECK_FALSE(condition_B({2, 2}, 1));
    CHECK(condition_B({3, 0}, 2));
    auto w = condition_A_witness({2, 2}, 2);
    REQUIRE(w.has_value());
    CHECK(w->pieces == std::vector<PieceSig>{{1, 2}, {1, 2}});
    auto ce = condition_B_counterexample({3, 0}, 1);
    REQUIRE(ce.has_value());
    CHECK_FALSE(pattern_violation(*ce, {3, 0}).has_value());
    CHECK(ce->pieces.size() == 3);
}

TEST_CASE("condition A at or above half the complexity fails")
{
    for (int g = 0; g <= 4; ++g)
        for (int b = 0; b <= 5; ++b) {
            SurfaceSig t{g, b};
            for (int xi = 1; xi <= t.complexity(); ++xi)
                if (2 * xi >= t.complexity())
                    CHECK_FALSE(condition_A(t, xi));
        }
}

TEST_CASE("three-piece search for B matches the general search")
{
    for (int g = 0; g <= 3; ++g)
        for (int b = 0; b <= 5; ++b) {
            SurfaceSig t{g, b};
            if (t.complexity() < 2 || -t.euler() > 5)
                continue;
            for (int xi = 1; xi <= t.complexity(); ++xi) {
                CHECK_MESSAGE(condition_B(t, xi) == brute::condition_B(t, xi), to_string(t),
                              " xi=", xi);
                CHECK_MESSAGE(condition_A(t, xi) == brute::condition_A(t, xi), to_string(t),
                              " xi=", xi);
            }
        }
}

TEST_CASE("oracle classification examples")
{
    CHECK(classify_oracle({2, 4}, 5) ==
          Classification{GeometryKind::RelativelyHyperbolic, Provenance::Oracle});
    CHECK(classify_oracle({3, 0}, 5).kind == GeometryKind::RelativelyHyperbolic);
    CHECK(classify_oracle({3, 0}, 6).kind == GeometryKind::Thick);
    CHECK(classify_oracle({2, 0}, 2).kind == GeometryKind::Hyperbolic);
    CHECK_THROWS_AS(classify_oracle({1, 1}, 1), InvalidArgument);
}

}
