#include "doctest.h"

#include "mcg/rank_formulas.hpp"

using namespace mcg;

namespace {

// Smallest n with 3n >= 2x+1.
int ceil_by_search(int x)
{
    int n = -100;
    while (3 * n < 2 * x + 1)
        ++n;
    return n;
}

}

TEST_SUITE("rank_formulas") {

TEST_CASE("a(x)")
{
    CHECK(a_of(1) == 1);
    CHECK(a_of(2) == 2);
    CHECK(a_of(4) == 3);
    for (int x = -20; x <= 40; ++x)
        CHECK(a_of(x) == ceil_by_search(x));
}

TEST_CASE("mu formula")
{
    CHECK(mu_formula({2, 0}, 3) == 1);
    CHECK(mu_formula({2, 0}, 1) == 2);
    CHECK(mu_formula({0, 7}, 1) == 2);
    CHECK(mu_formula({2, 0}, 4) == 0);
    CHECK_THROWS_AS(mu_formula({2, 0}, 0), InvalidArgument);
    CHECK_THROWS_AS(mu_formula({2, 0}, -1), InvalidArgument);
}

TEST_CASE("closed exception")
{
    for (int g = 2; g <= 10; ++g)
        CHECK(mu_formula({g, 0}, 3 * g - 3) == 1);
}

TEST_CASE("quasi-flat rank")
{
    CHECK(quasiflat_rank({2, 0}, 3) == 2);
    CHECK(quasiflat_rank({0, 5}, 2) == 1);
    CHECK(quasiflat_rank({4, 0}, 1) == 1);
    CHECK_THROWS_AS(quasiflat_rank({2, 0}, 0), InvalidArgument);
    CHECK_THROWS_AS(quasiflat_rank({2, 0}, 4), InvalidArgument);
    CHECK_THROWS_AS(quasiflat_rank({0, 3}, 1), InvalidArgument);
}

TEST_CASE("witness threshold")
{
    CHECK(witness_threshold({0, 5}, 2) == 1);
    CHECK(witness_threshold({3, 0}, 5) == 2);
    CHECK(witness_threshold({2, 2}, 4) == 2);
    CHECK_THROWS_AS(witness_threshold({2, 2}, 6), InvalidArgument);
}

TEST_CASE("rank identity and endpoints")
{
    for (int g = 0; g <= 8; ++g)
        for (int b = 0; b <= 8; ++b) {
            SurfaceSig s{g, b};
            const int xi0 = s.complexity();
            if (xi0 < 1)
                continue;
            for (int k = 1; k <= xi0; ++k) {
                if (b == 0 && k == 1)
                    CHECK(quasiflat_rank(s, k) == 1);
                else
                    CHECK(quasiflat_rank(s, k) == mu_formula(s, 3 * g - 2 + b - k));
            }
            if (xi0 >= 2)
                CHECK(quasiflat_rank(s, xi0) == (3 * g - 2 + b) / 2);
            if (b >= 1)
                CHECK(quasiflat_rank(s, 1) == 1);
        }
}

TEST_CASE("mu is non-increasing in xi")
{
    for (int g = 0; g <= 8; ++g)
        for (int b = 0; b <= 8; ++b) {
            SurfaceSig s{g, b};
            for (int xi = 1; xi <= s.complexity() + 2; ++xi)
                CHECK(mu_formula(s, xi + 1) <= mu_formula(s, xi));
        }
}

TEST_CASE("table rows")
{
    CHECK(in_relhyp_table({2, 4}, 5));
    CHECK(in_relhyp_table({2, 0}, 3));
    CHECK_FALSE(in_relhyp_table({2, 0}, 4));  // (3g+2)/2 = 4 exceeds complexity 3
    CHECK(in_relhyp_table({3, 0}, 6));
    CHECK(in_relhyp_table({3, 2}, 6));
    CHECK(in_relhyp_table({3, 3}, 6));
    CHECK_FALSE(in_relhyp_table({3, 1}, 6));
    CHECK_FALSE(in_relhyp_table({2, 3}, 4));
}

TEST_CASE("classification from the formula")
{
    CHECK(classify_paper({2, 4}, 5) ==
          Classification{GeometryKind::RelativelyHyperbolic, Provenance::Formula});
    CHECK(classify_paper({2, 0}, 3).kind == GeometryKind::RelativelyHyperbolic);
    CHECK(classify_paper({2, 0}, 2).kind == GeometryKind::Hyperbolic);
    CHECK_THROWS_AS(classify_paper({1, 1}, 1), InvalidArgument);
    CHECK_THROWS_AS(classify_paper({0, 4}, 1), InvalidArgument);
    CHECK(to_string(GeometryKind::Thick) == "Thick");
    CHECK(to_string(Provenance::Oracle) == "oracle");
}

TEST_CASE("hyperbolic means rank one, relatively hyperbolic means rank two")
{
    for (int g = 0; g <= 8; ++g)
        for (int b = 0; b <= 8; ++b) {
            SurfaceSig s{g, b};
            if (s.complexity() < 2)
                continue;
            for (int k = 1; k <= s.complexity(); ++k) {
                const auto c = classify_paper(s, k);
                CHECK(c.source == Provenance::Formula);
                CHECK((c.kind == GeometryKind::Hyperbolic) == (quasiflat_rank(s, k) == 1));
                if (c.kind == GeometryKind::RelativelyHyperbolic && !(g % 2 == 1 && b == 0))
                    CHECK(quasiflat_rank(s, k) == 2);
            }
        }
}

}
