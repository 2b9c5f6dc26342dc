#pragma once

#include "mcg/rank_formulas.hpp"
#include "mcg/surface.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mcg {

/// Abstract realization of a cut: pieces are nodes, each cut curve is an edge
/// joining the pieces on its two sides. A loop is a curve with the same piece
/// on both sides.
///
/// A pattern realizes `target` when
///   - every piece uses at most b_i of its boundary circles for edges,
///   - the unused circles number exactly target.b,
///   - the multigraph is connected,
///   - Euler characteristics add up to target.euler().
/// The genus identity g = sum g_i + |edges| - |pieces| + 1 then follows.
struct GluingPattern {
    std::vector<PieceSig> pieces;
    std::vector<std::pair<int, int>> edges;  // (i, j) with i <= j

    std::vector<int> degrees() const;
    int derived_genus() const;
};

/// Returns a description of the first violated realization rule, or nullopt.
std::optional<std::string> pattern_violation(const GluingPattern& pattern, SurfaceSig target);

struct CutDecomposition {
    GluingPattern pattern;

    std::vector<int> piece_complexities() const;
    int size() const { return static_cast<int>(pattern.pieces.size()); }
};

/// Realizability of a multiset of essential pieces as a cut of `target`.
///
/// One piece: it must equal the target. Two or more: Euler characteristics
/// add up, each piece has a boundary circle, e = (sum b_i - b)/2 is an integer
/// with e >= m-1. Those conditions let a spanning tree with degrees in
/// [1, b_i] be chosen first and the leftover circles be paired arbitrarily
/// (loops and parallel edges included). No two cut curves end up isotopic,
/// because no piece is an annulus.
bool gluing_feasible(std::span<const PieceSig> pieces, SurfaceSig target);

/// Explicit certificate for gluing_feasible; nullopt exactly when infeasible.
std::optional<GluingPattern> build_gluing_pattern(std::span<const PieceSig> pieces,
                                                  SurfaceSig target);

/// Builds a pattern that contains every edge in `required` (in addition to
/// whatever the boundary budget forces). Requires at least two pieces.
std::optional<GluingPattern> build_pattern_with_edges(std::span<const PieceSig> pieces,
                                                      SurfaceSig target,
                                                      std::span<const std::pair<int, int>> required);

/// Visits every realizable multiset of pieces (canonical non-decreasing
/// (g,b) order, the uncut surface first) whose pieces all have complexity
/// >= min_piece_complexity and whose count is <= max_pieces. Each multiset
/// is reported once together with one witnessing pattern.
///
/// Termination: every piece has Euler characteristic <= -1, so at most
/// 2g-2+b pieces fit, piece genus is at most g and piece boundary at most
/// 2g+b-2g_i.
void for_each_decomposition(SurfaceSig target, int min_piece_complexity, int max_pieces,
                            const std::function<void(const CutDecomposition&)>& visit);

std::vector<CutDecomposition> enumerate_decompositions(SurfaceSig target,
                                                       int min_piece_complexity, int max_pieces);

/// Brute-force maximum number of pieces of complexity >= xi.
int mu_oracle(SurfaceSig target, int xi);

/// A pair of disjoint connected essential subsurfaces of complexity >= xi.
/// Any such pair grows into a two-piece cut by absorbing each complementary
/// component into a neighbour, so a feasible two-piece cut is searched.
bool condition_A(SurfaceSig target, int xi);
std::optional<GluingPattern> condition_A_witness(SurfaceSig target, int xi);

/// True iff there is no counterexample to "disjoint co-connected Y, Z of
/// complexity >= xi are complementary".
///
/// A counterexample cuts the surface into Y, Z and extra pieces R_1..R_j with
/// the pattern still connected after deleting Y and after deleting Z. The
/// R's split into clusters (components after deleting Y and Z); every
/// cluster touches both Y and Z, so all clusters but one can be merged into
/// Y without breaking either co-connectivity. Hence it suffices to search
/// three pieces Y, Z, R with edges Y-R and Z-R.
bool condition_B(SurfaceSig target, int xi);

/// Pieces ordered (Y, Z, R).
std::optional<GluingPattern> condition_B_counterexample(SurfaceSig target, int xi);

/// Hyperbolic iff not A; relatively hyperbolic iff A and B; thick otherwise,
/// all at the witness threshold of k.
Classification classify_oracle(SurfaceSig target, int k);

} // namespace mcg
