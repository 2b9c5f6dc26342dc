#pragma once

#include "mcg/decomposition.hpp"
#include "mcg/triangulation.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace mcg {

/// Connected normal component with its multiplicity.
struct Component {
    WeightVector weights;
    int mult = 1;

    auto operator<=>(const Component&) const = default;
};

/// Canonical multicurve: components sorted by weight vector, distinct vectors,
/// positive multiplicities.
using Multicurve = std::vector<Component>;

/// Merges equal vectors and sorts.
Multicurve canonical(std::vector<Component> parts);

/// Multicurve with one copy of each given curve.
Multicurve multicurve_of(const std::vector<WeightVector>& curves);

/// Sum of mult * weights. `edges` is needed for the empty multicurve.
WeightVector total_vector(const Multicurve& m, int edges);

/// Parity and corner-arc nonnegativity in every triangle.
/// Throws InvalidArgument on a length mismatch.
bool admissible(const Triangulation& T, const WeightVector& v);

/// A point where the normal multicurve crosses an edge, counted from the tail.
struct EdgePoint {
    int edge;
    int pos;
};

struct TracedCycle {
    WeightVector weights;
    std::vector<EdgePoint> points;
};

/// Connected components of the normal multicurve with coordinates v, each
/// with the edge points it passes through. Throws if v is not admissible.
std::vector<TracedCycle> trace_cycles(const Triangulation& T, const WeightVector& v);

/// Components of v grouped by vector.
Multicurve trace(const Triangulation& T, const WeightVector& v);

/// c equals the link of some vertex (boundary-parallel, or trivial when b=0).
bool is_peripheral(const Triangulation& T, const WeightVector& c);

/// v is a single essential curve: admissible, one component of multiplicity
/// one, not peripheral.
bool is_curve(const Triangulation& T, const WeightVector& v);

/// Geometric intersection zero between all components of a and b: the Haken
/// sum traces back to exactly the union of the two component multisets.
bool disjoint(const Triangulation& T, const Multicurve& a, const Multicurve& b);
bool disjoint(const Triangulation& T, const WeightVector& a, const WeightVector& b);

/// Every curve whose weights are all <= max_weight, in lexicographic order.
std::vector<WeightVector> enumerate_curves(const Triangulation& T, int max_weight);

/// Complement of a multicurve nu, cut along one copy of each class of nu.
class CutComplex {
public:
    CutComplex(const Triangulation& T, const Multicurve& nu);

    const std::vector<PieceSig>& pieces() const { return pieces_; }

    /// Pieces as nodes and curves of nu as edges; realizes the surface.
    GluingPattern as_pattern() const;

    /// Pieces on the two sides of each class of nu, in the order of nu.
    const std::vector<std::pair<int, int>>& curve_sides() const { return curve_sides_; }

    /// Piece containing a vertex (puncture, or the closed-surface vertex).
    int vertex_piece(int v) const { return vertex_piece_[v]; }

    /// Piece containing a curve disjoint from nu; nullopt when c is isotopic to
    /// a component of nu. Throws InvalidArgument when c meets nu or is not a
    /// curve.
    std::optional<int> locate(const WeightVector& c) const;

private:
    Triangulation T_;
    Multicurve nu_;
    WeightVector nu_total_;
    std::vector<PieceSig> pieces_;
    std::vector<std::pair<int, int>> curve_sides_;
    std::vector<int> vertex_piece_;
    std::vector<std::vector<int>> interval_piece_;  // [edge][tail interval]
};

/// Piece multiset of the complement of nu.
std::vector<PieceSig> cut_pieces(const Triangulation& T, const Multicurve& nu);

} // namespace mcg
