#pragma once

#include "mcg/normal_curves.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcg {

/// No completion of a multicurve exists inside the finite curve inventory.
class IncompleteInventory : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sorted indices into an inventory; a multicurve of distinct classes.
using Vertex = std::vector<int>;

/// Curves of weight <= max_weight on the canonical triangulation, in
/// lexicographic order, with their pairwise disjointness.
class Inventory {
public:
    /// Rejects b = 0: normal forms on the one-vertex closed model are not
    /// unique per isotopy class.
    Inventory(SurfaceSig sig, int max_weight);

    /// Explicit inventory; every entry must be a curve. Stored sorted and
    /// deduplicated; max_weight() reports the largest weight present.
    Inventory(SurfaceSig sig, std::vector<WeightVector> curves);

    SurfaceSig surface() const { return T_.surface(); }
    int complexity() const { return T_.surface().complexity(); }
    int max_weight() const { return max_weight_; }
    const Triangulation& triangulation() const { return T_; }
    const std::vector<WeightVector>& curves() const { return curves_; }
    int size() const { return static_cast<int>(curves_.size()); }

    bool disjoint(int a, int b) const { return disjoint_[a][b] != 0; }
    bool pairwise_disjoint(const Vertex& v) const;
    int index_of(const WeightVector& c) const;

    Multicurve multicurve(const Vertex& v) const;

    /// Cut complex of the multicurve v, cached.
    const CutComplex& cut(const Vertex& v) const;

private:
    void fill_disjointness();

    Triangulation T_;
    int max_weight_;
    std::vector<WeightVector> curves_;
    std::vector<std::vector<char>> disjoint_;
    mutable std::map<Vertex, std::unique_ptr<CutComplex>> cut_cache_;
};

/// All k-multicurves built from inventory curves, in lexicographic order of
/// index lists. k may equal the complexity (pants decompositions).
std::vector<Vertex> enumerate_multicurves(const Inventory& inv, int k);

enum class GraphKind { Multicurve, Interpolating };

struct MulticurveGraphInstance {
    GraphKind kind = GraphKind::Multicurve;
    int param = 0;  // k or xi
    SurfaceSig surface;
    int max_weight = 0;
    std::vector<WeightVector> curves;  // the inventory
    std::vector<Vertex> vertices;
    std::vector<std::vector<int>> adjacency;  // sorted neighbour lists

    int vertex_index(const Vertex& v) const;  // -1 if absent
    std::size_t edge_count() const;
};

Vertex intersection(const Vertex& a, const Vertex& b);

/// k-multicurve graph edge: distinct, k-1 shared curves, remaining two
/// curves disjoint. Requires 1 <= k <= complexity-1.
bool is_edge_multicurve(const Inventory& inv, int k, const Vertex& a, const Vertex& b);

/// Complexity-xi graph edge: distinct pants decompositions whose differing
/// curves lie in pieces of the complement of their common part with total
/// complexity <= xi. Requires 1 <= xi.
bool is_edge_interpolating(const Inventory& inv, int xi, const Vertex& a, const Vertex& b);

/// Multicurve(k) needs 1 <= k <= complexity-1; Interpolating(xi) needs
/// 1 <= xi <= complexity-1.
MulticurveGraphInstance build_graph(const Inventory& inv, GraphKind kind, int param);

/// Lexicographically least pants decomposition of inventory curves
/// containing alpha. Throws IncompleteInventory when there is none.
Vertex extend_to_pants(const Inventory& inv, const Vertex& alpha);

/// The quasi-isometry from the k-multicurve graph to the complexity
/// (xi0-k) graph.
Vertex map_I(const Inventory& inv, int k, const Vertex& alpha);

/// ext1 == ext2 or they are adjacent in the complexity (xi0-k) graph.
/// Throws InvalidArgument unless both are pants decompositions containing alpha.
bool verify_extension_lemma(const Inventory& inv, int k, const Vertex& alpha, const Vertex& ext1,
                            const Vertex& ext2);

/// Path I(alpha) - P - I(beta) where P extends alpha u beta; repeated
/// vertices are collapsed. `valid` records that every step is an edge.
struct EdgeCertificate {
    std::vector<Vertex> path;
    bool valid = false;

    int length() const { return static_cast<int>(path.size()) - 1; }
};

/// Requires is_edge_multicurve(alpha, beta). Throws IncompleteInventory.
EdgeCertificate verify_edge_upper_bound(const Inventory& inv, int k, const Vertex& alpha,
                                        const Vertex& beta);

/// Lift of a path P_0..P_n in the complexity (xi0-k) graph, with P_0 containing
/// alpha and P_n containing beta, to a walk alpha = w_0, ..., beta in the
/// k-multicurve graph.
struct PathLift {
    std::vector<Vertex> path;
    std::vector<Vertex> gammas;  // gamma_i in P_{i-1} n P_i, i = 1..n
    std::vector<Vertex> walk;
    std::vector<int> leg_steps;  // n+1 legs
    int c_k = 0;

    int total_steps() const { return static_cast<int>(walk.size()) - 1; }
    /// Every leg <= C_k, every walk step an edge, total <= (n+1) C_k.
    bool within_bounds(const Inventory& inv, int k) const;
};

/// Throws InvalidArgument on a path whose steps are not edges or whose ends
/// do not contain alpha and beta.
PathLift lift_path(const Inventory& inv, int k, const Vertex& alpha, const Vertex& beta,
                   const std::vector<Vertex>& path);

std::optional<int> bfs_distance(const MulticurveGraphInstance& G, int u, int v);

/// A shortest path as vertex indices, empty when unreachable.
std::vector<int> bfs_path(const MulticurveGraphInstance& G, int u, int v);

struct WitnessReport {
    PieceSig piece;
    int threshold = 0;
    bool threshold_verdict = false;  // complexity(piece) >= threshold
    bool inventory_verdict = false;  // every vertex meets the piece
    std::optional<Vertex> avoiding_vertex;
    std::size_t vertices_checked = 0;
};

/// Does every vertex in `vertices` meet piece `piece_index` of the complement
/// of nu? Components meet the piece when they cross a curve of nu bounding it,
/// or lie inside it.
WitnessReport witness_empirical_check(const Inventory& inv, int k, const Vertex& nu,
                                      int piece_index, const std::vector<Vertex>& vertices);

} // namespace mcg
