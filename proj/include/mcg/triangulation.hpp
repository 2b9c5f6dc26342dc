#pragma once

#include "mcg/surface.hpp"

#include <array>
#include <vector>

namespace mcg {

/// One side of a triangle. Side j of a triangle runs from corner j to corner
/// j+1; flag 0 means it traverses the edge tail -> head, flag 1 head -> tail.
struct SideRef {
    int edge = 0;
    int flag = 0;

    bool operator==(const SideRef&) const = default;
};

using Triangle = std::array<SideRef, 3>;
using WeightVector = std::vector<int>;

/// Triangulated model of Sigma_{g,b}. For b >= 1 every vertex is a puncture
/// standing for one boundary component; for b = 0 there is one genuine vertex.
class Triangulation {
public:
    /// Validates the gluing: each edge is used by exactly two sides with
    /// opposite flags, and the vertex count matches the signature.
    Triangulation(SurfaceSig sig, std::vector<Triangle> triangles);

    SurfaceSig surface() const { return sig_; }
    const std::vector<Triangle>& triangles() const { return triangles_; }
    int triangle_count() const { return static_cast<int>(triangles_.size()); }
    int edge_count() const { return edge_count_; }
    int vertex_count() const { return static_cast<int>(links_.size()); }

    /// Vertices are punctures iff b >= 1.
    bool ideal() const { return sig_.b > 0; }

    /// Vertex at corner c of triangle t.
    int corner_vertex(int t, int c) const { return corner_vertex_[3 * t + c]; }
    int tail_vertex(int e) const { return end_vertex_[2 * e]; }
    int head_vertex(int e) const { return end_vertex_[2 * e + 1]; }

    /// Per vertex: how many ends of each edge sit at it. This is the normal
    /// vector of the small loop around the vertex.
    const std::vector<WeightVector>& vertex_links() const { return links_; }

    /// (triangle, side) pairs using edge e; the flag-0 use comes first.
    std::array<std::pair<int, int>, 2> edge_uses(int e) const { return uses_[e]; }

private:
    SurfaceSig sig_;
    std::vector<Triangle> triangles_;
    int edge_count_ = 0;
    std::vector<int> corner_vertex_;
    std::vector<int> end_vertex_;
    std::vector<WeightVector> links_;
    std::vector<std::array<std::pair<int, int>, 2>> uses_;
};

/// Canonical triangulation:
///   g = 0, b >= 4: two copies of a b-gon glued along the boundary, each fanned
///                  from its first vertex.
///   g >= 1, b >= 1: the 4g-gon a1 b1 a1' b1' ... fanned from its first vertex,
///                  then b-1 stellar subdivisions of triangle 0.
///   g >= 2, b = 0: the same 4g-gon; its single vertex is a genuine point.
/// Throws InvalidArgument for signatures that are not graph-admissible.
Triangulation generate_triangulation(SurfaceSig sig);

} // namespace mcg
