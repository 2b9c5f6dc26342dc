#include "mcg/triangulation.hpp"

#include <algorithm>
#include <numeric>

namespace mcg {

namespace {

int find_root(std::vector<int>& parent, int x)
{
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

std::vector<Triangle> doubled_polygon(int b)
{
    // e_j = j runs Q_j -> Q_{j+1}; front diagonals f_t and back diagonals h_t
    // run Q_0 -> Q_t for 2 <= t <= b-2.
    auto f = [b](int t) { return b + (t - 2); };
    auto h = [b](int t) { return b + (b - 3) + (t - 2); };
    std::vector<Triangle> tris;
    for (int t = 1; t <= b - 2; ++t) {
        Triangle front{SideRef{t == 1 ? 0 : f(t), 0}, SideRef{t, 0},
                       t + 1 == b - 1 ? SideRef{b - 1, 0} : SideRef{f(t + 1), 1}};
        tris.push_back(front);
    }
    for (int t = 1; t <= b - 2; ++t) {
        Triangle back{t + 1 == b - 1 ? SideRef{b - 1, 1} : SideRef{h(t + 1), 0}, SideRef{t, 1},
                      t == 1 ? SideRef{0, 1} : SideRef{h(t), 1}};
        tris.push_back(back);
    }
    return tris;
}

std::vector<Triangle> fanned_4g_gon(int g)
{
    // Polygon side s_j runs P_j -> P_{j+1}. Block i reads a_i b_i a_i^-1 b_i^-1
    // with a_i = edge 2i, b_i = edge 2i+1. Diagonal d_t = P_0 -> P_t.
    const int n = 4 * g;
    auto polygon_side = [](int j) {
        const int block = j / 4, pos = j % 4;
        return SideRef{2 * block + (pos % 2), pos < 2 ? 0 : 1};
    };
    auto d = [g](int t) { return 2 * g + (t - 2); };
    std::vector<Triangle> tris;
    for (int t = 1; t <= n - 2; ++t) {
        Triangle tri{t == 1 ? polygon_side(0) : SideRef{d(t), 0}, polygon_side(t),
                     t + 1 == n - 1 ? polygon_side(n - 1) : SideRef{d(t + 1), 1}};
        tris.push_back(tri);
    }
    return tris;
}

// Adds a vertex N inside triangle t: (c0,c1,c2) becomes (c0,c1,N), (c1,c2,N),
// (c2,c0,N) with new edges r_c = c -> N.
void stellar_subdivide(std::vector<Triangle>& tris, int& edge_count, int t)
{
    const Triangle old = tris[t];
    const int r[3] = {edge_count, edge_count + 1, edge_count + 2};
    edge_count += 3;
    Triangle parts[3];
    for (int c = 0; c < 3; ++c) {
        const int c1 = (c + 1) % 3;
        parts[c] = Triangle{old[c], SideRef{r[c1], 0}, SideRef{r[c], 1}};
    }
    tris[t] = parts[0];
    tris.push_back(parts[1]);
    tris.push_back(parts[2]);
}

int count_edges(const std::vector<Triangle>& tris)
{
    int max_edge = -1;
    for (const auto& tri : tris)
        for (auto s : tri)
            max_edge = std::max(max_edge, s.edge);
    return max_edge + 1;
}

} // namespace

Triangulation::Triangulation(SurfaceSig sig, std::vector<Triangle> triangles)
    : sig_(sig), triangles_(std::move(triangles))
{
    edge_count_ = count_edges(triangles_);
    const int T = triangle_count(), E = edge_count_;
    if (2 * E != 3 * T)
        throw InvalidArgument("triangulation has " + std::to_string(T) + " triangles but " +
                              std::to_string(E) + " edges");
    uses_.assign(E, {std::pair{-1, -1}, std::pair{-1, -1}});
    for (int t = 0; t < T; ++t)
        for (int j = 0; j < 3; ++j) {
            const auto s = triangles_[t][j];
            if (s.edge < 0 || (s.flag != 0 && s.flag != 1))
                throw InvalidArgument("malformed side reference");
            auto& slot = uses_[s.edge][s.flag];
            if (slot.first >= 0)
                throw InvalidArgument("edge " + std::to_string(s.edge) +
                                      " used twice with the same orientation");
            slot = {t, j};
        }
    for (int e = 0; e < E; ++e)
        if (uses_[e][0].first < 0 || uses_[e][1].first < 0)
            throw InvalidArgument("edge " + std::to_string(e) + " is not used twice");

    // Endpoint 2e is the tail of e, 2e+1 the head.
    std::vector<int> parent(2 * E);
    std::iota(parent.begin(), parent.end(), 0);
    auto start_of = [](SideRef s) { return 2 * s.edge + s.flag; };
    auto end_of = [](SideRef s) { return 2 * s.edge + 1 - s.flag; };
    for (const auto& tri : triangles_)
        for (int c = 0; c < 3; ++c) {
            int a = find_root(parent, start_of(tri[c]));
            int b = find_root(parent, end_of(tri[(c + 2) % 3]));
            parent[b] = a;
        }
    std::vector<int> label(2 * E, -1);
    int vertices = 0;
    end_vertex_.resize(2 * E);
    for (int x = 0; x < 2 * E; ++x) {
        int r = find_root(parent, x);
        if (label[r] < 0)
            label[r] = vertices++;
        end_vertex_[x] = label[r];
    }
    corner_vertex_.resize(3 * T);
    for (int t = 0; t < T; ++t)
        for (int c = 0; c < 3; ++c)
            corner_vertex_[3 * t + c] = end_vertex_[start_of(triangles_[t][c])];
    links_.assign(vertices, WeightVector(E, 0));
    for (int x = 0; x < 2 * E; ++x)
        ++links_[end_vertex_[x]][x / 2];

    if (vertices - E + T != 2 - 2 * sig_.g)
        throw InvalidArgument("triangulation does not have the Euler characteristic of genus " +
                              std::to_string(sig_.g));
    if (sig_.b > 0 && vertices != sig_.b)
        throw InvalidArgument("triangulation has " + std::to_string(vertices) +
                              " punctures, expected " + std::to_string(sig_.b));
}

Triangulation generate_triangulation(SurfaceSig sig)
{
    if (!sig.graph_admissible())
        throw InvalidArgument("no triangulated model for " + to_string(sig) +
                              " (complexity must be >= 1)");
    if (sig.g == 0)
        return Triangulation(sig, doubled_polygon(sig.b));
    auto tris = fanned_4g_gon(sig.g);
    int edges = count_edges(tris);
    for (int extra = 1; extra < sig.b; ++extra)
        stellar_subdivide(tris, edges, 0);
    return Triangulation(sig, std::move(tris));
}

} // namespace mcg
