#include "mcg/normal_curves.hpp"

#include <algorithm>
#include <numeric>

namespace mcg {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(b)] = find(a); }
};

// Normal arcs cut a triangle into a central region and, around corner c,
// layers 0..x_c-1 (layer 0 touches the corner).
struct TriangleRegions {
    int w[3];
    int x[3];
    int base;  // global id of the central region

    int layer(int c, int i) const
    {
        int off = 1;
        for (int k = 0; k < c; ++k)
            off += x[k];
        return base + off + i;
    }
    int count() const { return 1 + x[0] + x[1] + x[2]; }

    // Region next to interval i (counted from the start corner) of side j.
    int interval_region(int j, int i) const
    {
        const int s = j, s1 = (j + 1) % 3;
        if (i < x[s])
            return layer(s, i);
        if (w[j] - i < x[s1])
            return layer(s1, w[j] - i);
        return base;
    }
};

} // namespace

CutComplex::CutComplex(const Triangulation& T, const Multicurve& nu) : T_(T)
{
    const int E = T.edge_count();
    for (const auto& c : nu) {
        if (!is_curve(T, c.weights))
            throw InvalidArgument("cut multicurve has a component that is not a curve");
        nu_.push_back({c.weights, 1});
    }
    nu_ = canonical(nu_);
    for (std::size_t i = 0; i < nu_.size(); ++i)
        for (std::size_t j = i + 1; j < nu_.size(); ++j)
            if (!disjoint(T, nu_[i].weights, nu_[j].weights))
                throw InvalidArgument("cut multicurve has intersecting components");
    nu_total_ = total_vector(nu_, E);
    const WeightVector& v = nu_total_;

    const int nt = T.triangle_count();
    std::vector<TriangleRegions> regions(nt);
    int region_count = 0;
    for (int t = 0; t < nt; ++t) {
        auto& r = regions[t];
        for (int j = 0; j < 3; ++j)
            r.w[j] = v[T.triangles()[t][j].edge];
        for (int c = 0; c < 3; ++c)
            r.x[c] = (r.w[c] + r.w[(c + 2) % 3] - r.w[(c + 1) % 3]) / 2;
        r.base = region_count;
        region_count += r.count();
    }

    // Glue regions across edge intervals.
    UnionFind uf(region_count);
    auto side_interval_region = [&](int t, int j, int tail_interval) {
        const auto s = T.triangles()[t][j];
        const int i = s.flag == 0 ? tail_interval : v[s.edge] - tail_interval;
        return regions[t].interval_region(j, i);
    };
    for (int e = 0; e < E; ++e) {
        const auto uses = T.edge_uses(e);
        for (int q = 0; q <= v[e]; ++q)
            uf.unite(side_interval_region(uses[0].first, uses[0].second, q),
                     side_interval_region(uses[1].first, uses[1].second, q));
    }
    std::vector<int> piece_of_root(region_count, -1);
    int piece_count = 0;
    for (int r = 0; r < region_count; ++r) {
        int root = uf.find(r);
        if (piece_of_root[root] < 0)
            piece_of_root[root] = piece_count++;
    }
    auto piece_of_region = [&](int r) { return piece_of_root[uf.find(r)]; };

    std::vector<int> chi(piece_count, 0), boundary(piece_count, 0);
    for (int r = 0; r < region_count; ++r)
        ++chi[piece_of_region(r)];

    interval_piece_.assign(E, {});
    for (int e = 0; e < E; ++e) {
        const auto use = T.edge_uses(e)[0];
        for (int q = 0; q <= v[e]; ++q) {
            int p = piece_of_region(side_interval_region(use.first, use.second, q));
            interval_piece_[e].push_back(p);
            --chi[p];
        }
    }

    // Each curve point splits into copy 2k (facing tail interval pos) and
    // copy 2k+1 (facing tail interval pos+1).
    std::vector<int> offset(E + 1, 0);
    for (int e = 0; e < E; ++e)
        offset[e + 1] = offset[e] + v[e];
    const int points = offset[E];
    UnionFind circles(2 * points);
    for (int e = 0; e < E; ++e)
        for (int pos = 0; pos < v[e]; ++pos) {
            ++chi[interval_piece_[e][pos]];
            ++chi[interval_piece_[e][pos + 1]];
        }

    for (int t = 0; t < nt; ++t) {
        const auto& tri = T.triangles()[t];
        const auto& r = regions[t];
        // Copy of the point at side position side_pos of side j on the side of region reg.
        auto copy_facing = [&](int j, int side_pos, int reg) {
            const auto s = tri[j];
            const int side_iv = r.interval_region(j, side_pos) == reg ? side_pos : side_pos + 1;
            const int tail_iv = s.flag == 0 ? side_iv : r.w[j] - side_iv;
            const int tail_pos = s.flag == 0 ? side_pos : r.w[j] - 1 - side_pos;
            return 2 * (offset[s.edge] + tail_pos) + (tail_iv == tail_pos ? 0 : 1);
        };
        for (int c = 0; c < 3; ++c) {
            const int prev = (c + 2) % 3;
            for (int i = 0; i < r.x[c]; ++i) {
                const int inner = r.layer(c, i);
                const int outer = i + 1 < r.x[c] ? r.layer(c, i + 1) : r.base;
                for (int reg : {inner, outer}) {
                    circles.unite(copy_facing(c, i, reg),
                                  copy_facing(prev, r.w[prev] - 1 - i, reg));
                    --chi[piece_of_region(reg)];
                }
            }
        }
    }

    vertex_piece_.assign(T.vertex_count(), -1);
    for (int t = 0; t < nt; ++t)
        for (int c = 0; c < 3; ++c) {
            const auto& r = regions[t];
            const int reg = r.x[c] > 0 ? r.layer(c, 0) : r.base;
            vertex_piece_[T.corner_vertex(t, c)] = piece_of_region(reg);
        }
    for (int vtx = 0; vtx < T.vertex_count(); ++vtx) {
        if (T.ideal())
            ++boundary[vertex_piece_[vtx]];
        else
            ++chi[vertex_piece_[vtx]];
    }

    auto copy_piece = [&](int copy) {
        const int pt = copy / 2;
        const int e = static_cast<int>(std::upper_bound(offset.begin(), offset.end(), pt) -
                                       offset.begin()) - 1;
        return interval_piece_[e][pt - offset[e] + copy % 2];
    };
    for (int copy = 0; copy < 2 * points; ++copy)
        if (circles.find(copy) == copy)
            ++boundary[copy_piece(copy)];

    for (int p = 0; p < piece_count; ++p) {
        const int twice_g = 2 - chi[p] - boundary[p];
        if (twice_g < 0 || twice_g % 2 != 0)
            throw std::logic_error("cut complex produced an impossible piece");
        pieces_.push_back({twice_g / 2, boundary[p]});
    }

    for (const auto& c : nu_) {
        int e = 0;
        while (c.weights[e] == 0)
            ++e;
        // Locate this component's first point on edge e in the traced sum.
        for (const auto& cyc : trace_cycles(T, v)) {
            if (cyc.weights != c.weights)
                continue;
            for (auto pt : cyc.points)
                if (pt.edge == e) {
                    curve_sides_.emplace_back(interval_piece_[e][pt.pos],
                                              interval_piece_[e][pt.pos + 1]);
                    break;
                }
            break;
        }
    }
}

GluingPattern CutComplex::as_pattern() const
{
    GluingPattern pattern;
    pattern.pieces = pieces_;
    for (auto [a, b] : curve_sides_)
        pattern.edges.emplace_back(std::min(a, b), std::max(a, b));
    std::sort(pattern.edges.begin(), pattern.edges.end());
    return pattern;
}

std::optional<int> CutComplex::locate(const WeightVector& c) const
{
    if (!is_curve(T_, c))
        throw InvalidArgument("locate expects a single essential curve");
    for (const auto& comp : nu_)
        if (comp.weights == c)
            return std::nullopt;
    if (!disjoint(T_, nu_, Multicurve{{c, 1}}))
        throw InvalidArgument("curve meets the cut multicurve");
    const int E = T_.edge_count();
    WeightVector sum = nu_total_;
    for (int e = 0; e < E; ++e)
        sum[e] += c[e];
    const auto cycles = trace_cycles(T_, sum);
    auto mine = std::find_if(cycles.begin(), cycles.end(),
                             [&](const TracedCycle& cyc) { return cyc.weights == c; });
    const EdgePoint here = mine->points.front();
    // Points of nu before this one on the same edge give the interval index.
    int before = 0;
    for (auto it = cycles.begin(); it != cycles.end(); ++it) {
        if (it == mine)
            continue;
        for (auto pt : it->points)
            if (pt.edge == here.edge && pt.pos < here.pos)
                ++before;
    }
    return interval_piece_[here.edge][before];
}

} // namespace mcg
