#include "mcg/normal_curves.hpp"

#include <algorithm>
#include <map>

namespace mcg {

namespace {

void require_length(const Triangulation& T, const WeightVector& v)
{
    if (static_cast<int>(v.size()) != T.edge_count())
        throw InvalidArgument("weight vector has length " + std::to_string(v.size()) +
                              ", triangulation has " + std::to_string(T.edge_count()) +
                              " edges");
}

bool triangle_ok(int w0, int w1, int w2)
{
    return (w0 + w1 + w2) % 2 == 0 && w0 + w1 >= w2 && w1 + w2 >= w0 && w2 + w0 >= w1;
}

} // namespace

Multicurve canonical(std::vector<Component> parts)
{
    std::map<WeightVector, int> merged;
    for (auto& p : parts)
        if (p.mult > 0)
            merged[p.weights] += p.mult;
    Multicurve out;
    for (auto& [w, m] : merged)
        out.push_back({w, m});
    return out;
}

Multicurve multicurve_of(const std::vector<WeightVector>& curves)
{
    std::vector<Component> parts;
    for (const auto& c : curves)
        parts.push_back({c, 1});
    return canonical(std::move(parts));
}

WeightVector total_vector(const Multicurve& m, int edges)
{
    WeightVector v(edges, 0);
    for (const auto& c : m)
        for (int e = 0; e < edges; ++e)
            v[e] += c.mult * c.weights.at(e);
    return v;
}

bool admissible(const Triangulation& T, const WeightVector& v)
{
    require_length(T, v);
    for (int e : v)
        if (e < 0)
            return false;
    for (const auto& tri : T.triangles())
        if (!triangle_ok(v[tri[0].edge], v[tri[1].edge], v[tri[2].edge]))
            return false;
    return true;
}

std::vector<TracedCycle> trace_cycles(const Triangulation& T, const WeightVector& v)
{
    if (!admissible(T, v))
        throw InvalidArgument("weight vector is not admissible");
    const int E = T.edge_count();
    std::vector<int> offset(E + 1, 0);
    for (int e = 0; e < E; ++e)
        offset[e + 1] = offset[e] + v[e];
    const int n = offset[E];

    // Each point meets one arc in each of the two triangles on its edge.
    std::vector<int> nbr(2 * n, -1);
    auto link = [&](int a, int b) {
        (nbr[2 * a] < 0 ? nbr[2 * a] : nbr[2 * a + 1]) = b;
        (nbr[2 * b] < 0 ? nbr[2 * b] : nbr[2 * b + 1]) = a;
    };
    for (const auto& tri : T.triangles()) {
        int w[3], x[3];
        for (int j = 0; j < 3; ++j)
            w[j] = v[tri[j].edge];
        for (int c = 0; c < 3; ++c)
            x[c] = (w[c] + w[(c + 2) % 3] - w[(c + 1) % 3]) / 2;
        auto point = [&](int j, int side_pos) {
            const auto s = tri[j];
            return offset[s.edge] + (s.flag == 0 ? side_pos : w[j] - 1 - side_pos);
        };
        for (int c = 0; c < 3; ++c) {
            const int prev = (c + 2) % 3;
            for (int i = 0; i < x[c]; ++i)
                link(point(c, i), point(prev, w[prev] - 1 - i));
        }
    }

    std::vector<int> edge_of(n);
    for (int e = 0; e < E; ++e)
        for (int p = offset[e]; p < offset[e + 1]; ++p)
            edge_of[p] = e;
    std::vector<bool> seen(n, false);
    std::vector<TracedCycle> cycles;
    for (int start = 0; start < n; ++start) {
        if (seen[start])
            continue;
        TracedCycle cyc;
        cyc.weights.assign(E, 0);
        int prev = -1, cur = start;
        while (!seen[cur]) {
            seen[cur] = true;
            ++cyc.weights[edge_of[cur]];
            cyc.points.push_back({edge_of[cur], cur - offset[edge_of[cur]]});
            int next = nbr[2 * cur] != prev ? nbr[2 * cur] : nbr[2 * cur + 1];
            // A two-point cycle has both neighbours equal; either works.
            prev = cur;
            cur = next;
        }
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

Multicurve trace(const Triangulation& T, const WeightVector& v)
{
    std::vector<Component> parts;
    for (auto& cyc : trace_cycles(T, v))
        parts.push_back({std::move(cyc.weights), 1});
    return canonical(std::move(parts));
}

bool is_peripheral(const Triangulation& T, const WeightVector& c)
{
    require_length(T, c);
    const auto& links = T.vertex_links();
    return std::find(links.begin(), links.end(), c) != links.end();
}

bool is_curve(const Triangulation& T, const WeightVector& v)
{
    if (!admissible(T, v))
        return false;
    if (std::all_of(v.begin(), v.end(), [](int x) { return x == 0; }))
        return false;
    auto parts = trace(T, v);
    return parts.size() == 1 && parts[0].mult == 1 && !is_peripheral(T, v);
}

bool disjoint(const Triangulation& T, const Multicurve& a, const Multicurve& b)
{
    const int E = T.edge_count();
    WeightVector sum = total_vector(a, E);
    const WeightVector vb = total_vector(b, E);
    for (int e = 0; e < E; ++e)
        sum[e] += vb[e];
    std::vector<Component> united(a.begin(), a.end());
    united.insert(united.end(), b.begin(), b.end());
    return trace(T, sum) == canonical(std::move(united));
}

bool disjoint(const Triangulation& T, const WeightVector& a, const WeightVector& b)
{
    return disjoint(T, Multicurve{{a, 1}}, Multicurve{{b, 1}});
}

std::vector<WeightVector> enumerate_curves(const Triangulation& T, int max_weight)
{
    if (max_weight < 1)
        throw InvalidArgument("max weight must be >= 1");
    const int E = T.edge_count();
    // Triangles become checkable once their largest edge id is assigned.
    std::vector<std::vector<int>> closes(E);
    for (int t = 0; t < T.triangle_count(); ++t) {
        const auto& tri = T.triangles()[t];
        closes[std::max({tri[0].edge, tri[1].edge, tri[2].edge})].push_back(t);
    }
    std::vector<WeightVector> out;
    WeightVector v(E, 0);
    auto assign = [&](auto&& self, int e) -> void {
        if (e == E) {
            if (is_curve(T, v))
                out.push_back(v);
            return;
        }
        for (int w = 0; w <= max_weight; ++w) {
            v[e] = w;
            bool ok = true;
            for (int t : closes[e]) {
                const auto& tri = T.triangles()[t];
                if (!triangle_ok(v[tri[0].edge], v[tri[1].edge], v[tri[2].edge])) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                self(self, e + 1);
        }
        v[e] = 0;
    };
    assign(assign, 0);
    return out;
}

std::vector<PieceSig> cut_pieces(const Triangulation& T, const Multicurve& nu)
{
    auto pieces = CutComplex(T, nu).pieces();
    std::sort(pieces.begin(), pieces.end());
    return pieces;
}

} // namespace mcg
