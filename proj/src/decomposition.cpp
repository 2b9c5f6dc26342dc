#include "mcg/decomposition.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace mcg {

namespace {

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[b] = a;
        return true;
    }
};

int euler_sum(std::span<const PieceSig> pieces)
{
    int total = 0;
    for (auto p : pieces)
        total += p.euler();
    return total;
}

int boundary_sum(std::span<const PieceSig> pieces)
{
    int total = 0;
    for (auto p : pieces)
        total += p.b;
    return total;
}

// Tree on n nodes with the given degree sequence (all >= 1, sum 2(n-1)).
std::vector<std::pair<int, int>> tree_from_degrees(std::vector<int> degree)
{
    const int n = static_cast<int>(degree.size());
    std::vector<std::pair<int, int>> edges;
    if (n < 2)
        return edges;
    std::vector<bool> removed(n, false);
    for (int remaining = n; remaining > 2; --remaining) {
        int leaf = -1, hub = -1;
        for (int i = 0; i < n; ++i) {
            if (removed[i])
                continue;
            if (degree[i] == 1 && leaf < 0)
                leaf = i;
            if (degree[i] >= 2 && (hub < 0 || degree[i] > degree[hub]))
                hub = i;
        }
        edges.emplace_back(std::min(leaf, hub), std::max(leaf, hub));
        removed[leaf] = true;
        --degree[hub];
    }
    int a = -1, b = -1;
    for (int i = 0; i < n; ++i) {
        if (removed[i])
            continue;
        (a < 0 ? a : b) = i;
    }
    edges.emplace_back(a, b);
    return edges;
}

std::vector<PieceSig> piece_types(SurfaceSig target, int min_complexity)
{
    const int budget = -target.euler();
    std::vector<PieceSig> types;
    for (int g = 0; g <= target.g; ++g) {
        for (int b = 1; 2 * g + b - 2 <= budget; ++b) {
            PieceSig p{g, b};
            if (is_essential_piece(p) && p.complexity() >= min_complexity)
                types.push_back(p);
        }
    }
    return types;  // (g,b) lexicographic
}

} // namespace

std::vector<int> GluingPattern::degrees() const
{
    std::vector<int> deg(pieces.size(), 0);
    for (auto [i, j] : edges) {
        ++deg[i];
        ++deg[j];
    }
    return deg;
}

int GluingPattern::derived_genus() const
{
    int g = 0;
    for (auto p : pieces)
        g += p.g;
    return g + static_cast<int>(edges.size()) - static_cast<int>(pieces.size()) + 1;
}

std::vector<int> CutDecomposition::piece_complexities() const
{
    std::vector<int> out;
    out.reserve(pattern.pieces.size());
    for (auto p : pattern.pieces)
        out.push_back(p.complexity());
    return out;
}

std::optional<std::string> pattern_violation(const GluingPattern& pattern, SurfaceSig target)
{
    const int m = static_cast<int>(pattern.pieces.size());
    if (m == 0)
        return "no pieces";
    for (auto [i, j] : pattern.edges)
        if (i < 0 || j < 0 || i >= m || j >= m)
            return "edge endpoint out of range";
    if (m >= 2)
        for (auto p : pattern.pieces)
            if (!is_essential_piece(p))
                return "piece " + to_string(p) + " is not essential";
    auto deg = pattern.degrees();
    int free_circles = 0;
    for (int i = 0; i < m; ++i) {
        if (deg[i] > pattern.pieces[i].b)
            return "piece " + std::to_string(i) + " uses more circles than it has";
        free_circles += pattern.pieces[i].b - deg[i];
    }
    if (free_circles != target.b)
        return "unused circles " + std::to_string(free_circles) + " != b=" +
               std::to_string(target.b);
    DisjointSets sets(m);
    int components = m;
    for (auto [i, j] : pattern.edges)
        if (sets.unite(i, j))
            --components;
    if (components != 1)
        return "gluing multigraph is disconnected";
    if (euler_sum(pattern.pieces) != target.euler())
        return "Euler characteristics do not add up";
    if (pattern.derived_genus() != target.g)
        return "derived genus " + std::to_string(pattern.derived_genus()) + " != g";
    return std::nullopt;
}

bool gluing_feasible(std::span<const PieceSig> pieces, SurfaceSig target)
{
    const int m = static_cast<int>(pieces.size());
    if (m == 0)
        return false;
    if (m == 1)
        return pieces[0] == target;
    if (euler_sum(pieces) != target.euler())
        return false;
    for (auto p : pieces)
        if (p.b < 1 || !is_essential_piece(p))
            return false;
    const int twice_e = boundary_sum(pieces) - target.b;
    if (twice_e < 0 || twice_e % 2 != 0)
        return false;
    const int e = twice_e / 2;
    if (e < m - 1)
        return false;
    // degree sequence 1 <= d_i <= b_i summing to 2e
    return m <= twice_e && twice_e <= boundary_sum(pieces);
}

std::optional<GluingPattern> build_pattern_with_edges(std::span<const PieceSig> pieces,
                                                      SurfaceSig target,
                                                      std::span<const std::pair<int, int>> required)
{
    const int m = static_cast<int>(pieces.size());
    if (m < 2)
        return std::nullopt;
    if (euler_sum(pieces) != target.euler())
        return std::nullopt;
    for (auto p : pieces)
        if (p.b < 1 || !is_essential_piece(p))
            return std::nullopt;
    const int twice_e = boundary_sum(pieces) - target.b;
    if (twice_e < 0 || twice_e % 2 != 0)
        return std::nullopt;
    const int e = twice_e / 2;

    GluingPattern pattern;
    pattern.pieces.assign(pieces.begin(), pieces.end());
    std::vector<int> cap(m);
    for (int i = 0; i < m; ++i)
        cap[i] = pieces[i].b;

    DisjointSets sets(m);
    for (auto [i, j] : required) {
        if (i < 0 || j < 0 || i >= m || j >= m)
            return std::nullopt;
        --cap[i];
        --cap[j];
        if (cap[i] < 0 || cap[j] < 0)
            return std::nullopt;
        pattern.edges.emplace_back(std::min(i, j), std::max(i, j));
        sets.unite(i, j);
    }

    // Connect the components left by the required edges with a tree whose
    // per-component degree fits the component's spare circles.
    std::vector<int> roots;
    std::vector<int> comp_of(m);
    for (int i = 0; i < m; ++i) {
        int r = sets.find(i);
        auto it = std::find(roots.begin(), roots.end(), r);
        comp_of[i] = static_cast<int>(it - roots.begin());
        if (it == roots.end())
            roots.push_back(r);
    }
    const int c = static_cast<int>(roots.size());
    if (c >= 2) {
        std::vector<int> comp_cap(c, 0);
        for (int i = 0; i < m; ++i)
            comp_cap[comp_of[i]] += cap[i];
        std::vector<int> degree(c, 1);
        int extra = c - 2;
        for (int k = 0; k < c && extra > 0; ++k) {
            int room = std::min(comp_cap[k], c - 1) - degree[k];
            int take = std::min(room, extra);
            if (take > 0) {
                degree[k] += take;
                extra -= take;
            }
        }
        for (int k = 0; k < c; ++k)
            if (degree[k] > comp_cap[k])
                return std::nullopt;
        if (extra > 0)
            return std::nullopt;
        for (auto [ca, cb] : tree_from_degrees(degree)) {
            auto pick = [&](int comp) {
                int best = -1;
                for (int i = 0; i < m; ++i)
                    if (comp_of[i] == comp && cap[i] > 0 && (best < 0 || cap[i] > cap[best]))
                        best = i;
                return best;
            };
            int i = pick(ca), j = pick(cb);
            if (i < 0 || j < 0)
                return std::nullopt;
            --cap[i];
            --cap[j];
            pattern.edges.emplace_back(std::min(i, j), std::max(i, j));
        }
    }

    const int rest = e - static_cast<int>(pattern.edges.size());
    if (rest < 0)
        return std::nullopt;
    std::vector<int> slots;
    for (int i = 0; i < m; ++i)
        for (int s = 0; s < cap[i]; ++s)
            slots.push_back(i);
    if (static_cast<int>(slots.size()) < 2 * rest)
        return std::nullopt;
    for (int k = 0; k < rest; ++k)
        pattern.edges.emplace_back(slots[2 * k], slots[2 * k + 1]);
    std::sort(pattern.edges.begin(), pattern.edges.end());
    if (pattern_violation(pattern, target))
        return std::nullopt;
    return pattern;
}

std::optional<GluingPattern> build_gluing_pattern(std::span<const PieceSig> pieces,
                                                  SurfaceSig target)
{
    if (pieces.size() == 1) {
        if (pieces[0] != target)
            return std::nullopt;
        return GluingPattern{{pieces[0]}, {}};
    }
    return build_pattern_with_edges(pieces, target, {});
}

void for_each_decomposition(SurfaceSig target, int min_piece_complexity, int max_pieces,
                            const std::function<void(const CutDecomposition&)>& visit)
{
    if (max_pieces < 1)
        return;
    if (target.complexity() >= min_piece_complexity) {
        visit(CutDecomposition{GluingPattern{{target}, {}}});
    }
    const auto types = piece_types(target, min_piece_complexity);
    const int budget = -target.euler();
    std::vector<PieceSig> chosen;

    std::function<void(std::size_t, int)> extend = [&](std::size_t first, int left) {
        if (left == 0) {
            if (chosen.size() >= 2) {
                if (auto pattern = build_gluing_pattern(chosen, target))
                    visit(CutDecomposition{std::move(*pattern)});
            }
            return;
        }
        if (static_cast<int>(chosen.size()) == max_pieces)
            return;
        for (std::size_t t = first; t < types.size(); ++t) {
            const int cost = -types[t].euler();
            if (cost > left)
                continue;
            chosen.push_back(types[t]);
            extend(t, left - cost);
            chosen.pop_back();
        }
    };
    extend(0, budget);
}

std::vector<CutDecomposition> enumerate_decompositions(SurfaceSig target,
                                                       int min_piece_complexity, int max_pieces)
{
    std::vector<CutDecomposition> out;
    for_each_decomposition(target, min_piece_complexity, max_pieces,
                           [&](const CutDecomposition& d) { out.push_back(d); });
    return out;
}

int mu_oracle(SurfaceSig target, int xi)
{
    if (xi < 1)
        throw InvalidArgument("mu requires xi >= 1, got " + std::to_string(xi));
    if (!target.graph_admissible())
        return target.complexity() >= xi ? 1 : 0;
    int best = 0;
    for_each_decomposition(target, xi, std::max(1, -target.euler()),
                           [&](const CutDecomposition& d) { best = std::max(best, d.size()); });
    return best;
}

std::optional<GluingPattern> condition_A_witness(SurfaceSig target, int xi)
{
    if (xi < 1)
        throw InvalidArgument("condition A requires xi >= 1");
    std::optional<GluingPattern> found;
    const auto types = piece_types(target, xi);
    for (std::size_t i = 0; i < types.size() && !found; ++i)
        for (std::size_t j = i; j < types.size() && !found; ++j) {
            const PieceSig pair[2] = {types[i], types[j]};
            found = build_gluing_pattern(pair, target);
        }
    return found;
}

bool condition_A(SurfaceSig target, int xi) { return condition_A_witness(target, xi).has_value(); }

std::optional<GluingPattern> condition_B_counterexample(SurfaceSig target, int xi)
{
    if (xi < 1)
        throw InvalidArgument("condition B requires xi >= 1");
    const auto big = piece_types(target, xi);
    const auto any = piece_types(target, std::numeric_limits<int>::min());
    const std::pair<int, int> required[2] = {{0, 2}, {1, 2}};
    for (std::size_t i = 0; i < big.size(); ++i)
        for (std::size_t j = i; j < big.size(); ++j)
            for (auto r : any) {
                const PieceSig trio[3] = {big[i], big[j], r};
                if (euler_sum(trio) != target.euler())
                    continue;
                if (auto pattern = build_pattern_with_edges(trio, target, required))
                    return pattern;
            }
    return std::nullopt;
}

bool condition_B(SurfaceSig target, int xi) { return !condition_B_counterexample(target, xi); }

Classification classify_oracle(SurfaceSig target, int k)
{
    if (target.complexity() < 2)
        throw InvalidArgument("classification needs complexity >= 2, got " +
                              std::to_string(target.complexity()) + " for " + to_string(target));
    const int xi = witness_threshold(target, k);
    if (!condition_A(target, xi))
        return {GeometryKind::Hyperbolic, Provenance::Oracle};
    if (condition_B(target, xi))
        return {GeometryKind::RelativelyHyperbolic, Provenance::Oracle};
    return {GeometryKind::Thick, Provenance::Oracle};
}

} // namespace mcg
