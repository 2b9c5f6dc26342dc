#include "mcg/graph_lab.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace mcg {

namespace {

void require_pants(const Inventory& inv, const Vertex& v, const char* what)
{
    if (static_cast<int>(v.size()) != inv.complexity() || !inv.pairwise_disjoint(v))
        throw InvalidArgument(std::string(what) + " is not a pants decomposition");
}

bool contains(const Vertex& big, const Vertex& small)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Vertex difference(const Vertex& a, const Vertex& b)
{
    Vertex out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Vertex with(Vertex v, int c)
{
    v.insert(std::upper_bound(v.begin(), v.end(), c), c);
    return v;
}

// Walk from a to b (both k-subsets of one pants decomposition) replacing one
// curve at a time; appends the intermediate and final multicurves.
int replace_walk(const Vertex& a, const Vertex& b, std::vector<Vertex>& walk)
{
    const Vertex out = difference(a, b), in = difference(b, a);
    Vertex cur = a;
    for (std::size_t i = 0; i < out.size(); ++i) {
        cur.erase(std::find(cur.begin(), cur.end(), out[i]));
        cur = with(cur, in[i]);
        walk.push_back(cur);
    }
    return static_cast<int>(out.size());
}

} // namespace

Inventory::Inventory(SurfaceSig sig, int max_weight)
    : T_(generate_triangulation(sig)), max_weight_(max_weight)
{
    if (sig.b == 0)
        throw InvalidArgument("curve inventories need b >= 1 (closed surfaces are not supported)");
    curves_ = enumerate_curves(T_, max_weight);
    fill_disjointness();
}

Inventory::Inventory(SurfaceSig sig, std::vector<WeightVector> curves)
    : T_(generate_triangulation(sig)), max_weight_(0), curves_(std::move(curves))
{
    if (sig.b == 0)
        throw InvalidArgument("curve inventories need b >= 1 (closed surfaces are not supported)");
    std::sort(curves_.begin(), curves_.end());
    curves_.erase(std::unique(curves_.begin(), curves_.end()), curves_.end());
    for (const auto& c : curves_) {
        if (static_cast<int>(c.size()) != T_.edge_count() || !is_curve(T_, c))
            throw InvalidArgument("inventory entry is not a curve");
        max_weight_ = std::max(max_weight_, *std::max_element(c.begin(), c.end()));
    }
    fill_disjointness();
}

void Inventory::fill_disjointness()
{
    const int n = size();
    disjoint_.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) {
        disjoint_[i][i] = 1;
        for (int j = i + 1; j < n; ++j)
            disjoint_[i][j] = disjoint_[j][i] = mcg::disjoint(T_, curves_[i], curves_[j]) ? 1 : 0;
    }
}

bool Inventory::pairwise_disjoint(const Vertex& v) const
{
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] == v[j] || !disjoint(v[i], v[j]))
                return false;
    return true;
}

int Inventory::index_of(const WeightVector& c) const
{
    auto it = std::lower_bound(curves_.begin(), curves_.end(), c);
    return it != curves_.end() && *it == c ? static_cast<int>(it - curves_.begin()) : -1;
}

Multicurve Inventory::multicurve(const Vertex& v) const
{
    std::vector<WeightVector> cs;
    for (int i : v)
        cs.push_back(curves_.at(i));
    return multicurve_of(cs);
}

const CutComplex& Inventory::cut(const Vertex& v) const
{
    auto& slot = cut_cache_[v];
    if (!slot)
        slot = std::make_unique<CutComplex>(T_, multicurve(v));
    return *slot;
}

std::vector<Vertex> enumerate_multicurves(const Inventory& inv, int k)
{
    if (k < 1 || k > inv.complexity())
        throw InvalidArgument("multicurve size " + std::to_string(k) + " outside [1, " +
                              std::to_string(inv.complexity()) + "]");
    std::vector<Vertex> out;
    Vertex cur;
    auto grow = [&](auto&& self, int from) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int c = from; c < inv.size(); ++c) {
            bool ok = true;
            for (int d : cur)
                if (!inv.disjoint(c, d)) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            cur.push_back(c);
            self(self, c + 1);
            cur.pop_back();
        }
    };
    grow(grow, 0);
    return out;
}

int MulticurveGraphInstance::vertex_index(const Vertex& v) const
{
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    return it != vertices.end() && *it == v ? static_cast<int>(it - vertices.begin()) : -1;
}

std::size_t MulticurveGraphInstance::edge_count() const
{
    std::size_t twice = 0;
    for (const auto& nb : adjacency)
        twice += nb.size();
    return twice / 2;
}

Vertex intersection(const Vertex& a, const Vertex& b)
{
    Vertex out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_edge_multicurve(const Inventory& inv, int k, const Vertex& a, const Vertex& b)
{
    if (k < 1 || k > inv.complexity() - 1)
        throw InvalidArgument("multicurve graph edges need 1 <= k <= complexity-1 (got k=" +
                              std::to_string(k) + ")");
    if (a == b || static_cast<int>(intersection(a, b).size()) != k - 1)
        return false;
    const Vertex da = difference(a, b), db = difference(b, a);
    return inv.disjoint(da[0], db[0]);
}

bool is_edge_interpolating(const Inventory& inv, int xi, const Vertex& a, const Vertex& b)
{
    if (xi < 1)
        throw InvalidArgument("complexity-xi graph needs xi >= 1");
    require_pants(inv, a, "first vertex");
    require_pants(inv, b, "second vertex");
    if (a == b)
        return false;
    const Vertex nu = intersection(a, b);
    const CutComplex& cut = inv.cut(nu);
    std::set<int> support;
    for (const Vertex* side : {&a, &b})
        for (int c : difference(*side, nu))
            support.insert(*cut.locate(inv.curves()[c]));
    int total = 0;
    for (int p : support)
        total += cut.pieces()[p].complexity();
    return total <= xi;
}

MulticurveGraphInstance build_graph(const Inventory& inv, GraphKind kind, int param)
{
    const int xi0 = inv.complexity();
    if (param < 1 || param > xi0 - 1)
        throw InvalidArgument(std::string(kind == GraphKind::Multicurve ? "k" : "xi") + "=" +
                              std::to_string(param) + " outside [1, " + std::to_string(xi0 - 1) +
                              "]");
    MulticurveGraphInstance G;
    G.kind = kind;
    G.param = param;
    G.surface = inv.surface();
    G.max_weight = inv.max_weight();
    G.curves = inv.curves();
    const int size = kind == GraphKind::Multicurve ? param : xi0;
    const int shared = kind == GraphKind::Multicurve ? param - 1 : xi0 - param;
    G.vertices = enumerate_multicurves(inv, size);
    G.adjacency.assign(G.vertices.size(), {});

    // Candidate pairs share at least `shared` curves; bucket by shared subsets.
    std::set<std::pair<int, int>> candidates;
    if (shared == 0) {
        for (int i = 0; i < static_cast<int>(G.vertices.size()); ++i)
            for (int j = i + 1; j < static_cast<int>(G.vertices.size()); ++j)
                candidates.emplace(i, j);
    } else {
        std::map<Vertex, std::vector<int>> buckets;
        for (int i = 0; i < static_cast<int>(G.vertices.size()); ++i) {
            const Vertex& v = G.vertices[i];
            std::vector<bool> pick(v.size(), false);
            std::fill(pick.begin(), pick.begin() + shared, true);
            do {
                Vertex sub;
                for (std::size_t t = 0; t < v.size(); ++t)
                    if (pick[t])
                        sub.push_back(v[t]);
                buckets[sub].push_back(i);
            } while (std::prev_permutation(pick.begin(), pick.end()));
        }
        for (const auto& [sub, members] : buckets)
            for (std::size_t x = 0; x < members.size(); ++x)
                for (std::size_t y = x + 1; y < members.size(); ++y)
                    candidates.emplace(members[x], members[y]);
    }
    for (auto [i, j] : candidates) {
        const bool edge = kind == GraphKind::Multicurve
                              ? is_edge_multicurve(inv, param, G.vertices[i], G.vertices[j])
                              : is_edge_interpolating(inv, param, G.vertices[i], G.vertices[j]);
        if (edge) {
            G.adjacency[i].push_back(j);
            G.adjacency[j].push_back(i);
        }
    }
    for (auto& nb : G.adjacency)
        std::sort(nb.begin(), nb.end());
    return G;
}

Vertex extend_to_pants(const Inventory& inv, const Vertex& alpha)
{
    if (!inv.pairwise_disjoint(alpha) || static_cast<int>(alpha.size()) > inv.complexity())
        throw InvalidArgument("extend_to_pants needs a multicurve");
    const int need = inv.complexity();
    Vertex cur = alpha;
    auto grow = [&](auto&& self, int from) -> bool {
        if (static_cast<int>(cur.size()) == need)
            return true;
        for (int c = from; c < inv.size(); ++c) {
            if (std::binary_search(cur.begin(), cur.end(), c))
                continue;
            bool ok = true;
            for (int d : cur)
                if (!inv.disjoint(c, d)) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            Vertex saved = cur;
            cur = with(cur, c);
            if (self(self, c + 1))
                return true;
            cur = std::move(saved);
        }
        return false;
    };
    if (!grow(grow, 0))
        throw IncompleteInventory("no pants decomposition in the inventory extends the given " +
                                  std::to_string(alpha.size()) + "-multicurve");
    return cur;
}

Vertex map_I(const Inventory& inv, int k, const Vertex& alpha)
{
    if (static_cast<int>(alpha.size()) != k)
        throw InvalidArgument("map_I expects a " + std::to_string(k) + "-multicurve");
    return extend_to_pants(inv, alpha);
}

bool verify_extension_lemma(const Inventory& inv, int k, const Vertex& alpha, const Vertex& ext1,
                            const Vertex& ext2)
{
    require_pants(inv, ext1, "first extension");
    require_pants(inv, ext2, "second extension");
    if (!contains(ext1, alpha) || !contains(ext2, alpha))
        throw InvalidArgument("extensions must contain the multicurve");
    return ext1 == ext2 || is_edge_interpolating(inv, inv.complexity() - k, ext1, ext2);
}

EdgeCertificate verify_edge_upper_bound(const Inventory& inv, int k, const Vertex& alpha,
                                        const Vertex& beta)
{
    if (!is_edge_multicurve(inv, k, alpha, beta))
        throw InvalidArgument("verify_edge_upper_bound needs adjacent multicurves");
    Vertex both = alpha;
    for (int c : beta)
        if (!std::binary_search(both.begin(), both.end(), c))
            both = with(both, c);
    EdgeCertificate cert;
    for (Vertex v : {map_I(inv, k, alpha), extend_to_pants(inv, both), map_I(inv, k, beta)})
        if (cert.path.empty() || cert.path.back() != v)
            cert.path.push_back(std::move(v));
    cert.valid = true;
    const int xi = inv.complexity() - k;
    for (std::size_t i = 1; i < cert.path.size(); ++i)
        if (!is_edge_interpolating(inv, xi, cert.path[i - 1], cert.path[i]))
            cert.valid = false;
    return cert;
}

bool PathLift::within_bounds(const Inventory& inv, int k) const
{
    for (int s : leg_steps)
        if (s > c_k)
            return false;
    for (std::size_t i = 1; i < walk.size(); ++i)
        if (!is_edge_multicurve(inv, k, walk[i - 1], walk[i]))
            return false;
    const int n = static_cast<int>(path.size()) - 1;
    return total_steps() <= (n + 1) * c_k;
}

PathLift lift_path(const Inventory& inv, int k, const Vertex& alpha, const Vertex& beta,
                   const std::vector<Vertex>& path)
{
    const int xi0 = inv.complexity();
    if (k < 1 || k > xi0 - 1)
        throw InvalidArgument("lift_path needs 1 <= k <= complexity-1");
    if (path.empty())
        throw InvalidArgument("lift_path needs at least one vertex");
    if (!contains(path.front(), alpha) || !contains(path.back(), beta))
        throw InvalidArgument("path ends must contain the endpoint multicurves");
    for (std::size_t i = 1; i < path.size(); ++i)
        if (!is_edge_interpolating(inv, xi0 - k, path[i - 1], path[i]))
            throw InvalidArgument("path step " + std::to_string(i) + " is not an edge");

    PathLift lift;
    lift.path = path;
    lift.c_k = std::min(k, xi0 - k);
    for (std::size_t i = 1; i < path.size(); ++i) {
        Vertex common = intersection(path[i - 1], path[i]);
        common.resize(k);
        lift.gammas.push_back(std::move(common));
    }
    lift.walk.push_back(alpha);
    Vertex cur = alpha;
    for (const Vertex& g : lift.gammas) {
        lift.leg_steps.push_back(replace_walk(cur, g, lift.walk));
        cur = g;
    }
    lift.leg_steps.push_back(replace_walk(cur, beta, lift.walk));
    return lift;
}

std::vector<int> bfs_path(const MulticurveGraphInstance& G, int u, int v)
{
    const int n = static_cast<int>(G.vertices.size());
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw InvalidArgument("unknown vertex index");
    std::vector<int> parent(n, -1);
    std::deque<int> queue{u};
    parent[u] = u;
    while (!queue.empty() && parent[v] < 0) {
        int x = queue.front();
        queue.pop_front();
        for (int y : G.adjacency[x])
            if (parent[y] < 0) {
                parent[y] = x;
                queue.push_back(y);
            }
    }
    if (parent[v] < 0)
        return {};
    std::vector<int> path{v};
    while (path.back() != u)
        path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

std::optional<int> bfs_distance(const MulticurveGraphInstance& G, int u, int v)
{
    auto path = bfs_path(G, u, v);
    if (path.empty())
        return std::nullopt;
    return static_cast<int>(path.size()) - 1;
}

WitnessReport witness_empirical_check(const Inventory& inv, int k, const Vertex& nu,
                                      int piece_index, const std::vector<Vertex>& vertices)
{
    const CutComplex& cut = inv.cut(nu);
    if (piece_index < 0 || piece_index >= static_cast<int>(cut.pieces().size()))
        throw InvalidArgument("piece index out of range");
    WitnessReport report;
    report.piece = cut.pieces()[piece_index];
    report.threshold = witness_threshold(inv.surface(), k);
    report.threshold_verdict = report.piece.complexity() >= report.threshold;

    Vertex bounding;
    for (std::size_t i = 0; i < nu.size(); ++i) {
        auto [s, t] = cut.curve_sides()[i];
        if (s == piece_index || t == piece_index)
            bounding.push_back(nu[i]);
    }
    auto meets = [&](int c) {
        for (int d : bounding)
            if (!inv.disjoint(c, d))
                return true;
        for (int d : nu)
            if (!inv.disjoint(c, d))
                return false;
        auto where = cut.locate(inv.curves()[c]);
        return where && *where == piece_index;
    };
    report.inventory_verdict = true;
    for (const Vertex& v : vertices) {
        ++report.vertices_checked;
        if (std::none_of(v.begin(), v.end(), meets)) {
            report.inventory_verdict = false;
            report.avoiding_vertex = v;
            break;
        }
    }
    return report;
}

} // namespace mcg
