#include "mcg/reports.hpp"

#include "mcg/decomposition.hpp"
#include "mcg/graph_lab.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace mcg {

std::vector<SurfaceSig> surface_range(int gmax, int bmax, int min_complexity)
{
    if (gmax < 0 || bmax < 0)
        throw InvalidArgument("gmax and bmax must be >= 0");
    std::vector<SurfaceSig> out;
    for (int g = 0; g <= gmax; ++g)
        for (int b = 0; b <= bmax; ++b)
            if (SurfaceSig{g, b}.complexity() >= min_complexity)
                out.push_back({g, b});
    return out;
}

std::vector<VerifyRow> cmd_verify(int gmax, int bmax)
{
    std::vector<VerifyRow> rows;
    for (auto s : surface_range(gmax, bmax, 1)) {
        for (int xi = 1; xi <= s.complexity(); ++xi)
            rows.push_back({"mu", s, xi, mu_formula(s, xi), mu_oracle(s, xi)});
        for (int k = 1; k <= s.complexity(); ++k) {
            if (s.b == 0 && k == 1)
                continue;
            rows.push_back({"rank_identity", s, k, quasiflat_rank(s, k),
                            mu_oracle(s, witness_threshold(s, k))});
        }
    }
    return rows;
}

std::string verify_csv(const std::vector<VerifyRow>& rows)
{
    std::ostringstream out;
    out << "g,b,xi,mu_formula,mu_oracle,match,check\n";
    for (const auto& r : rows) {
        const int xi = r.check == "mu" ? r.param : witness_threshold(r.sig, r.param);
        out << r.sig.g << ',' << r.sig.b << ',' << xi << ',' << r.formula << ',' << r.oracle
            << ',' << (r.match() ? "true" : "false") << ','
            << r.check << '\n';
    }
    return out.str();
}

std::vector<ReportRow> cmd_table(int gmax, int bmax)
{
    std::vector<ReportRow> rows;
    for (auto s : surface_range(gmax, bmax, 2))
        for (int k = 1; k <= s.complexity(); ++k)
            rows.push_back({s, k, quasiflat_rank(s, k), classify_paper(s, k).kind,
                            classify_oracle(s, k).kind});
    return rows;
}

std::vector<ReportRow> discrepancies(int gmax, int bmax)
{
    auto rows = cmd_table(gmax, bmax);
    std::erase_if(rows, [](const ReportRow& r) { return r.match(); });
    return rows;
}

std::string table_csv(const std::vector<ReportRow>& rows)
{
    std::ostringstream out;
    out << "g,b,k,rank,classification_formula,classification_oracle,match\n";
    for (const auto& r : rows)
        out << r.sig.g << ',' << r.sig.b << ',' << r.k << ',' << r.rank << ','
            << to_string(r.formula_kind) << ',' << to_string(r.oracle_kind) << ','
            << (r.match() ? "true" : "false") << '\n';
    return out.str();
}

bool QiReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(),
                       [](const QiCheck& c) { return c.violations == 0; });
}

std::string QiReport::text() const
{
    std::ostringstream out;
    out << "surface " << to_string(sig) << " k=" << k << " max_weight=" << max_weight
        << " samples=" << samples << " seed=" << seed << '\n';
    out << "inventory curves=" << curves << " mk: vertices=" << mk_vertices
        << " edges=" << mk_edges << " ixi: vertices=" << i_vertices << " edges=" << i_edges
        << '\n';
    for (const auto& c : checks)
        out << c.name << ": checked=" << c.checked << " violations=" << c.violations
            << " incomplete=" << c.incomplete << ' ' << (c.violations ? "FAIL" : "PASS")
            << '\n';
    out << "result: " << (passed() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

QiReport cmd_qi_suite(SurfaceSig sig, int k, int max_weight, std::size_t samples,
                      std::uint64_t seed)
{
    const Inventory inv(sig, max_weight);
    const int xi0 = inv.complexity();
    if (k < 1 || k > xi0 - 1)
        throw InvalidArgument("qi-check needs 1 <= k <= complexity-1");
    const auto M = build_graph(inv, GraphKind::Multicurve, k);
    const auto I = build_graph(inv, GraphKind::Interpolating, xi0 - k);

    QiReport report;
    report.sig = sig;
    report.k = k;
    report.max_weight = max_weight;
    report.samples = samples;
    report.seed = seed;
    report.curves = inv.curves().size();
    report.mk_vertices = M.vertices.size();
    report.mk_edges = M.edge_count();
    report.i_vertices = I.vertices.size();
    report.i_edges = I.edge_count();

    auto adjacent_in_I = [&](const Vertex& a, const Vertex& b) {
        const int ia = I.vertex_index(a), ib = I.vertex_index(b);
        return ia >= 0 && ib >= 0 && std::binary_search(I.adjacency[ia].begin(),
                                                        I.adjacency[ia].end(), ib);
    };

    QiCheck ext{"extension_lemma"};
    for (const Vertex& alpha : M.vertices) {
        std::vector<const Vertex*> exts;
        for (const Vertex& P : I.vertices)
            if (std::includes(P.begin(), P.end(), alpha.begin(), alpha.end()))
                exts.push_back(&P);
        if (exts.empty()) {
            ++ext.incomplete;
            continue;
        }
        for (std::size_t a = 0; a < exts.size(); ++a)
            for (std::size_t b = a + 1; b < exts.size(); ++b) {
                ++ext.checked;
                if (!verify_extension_lemma(inv, k, alpha, *exts[a], *exts[b]) ||
                    !adjacent_in_I(*exts[a], *exts[b]))
                    ++ext.violations;
            }
    }
    report.checks.push_back(ext);

    QiCheck upper{"edge_upper_bound"};
    for (std::size_t i = 0; i < M.vertices.size(); ++i)
        for (int j : M.adjacency[i]) {
            if (j < static_cast<int>(i))
                continue;
            try {
                auto cert = verify_edge_upper_bound(inv, k, M.vertices[i], M.vertices[j]);
                ++upper.checked;
                if (!cert.valid || cert.length() > 2)
                    ++upper.violations;
            } catch (const IncompleteInventory&) {
                ++upper.incomplete;
            }
        }
    report.checks.push_back(upper);

    QiCheck lifts{"path_lift"};
    std::mt19937_64 rng(seed);
    const std::size_t n = M.vertices.size();
    for (std::size_t attempts = 0; n > 0 && lifts.checked < samples && attempts < 50 * samples;
         ++attempts) {
        const Vertex& alpha = M.vertices[rng() % n];
        const Vertex& beta = M.vertices[rng() % n];
        Vertex ia, ib;
        try {
            ia = map_I(inv, k, alpha);
            ib = map_I(inv, k, beta);
        } catch (const IncompleteInventory&) {
            ++lifts.incomplete;
            continue;
        }
        auto route = bfs_path(I, I.vertex_index(ia), I.vertex_index(ib));
        if (route.empty())
            continue;  // different components of the finite instance
        std::vector<Vertex> path;
        for (int v : route)
            path.push_back(I.vertices[v]);
        const auto lift = lift_path(inv, k, alpha, beta, path);
        ++lifts.checked;
        const auto dm = bfs_distance(M, M.vertex_index(alpha), M.vertex_index(beta));
        if (!lift.within_bounds(inv, k) || !dm || *dm > lift.total_steps())
            ++lifts.violations;
    }
    report.checks.push_back(lifts);

    QiCheck dense{"quasi_density"};
    for (const Vertex& P : I.vertices) {
        const Vertex alpha(P.begin(), P.begin() + k);
        ++dense.checked;
        const Vertex image = map_I(inv, k, alpha);
        if (image != P && !adjacent_in_I(image, P))
            ++dense.violations;
    }
    report.checks.push_back(dense);
    return report;
}

} // namespace mcg
