#include "mcg/constructions.hpp"
#include "mcg/decomposition.hpp"
#include "mcg/graph_lab.hpp"
#include "mcg/rank_formulas.hpp"
#include "mcg/reports.hpp"
#include "mcg/serialization.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace mcg;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct Options {
    std::string sig;
    int k = 0;
    int xi = 0;
    std::string source = "formula";
    int gmax = 4;
    int bmax = 5;
    int max_weight = 4;
    std::size_t samples = 200;
    std::uint64_t seed = 1;
    std::string out;
    std::string format;
    std::string file_a, file_b, nu_file, surface_opt;
    std::string kind = "mk";
    int param = 1;
    std::string graph_file;
    int u = 0, v = 0;
};

Json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidArgument("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
    }
}

void emit(const Options& opt, const std::string& text)
{
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out);
    if (!out)
        throw InvalidArgument("cannot write '" + opt.out + "'");
    out << text;
}

void emit_json(const Options& opt, const Json& j) { emit(opt, j.dump(2) + "\n"); }

Json classification_json(SurfaceSig s, int k, const std::string& source)
{
    Json j{{"g", s.g}, {"b", s.b}, {"k", k}, {"rank", quasiflat_rank(s, k)}};
    if (source == "formula" || source == "oracle") {
        auto c = source == "formula" ? classify_paper(s, k) : classify_oracle(s, k);
        j["classification"] = to_string(c.kind);
        j["source"] = to_string(c.source);
        return j;
    }
    auto f = classify_paper(s, k), o = classify_oracle(s, k);
    j["classification"] = {{"formula", to_string(f.kind)}, {"oracle", to_string(o.kind)}};
    j["source"] = "both";
    j["match"] = f.kind == o.kind;
    return j;
}

Json table_json(const std::vector<ReportRow>& rows)
{
    Json arr = Json::array();
    int counts[2][3] = {};
    for (const auto& r : rows) {
        arr.push_back({{"g", r.sig.g},
                       {"b", r.sig.b},
                       {"k", r.k},
                       {"rank", r.rank},
                       {"classification_formula", to_string(r.formula_kind)},
                       {"classification_oracle", to_string(r.oracle_kind)},
                       {"match", r.match()}});
        ++counts[0][static_cast<int>(r.formula_kind)];
        ++counts[1][static_cast<int>(r.oracle_kind)];
    }
    Json summary;
    const char* names[2] = {"formula", "oracle"};
    for (int s = 0; s < 2; ++s)
        for (auto kind : {GeometryKind::Hyperbolic, GeometryKind::RelativelyHyperbolic,
                          GeometryKind::Thick})
            summary[names[s]][std::string(to_string(kind))] = counts[s][static_cast<int>(kind)];
    return Json{{"rows", arr}, {"summary", summary}};
}

std::string table_summary(const std::vector<ReportRow>& rows)
{
    int formula[3] = {}, oracle[3] = {}, mismatches = 0;
    for (const auto& r : rows) {
        ++formula[static_cast<int>(r.formula_kind)];
        ++oracle[static_cast<int>(r.oracle_kind)];
        mismatches += r.match() ? 0 : 1;
    }
    std::ostringstream out;
    out << "# formula: Hyperbolic=" << formula[0] << " RelativelyHyperbolic=" << formula[1]
        << " Thick=" << formula[2] << "\n# oracle: Hyperbolic=" << oracle[0]
        << " RelativelyHyperbolic=" << oracle[1] << " Thick=" << oracle[2]
        << "\n# mismatches=" << mismatches << "\n";
    return out.str();
}

Triangulation surface_for(const Options& opt, const Json& a, const Json* b)
{
    if (!opt.surface_opt.empty())
        return generate_triangulation(parse_signature(opt.surface_opt));
    for (const Json* j : {&a, b})
        if (j && j->contains("surface"))
            return generate_triangulation(surface_from_json(j->at("surface")));
    throw InvalidArgument("surface unknown: pass --surface g,b or add \"surface\" to the JSON");
}

int run_curves_enumerate(const Options& opt)
{
    const auto sig = parse_signature(opt.sig);
    const auto T = generate_triangulation(sig);
    const auto curves = enumerate_curves(T, opt.max_weight);
    if (opt.format == "csv") {
        std::ostringstream out;
        for (const auto& c : curves) {
            for (std::size_t e = 0; e < c.size(); ++e)
                out << (e ? "," : "") << c[e];
            out << '\n';
        }
        emit(opt, out.str());
        return kOk;
    }
    emit_json(opt, Json{{"surface", to_json(sig)},
                        {"max_weight", opt.max_weight},
                        {"count", curves.size()},
                        {"curves", curves}});
    return kOk;
}

int run_curves_disjoint(const Options& opt)
{
    const Json a = read_json(opt.file_a), b = read_json(opt.file_b);
    const auto T = surface_for(opt, a, &b);
    const auto ma = multicurve_from_json(a), mb = multicurve_from_json(b);
    for (const Multicurve* m : {&ma, &mb})
        for (const auto& c : *m)
            if (!admissible(T, c.weights))
                throw InvalidArgument("component is not an admissible weight vector");
    emit_json(opt, Json{{"disjoint", disjoint(T, ma, mb)}});
    return kOk;
}

int run_curves_cut(const Options& opt)
{
    const Json nu = read_json(opt.nu_file);
    Options local = opt;
    if (local.surface_opt.empty() && !opt.sig.empty())
        local.surface_opt = opt.sig;
    const auto T = surface_for(local, nu, nullptr);
    const CutComplex cut(T, multicurve_from_json(nu));
    Json pieces = Json::array();
    for (auto p : cut.pieces())
        pieces.push_back(to_json(p));
    emit_json(opt, Json{{"surface", to_json(T.surface())},
                        {"pieces", pieces},
                        {"pattern", to_json(cut.as_pattern())}});
    return kOk;
}

int run_graph_build(const Options& opt)
{
    const Inventory inv(parse_signature(opt.sig), opt.max_weight);
    const auto G = build_graph(inv, parse_kind_tag(opt.kind), opt.param);
    if (opt.format == "dot")
        emit(opt, to_dot(G));
    else
        emit_json(opt, to_json(G));
    return kOk;
}

int run_graph_dist(const Options& opt)
{
    const auto G = graph_from_json(read_json(opt.graph_file));
    const auto d = bfs_distance(G, opt.u, opt.v);
    Json j{{"u", opt.u}, {"v", opt.v}, {"reachable", d.has_value()}};
    j["distance"] = d ? Json(*d) : Json(nullptr);
    emit_json(opt, j);
    return kOk;
}

int run_oracle_classify(const Options& opt)
{
    const auto s = parse_signature(opt.sig);
    const int xi = witness_threshold(s, opt.k);
    Json j = classification_json(s, opt.k, "oracle");
    j["witness_threshold"] = xi;
    auto a = condition_A_witness(s, xi);
    auto b = condition_B_counterexample(s, xi);
    j["condition_A"] = a.has_value();
    j["condition_A_witness"] = a ? to_json(*a) : Json(nullptr);
    j["condition_B"] = !b.has_value();
    j["condition_B_counterexample"] = b ? to_json(*b) : Json(nullptr);
    emit_json(opt, j);
    return kOk;
}

int run_oracle_mu(const Options& opt)
{
    const auto s = parse_signature(opt.sig);
    const int mu = mu_oracle(s, opt.xi);
    Json j{{"g", s.g}, {"b", s.b}, {"xi", opt.xi}, {"mu", mu}};
    Json cert = nullptr;
    if (mu > 0)
        for_each_decomposition(s, opt.xi, std::max(1, -s.euler()),
                               [&](const CutDecomposition& d) {
                                   if (d.size() == mu && cert.is_null())
                                       cert = to_json(d.pattern);
                               });
    j["certificate"] = cert;
    emit_json(opt, j);
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Quasi-flat rank, classification and graph experiments for multicurve graphs"};
    app.require_subcommand(1);
    Options opt;

    auto add_sig = [&](CLI::App* cmd) {
        cmd->add_option("surface", opt.sig, "surface signature g,b")->required();
    };
    auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", opt.out, "write to file"); };
    auto add_range = [&](CLI::App* cmd) {
        cmd->add_option("--gmax", opt.gmax, "largest genus")->check(CLI::NonNegativeNumber);
        cmd->add_option("--bmax", opt.bmax, "largest boundary count")
            ->check(CLI::NonNegativeNumber);
    };

    auto* rank = app.add_subcommand("rank", "quasi-flat rank m(g,b,k)");
    add_sig(rank);
    rank->add_option("k", opt.k)->required();
    add_out(rank);

    auto* mu = app.add_subcommand("mu", "closed-form mu(g,b,xi)");
    add_sig(mu);
    mu->add_option("xi", opt.xi)->required();
    add_out(mu);

    auto* classify = app.add_subcommand("classify", "hyperbolic / relatively hyperbolic / thick");
    add_sig(classify);
    classify->add_option("k", opt.k)->required();
    classify->add_option("--source", opt.source)
        ->check(CLI::IsMember({"formula", "oracle", "both"}));
    add_out(classify);

    auto* oracle = app.add_subcommand("oracle", "brute-force decomposition oracle");
    oracle->require_subcommand(1);
    auto* omu = oracle->add_subcommand("mu", "oracle value of mu with a certificate");
    add_sig(omu);
    omu->add_option("xi", opt.xi)->required();
    add_out(omu);
    auto* overify = oracle->add_subcommand("verify", "mu formula vs oracle sweep (CSV)");
    add_range(overify);
    add_out(overify);
    auto* oclassify = oracle->add_subcommand("classify", "oracle classification with certificates");
    add_sig(oclassify);
    oclassify->add_option("k", opt.k)->required();
    add_out(oclassify);
    auto* odisc = oracle->add_subcommand("discrepancies", "triples where table and oracle differ");
    add_range(odisc);
    add_out(odisc);

    auto* table = app.add_subcommand("table", "classification table over a range");
    add_range(table);
    table->add_option("--format", opt.format)->check(CLI::IsMember({"csv", "json"}));
    add_out(table);

    auto* curves = app.add_subcommand("curves", "normal-curve engine");
    curves->require_subcommand(1);
    auto* cenum = curves->add_subcommand("enumerate", "curve inventory up to a weight bound");
    add_sig(cenum);
    cenum->add_option("--max-weight", opt.max_weight)->check(CLI::PositiveNumber);
    cenum->add_option("--format", opt.format)->check(CLI::IsMember({"csv", "json"}));
    add_out(cenum);
    auto* cdis = curves->add_subcommand("disjoint", "are two multicurves disjoint");
    cdis->add_option("--a", opt.file_a, "multicurve JSON")->required();
    cdis->add_option("--b", opt.file_b, "multicurve JSON")->required();
    cdis->add_option("--surface", opt.surface_opt, "surface g,b if the files do not say");
    add_out(cdis);
    auto* ccut = curves->add_subcommand("cut", "pieces of the complement of a multicurve");
    ccut->add_option("surface", opt.sig, "surface signature g,b");
    ccut->add_option("--nu", opt.nu_file, "multicurve JSON")->required();
    add_out(ccut);
    auto* ctri = curves->add_subcommand("triangulation", "canonical triangulation as JSON");
    add_sig(ctri);
    add_out(ctri);

    auto* graph = app.add_subcommand("graph", "finite induced subgraphs");
    graph->require_subcommand(1);
    auto* gbuild = graph->add_subcommand("build", "build an instance over the curve inventory");
    add_sig(gbuild);
    gbuild->add_option("--kind", opt.kind)->check(CLI::IsMember({"mk", "ixi"}));
    gbuild->add_option("--param", opt.param, "k for mk, xi for ixi");
    gbuild->add_option("--max-weight", opt.max_weight)->check(CLI::PositiveNumber);
    gbuild->add_option("--format", opt.format)->check(CLI::IsMember({"json", "dot"}));
    add_out(gbuild);
    auto* gdist = graph->add_subcommand("dist", "BFS distance in a saved instance");
    gdist->add_option("file", opt.graph_file)->required();
    gdist->add_option("u", opt.u)->required();
    gdist->add_option("v", opt.v)->required();
    add_out(gdist);

    auto* qi = app.add_subcommand("qi-check", "quasi-isometry check suite");
    add_sig(qi);
    qi->add_option("k", opt.k)->required();
    qi->add_option("--max-weight", opt.max_weight)->check(CLI::PositiveNumber);
    qi->add_option("--samples", opt.samples);
    qi->add_option("--seed", opt.seed);
    add_out(qi);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (rank->parsed()) {
            const auto s = parse_signature(opt.sig);
            emit_json(opt, Json{{"g", s.g}, {"b", s.b}, {"k", opt.k},
                                {"rank", quasiflat_rank(s, opt.k)}});
            return kOk;
        }
        if (mu->parsed()) {
            const auto s = parse_signature(opt.sig);
            emit_json(opt, Json{{"g", s.g}, {"b", s.b}, {"xi", opt.xi},
                                {"mu", mu_formula(s, opt.xi)}});
            return kOk;
        }
        if (classify->parsed()) {
            emit_json(opt, classification_json(parse_signature(opt.sig), opt.k, opt.source));
            return kOk;
        }
        if (omu->parsed())
            return run_oracle_mu(opt);
        if (overify->parsed()) {
            const auto rows = cmd_verify(opt.gmax, opt.bmax);
            emit(opt, verify_csv(rows));
            const bool all = std::all_of(rows.begin(), rows.end(),
                                         [](const VerifyRow& r) { return r.match(); });
            return all ? kOk : kMismatch;
        }
        if (oclassify->parsed())
            return run_oracle_classify(opt);
        if (odisc->parsed()) {
            emit(opt, table_csv(discrepancies(opt.gmax, opt.bmax)));
            return kOk;
        }
        if (table->parsed()) {
            const auto rows = cmd_table(opt.gmax, opt.bmax);
            if (opt.format == "json")
                emit_json(opt, table_json(rows));
            else
                emit(opt, table_csv(rows) + table_summary(rows));
            return kOk;
        }
        if (cenum->parsed())
            return run_curves_enumerate(opt);
        if (cdis->parsed())
            return run_curves_disjoint(opt);
        if (ccut->parsed())
            return run_curves_cut(opt);
        if (ctri->parsed()) {
            emit_json(opt, to_json(generate_triangulation(parse_signature(opt.sig))));
            return kOk;
        }
        if (gbuild->parsed())
            return run_graph_build(opt);
        if (gdist->parsed())
            return run_graph_dist(opt);
        if (qi->parsed()) {
            try {
                const auto report =
                    cmd_qi_suite(parse_signature(opt.sig), opt.k, opt.max_weight, opt.samples,
                                 opt.seed);
                emit(opt, report.text());
                return report.passed() ? kOk : kMismatch;
            } catch (const IncompleteInventory& e) {
                std::cerr << "incomplete inventory: " << e.what() << '\n';
                return 3;
            }
        }
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const IncompleteInventory& e) {
        std::cerr << "incomplete inventory: " << e.what() << '\n';
        return 3;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed JSON input: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
