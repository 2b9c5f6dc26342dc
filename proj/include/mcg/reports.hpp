#pragma once

#include "mcg/rank_formulas.hpp"
#include "mcg/surface.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mcg {

/// Surfaces with g <= gmax, b <= bmax and complexity >= min_complexity, in
/// (g,b) order.
std::vector<SurfaceSig> surface_range(int gmax, int bmax, int min_complexity);

/// One comparison line of the formula/oracle sweep. check is "mu" (param is
/// xi, formula = mu_formula, oracle = mu_oracle) or "rank_identity" (param
/// is k, formula = quasiflat_rank, oracle = mu_oracle at the witness
/// threshold).
struct VerifyRow {
    std::string check;
    SurfaceSig sig;
    int param = 0;
    int formula = 0;
    int oracle = 0;

    bool match() const { return formula == oracle; }
};

std::vector<VerifyRow> cmd_verify(int gmax, int bmax);
std::string verify_csv(const std::vector<VerifyRow>& rows);

struct ReportRow {
    SurfaceSig sig;
    int k = 0;
    int rank = 0;
    GeometryKind formula_kind{};
    GeometryKind oracle_kind{};

    bool match() const { return formula_kind == oracle_kind; }
};

/// Every (g,b) with complexity >= 2 in range and every 1 <= k <= complexity.
std::vector<ReportRow> cmd_table(int gmax, int bmax);
std::vector<ReportRow> discrepancies(int gmax, int bmax);
std::string table_csv(const std::vector<ReportRow>& rows);

struct QiCheck {
    std::string name;
    std::size_t checked = 0;
    std::size_t violations = 0;
    std::size_t incomplete = 0;  // skipped: inventory cannot complete
};

struct QiReport {
    SurfaceSig sig;
    int k = 0;
    int max_weight = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::size_t curves = 0;
    std::size_t mk_vertices = 0, mk_edges = 0;
    std::size_t i_vertices = 0, i_edges = 0;
    std::vector<QiCheck> checks;

    bool passed() const;
    std::string text() const;
};

/// Extension lemma (exhaustive), edge upper bound (every inventory edge),
/// path lifting (sampled pairs, deterministic in seed) and quasi-density
/// (exhaustive). Requires 1 <= k <= complexity-1.
QiReport cmd_qi_suite(SurfaceSig sig, int k, int max_weight, std::size_t samples,
                      std::uint64_t seed);

} // namespace mcg
