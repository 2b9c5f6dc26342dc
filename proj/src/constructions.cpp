#include "mcg/constructions.hpp"

#include <map>

namespace mcg {

namespace {

void add_two_piece(std::vector<CaseSplit>& out, SurfaceSig sig, int xi, const char* label,
                   PieceSig x, PieceSig y)
{
    if (xi > sig.complexity() - 1 || x.g < 0 || y.g < 0 || y.b < 1)
        return;
    if (!is_essential_piece(x) || !is_essential_piece(y))
        return;
    out.push_back({label, GluingPattern{{x, y}, {{0, 1}}}});
}

} // namespace

std::vector<CaseSplit> case_splits(SurfaceSig sig, int xi)
{
    const int g = sig.g, b = sig.b;
    std::vector<CaseSplit> out;
    if (xi < 1)
        return out;
    if (3 * g - 3 < xi)
        add_two_piece(out, sig, xi, "X0", {g, xi - 3 * g + 3}, {0, b - xi + 3 * g - 1});
    switch (xi % 3) {
    case 1:
        add_two_piece(out, sig, xi, "case1", {(xi + 2) / 3, 1}, {g - (xi + 2) / 3, b + 1});
        break;
    case 2:
        if (b > 0)
            add_two_piece(out, sig, xi, "case2", {(xi + 1) / 3, 2}, {g - (xi + 1) / 3, b});
        break;
    default:
        if (b >= 2)
            add_two_piece(out, sig, xi, "case3", {xi / 3, 3}, {g - xi / 3, b - 1});
        if (b == 1 && g - 1 - xi / 3 >= 1)
            out.push_back({"case3-b1",
                           GluingPattern{{{xi / 3, 3}, {g - 1 - xi / 3, 2}}, {{0, 1}, {0, 1}}}});
        break;
    }
    if (b == 0 && g >= 1 && is_essential_piece({g - 1, 2}))
        out.push_back({"nonsep", GluingPattern{{{g - 1, 2}}, {{0, 0}}}});
    return out;
}

std::vector<PieceSig> constructive_decomposition(SurfaceSig sig, int xi)
{
    std::map<SurfaceSig, std::vector<PieceSig>> memo;
    auto best = [&](auto&& self, SurfaceSig s) -> std::vector<PieceSig> {
        if (auto it = memo.find(s); it != memo.end())
            return it->second;
        std::vector<PieceSig> result;
        if (s.complexity() >= xi)
            result = {s};
        for (const auto& split : case_splits(s, xi)) {
            const auto& pieces = split.pattern.pieces;
            std::vector<PieceSig> candidate;
            if (pieces.size() == 1) {
                candidate = self(self, pieces[0]);
            } else {
                auto rest = self(self, pieces[1]);
                if (rest.empty())
                    continue;
                candidate = {pieces[0]};
                candidate.insert(candidate.end(), rest.begin(), rest.end());
            }
            if (candidate.size() > result.size())
                result = std::move(candidate);
        }
        memo[s] = result;
        return result;
    };
    return best(best, sig);
}

} // namespace mcg
