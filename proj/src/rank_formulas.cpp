#include "mcg/rank_formulas.hpp"

#include <algorithm>

namespace mcg {

namespace {

// Floor division for a positive divisor.
int floor_div(int num, int den)
{
    int q = num / den;
    if ((num % den != 0) && (num < 0))
        --q;
    return q;
}

int ceil_div(int num, int den) { return -floor_div(-num, den); }

void require_k_in_range(SurfaceSig sig, int k)
{
    if (sig.complexity() < 1)
        throw InvalidArgument("surface " + to_string(sig) + " has complexity < 1");
    if (k < 1 || k > sig.complexity())
        throw InvalidArgument("k=" + std::to_string(k) + " outside [1, " +
                              std::to_string(sig.complexity()) + "] for " + to_string(sig));
}

} // namespace

std::string_view to_string(GeometryKind kind)
{
    switch (kind) {
    case GeometryKind::Hyperbolic: return "Hyperbolic";
    case GeometryKind::RelativelyHyperbolic: return "RelativelyHyperbolic";
    case GeometryKind::Thick: return "Thick";
    }
    return "?";
}

std::string_view to_string(Provenance source)
{
    return source == Provenance::Formula ? "formula" : "oracle";
}

int a_of(int x) { return ceil_div(2 * x + 1, 3); }

int mu_formula(SurfaceSig sig, int xi)
{
    if (xi <= 0)
        throw InvalidArgument("mu requires xi >= 1, got " + std::to_string(xi));
    const int g = sig.g, b = sig.b;
    if (xi > sig.complexity())
        return 0;
    if (b == 0 && xi == 3 * g - 3)
        return 1;
    return std::min(floor_div(3 * g - 2 + b, xi + 1), floor_div(2 * g - 2 + b, a_of(xi)));
}

int quasiflat_rank(SurfaceSig sig, int k)
{
    require_k_in_range(sig, k);
    const int g = sig.g, b = sig.b;
    if (b == 0 && k == 1)
        return 1;
    return std::min(floor_div(2 * g - 2 + b, a_of(3 * g - 2 + b - k)),
                    floor_div(3 * g - 2 + b, 3 * g - 1 + b - k));
}

int witness_threshold(SurfaceSig sig, int k)
{
    require_k_in_range(sig, k);
    return 3 * sig.g - 2 + sig.b - k;
}

bool in_relhyp_table(SurfaceSig sig, int k)
{
    const int g = sig.g, b = sig.b;
    if (k < 1 || k > sig.complexity())
        return false;
    const bool g_even = g % 2 == 0;
    if (g_even && b >= 2 && b % 2 == 0)
        return 2 * k == 3 * g + b;
    if (g_even && b == 0)
        return 2 * k == 3 * g || 2 * k == 3 * g + 2;
    if (!g_even && (b == 0 || b == 2))
        return 2 * k == 3 * g + 3;
    if (!g_even && b >= 3 && b % 2 == 1)
        return 2 * k == 3 * g + b;
    return false;
}

Classification classify_paper(SurfaceSig sig, int k)
{
    if (sig.complexity() < 2)
        throw InvalidArgument("classification needs complexity >= 2, got " +
                              std::to_string(sig.complexity()) + " for " + to_string(sig));
    require_k_in_range(sig, k);
    if (quasiflat_rank(sig, k) == 1)
        return {GeometryKind::Hyperbolic, Provenance::Formula};
    if (in_relhyp_table(sig, k))
        return {GeometryKind::RelativelyHyperbolic, Provenance::Formula};
    return {GeometryKind::Thick, Provenance::Formula};
}

} // namespace mcg
