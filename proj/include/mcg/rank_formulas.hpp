#pragma once

#include "mcg/surface.hpp"

#include <string>
#include <string_view>

namespace mcg {

enum class GeometryKind { Hyperbolic, RelativelyHyperbolic, Thick };
enum class Provenance { Formula, Oracle };

struct Classification {
    GeometryKind kind;
    Provenance source;

    bool operator==(const Classification&) const = default;
};

std::string_view to_string(GeometryKind kind);
std::string_view to_string(Provenance source);

/// ceil((2x+1)/3), exact for negative x as well.
int a_of(int x);

/// Maximal number of pieces in a cut of `sig` into connected pieces of
/// complexity >= xi. Zero when xi exceeds the complexity of the surface; one
/// for the closed exception b = 0, xi = 3g-3. Throws on xi <= 0.
int mu_formula(SurfaceSig sig, int xi);

/// Quasi-flat rank of the k-multicurve graph (equivalently of the
/// complexity-(xi0-k) graph). Requires 1 <= k <= complexity(sig).
int quasiflat_rank(SurfaceSig sig, int k);

/// Complexity a connected essential subsurface needs to be a witness for the
/// k-multicurve graph: 3g-2+b-k.
int witness_threshold(SurfaceSig sig, int k);

/// True iff (g,b,k) appears verbatim in the relatively hyperbolic table and
/// 1 <= k <= complexity. Table entries whose k leaves that range never match.
bool in_relhyp_table(SurfaceSig sig, int k);

/// Classification read off the closed-form rank and the printed table.
/// Never consults the decomposition oracle. Requires complexity >= 2.
Classification classify_paper(SurfaceSig sig, int k);

} // namespace mcg
