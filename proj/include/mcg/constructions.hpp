#pragma once

#include "mcg/decomposition.hpp"

#include <string>
#include <vector>

namespace mcg {

/// One explicit cut used by the lower-bound argument for mu.
/// `pattern.pieces[0]` is the piece X of complexity exactly xi (absent for
/// the non-separating move on closed surfaces, which has a single piece).
struct CaseSplit {
    std::string label;  // "X0", "case1", "case2", "case3", "case3-b1", "nonsep"
    GluingPattern pattern;
};

/// All moves whose side conditions hold for (sig, xi):
///   X0       3g-3 < xi <= xi0-1       (g, xi-3g+3) | (0, b-xi+3g-1)
///   case1    xi = 1 mod 3             ((xi+2)/3, 1) | (g-(xi+2)/3, b+1)
///   case2    xi = 2 mod 3, b > 0      ((xi+1)/3, 2) | (g-(xi+1)/3, b)
///   case3    xi = 0 mod 3, b >= 2     (xi/3, 3) | (g-xi/3, b-1)
///   case3-b1 xi = 0 mod 3, b = 1      (xi/3, 3) = (g-1-xi/3, 2), two curves
///   nonsep   b = 0, g >= 1            (g-1, 2) with one loop
/// Two-piece moves additionally need xi <= xi0-1 and an essential remainder.
std::vector<CaseSplit> case_splits(SurfaceSig sig, int xi);

/// Pieces of complexity >= xi obtained by chaining case_splits recursively,
/// maximizing the count. Empty when xi exceeds the complexity of sig.
std::vector<PieceSig> constructive_decomposition(SurfaceSig sig, int xi);

} // namespace mcg
