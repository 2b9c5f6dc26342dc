#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mcg {

/// Error raised for arguments outside an operation's domain.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Compact orientable surface of genus g with b boundary components.
///
/// Complexity and Euler characteristic are always derived, never stored.
/// Signatures with complexity <= 0 are representable (pants and annuli show up
/// as decomposition pieces) but graph builders reject them.
struct SurfaceSig {
    int g = 0;
    int b = 0;

    constexpr int complexity() const noexcept { return 3 * g - 3 + b; }
    constexpr int euler() const noexcept { return 2 - 2 * g - b; }

    /// 3g-3+b >= 1: the multicurve and interpolating graphs are defined.
    constexpr bool graph_admissible() const noexcept { return complexity() >= 1; }

    auto operator<=>(const SurfaceSig&) const = default;
};

/// A connected piece of a decomposition. Same data, different role.
using PieceSig = SurfaceSig;

constexpr int complexity(SurfaceSig s) noexcept { return s.complexity(); }
constexpr int euler(SurfaceSig s) noexcept { return s.euler(); }

/// Pieces of a decomposition of a larger surface must have negative Euler
/// characteristic; this excludes spheres, disks, annuli and the closed torus.
constexpr bool is_essential_piece(PieceSig s) noexcept { return s.euler() <= -1; }

/// Parses "g,b". Throws InvalidArgument on malformed or negative input.
SurfaceSig parse_signature(std::string_view text);

std::string to_string(SurfaceSig s);

} // namespace mcg
