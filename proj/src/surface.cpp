#include "mcg/surface.hpp"

#include <charconv>

namespace mcg {

namespace {

int parse_nonnegative(std::string_view part, std::string_view whole)
{
    int value = -1;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || ptr != part.data() + part.size() || value < 0)
        throw InvalidArgument("invalid surface signature '" + std::string(whole) +
                              "' (expected g,b with nonnegative integers)");
    return value;
}

} // namespace

SurfaceSig parse_signature(std::string_view text)
{
    auto comma = text.find(',');
    if (comma == std::string_view::npos)
        throw InvalidArgument("invalid surface signature '" + std::string(text) +
                              "' (expected g,b)");
    SurfaceSig s;
    s.g = parse_nonnegative(text.substr(0, comma), text);
    s.b = parse_nonnegative(text.substr(comma + 1), text);
    return s;
}

std::string to_string(SurfaceSig s)
{
    return "(" + std::to_string(s.g) + "," + std::to_string(s.b) + ")";
}

} // namespace mcg
