#pragma once

#include "mcg/decomposition.hpp"
#include "mcg/graph_lab.hpp"
#include "mcg/normal_curves.hpp"
#include "mcg/triangulation.hpp"

#include "json.hpp"

#include <string>

namespace mcg {

using Json = nlohmann::ordered_json;

Json to_json(SurfaceSig s);
SurfaceSig surface_from_json(const Json& j);

Json to_json(const GluingPattern& p);
GluingPattern pattern_from_json(const Json& j);

Json to_json(const Triangulation& T);

/// {"components":[{"weights":[...],"mult":n},...]}, plus "surface" when given.
Json to_json(const Multicurve& m);
Multicurve multicurve_from_json(const Json& j);

/// {"kind":"mk"|"ixi","param":p,"surface":{...},"max_weight":W,
///  "curves":[[...]],"vertices":[[curve index,...]],"edges":[[i,j],...]}
Json to_json(const MulticurveGraphInstance& G);
MulticurveGraphInstance graph_from_json(const Json& j);

std::string to_dot(const MulticurveGraphInstance& G);

std::string_view kind_tag(GraphKind kind);
GraphKind parse_kind_tag(std::string_view tag);

} // namespace mcg
