#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "painted/autgroup.hpp"
#include "painted/marking.hpp"
#include "painted/outer.hpp"
#include "painted/painted.hpp"
#include "painted/scheme.hpp"

namespace painted {

using Json = nlohmann::ordered_json;

// All *_from_json throw ParseError on malformed input and the module's own
// errors (NotAffine, KacViolation, DiagramMismatch, ...) on invalid content.

/// {"nodes", "cartan", "kind", "series"}
Json to_json(const CartanScheme& scheme);
CartanScheme scheme_from_json(const Json& j);

/// Scheme record plus {"marks", "color": ["white"|"black"], "black", "r"}
Json to_json(const PaintedDiagram& diagram);
PaintedDiagram painted_from_json(const Json& j);

/// {"degree", "order", "label", "generators"}
Json to_json(const PermGroup& group);
PermGroup group_from_json(const Json& j);

/// {"form"?, "diagram", "d", "t"} with t as reduced "p/q" strings.
Json to_json(const Marking& marking);
/// Reads the diagram from "diagram" if present, else constructs "form".
Marking marking_from_json(const Json& j);

/// {"order", "label", "factors": {...}, "group"?}
Json to_json(const OuterGroupDesc& desc);
OuterGroupDesc outer_from_json(const Json& j);

/// Graphviz: black vertices filled, one edge per bond multiplicity, the
/// arrow of a multiple bond pointing at the short root, marks in labels.
std::string to_dot(const PaintedDiagram& diagram, const std::string& title = "P");
std::string to_dot(const CartanScheme& scheme, const std::string& title = "D");

/// Text drawing: the longest node path as a spine, remaining vertices as
/// branch notes and, for cycles, a closing-edge note. `o` white, `*` black.
std::string render_ascii(const CartanScheme& scheme, std::span<const Color> color = {},
                         const Marks* marks = nullptr);
std::string render_ascii(const PaintedDiagram& diagram);

}  // namespace painted
