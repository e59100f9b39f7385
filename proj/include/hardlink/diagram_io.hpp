#pragma once

#include <optional>
#include <string>

#include "hardlink/diagram.hpp"

namespace hardlink {

// JSON with fields: format, free_loops, crossings (4-tuples of signed arc
// references, +(a+1) head / -(a+1) tail), components (arc cycles per
// component, empty for free loops), roles, and optionally the layout.
// Serialization is deterministic and round-trips byte-exactly.
std::string diagram_to_json(const LinkDiagram& d, const DiagramLayout* layout = nullptr);

struct ParsedDiagram {
    LinkDiagram diagram;
    std::optional<DiagramLayout> layout;
};

ParsedDiagram diagram_from_json(const std::string& text);

}  // namespace hardlink
