#pragma once

#include "tqft/diagram.hpp"

#include <string>
#include <string_view>

namespace tqft {

// {"crossings": [[a,b,c,d], ...], "free_loops": m, "boundary": [ids...]}
// "free_loops" and "boundary" are optional and default to 0 and [].
// Throws Error(parse_error) on malformed input and Error(invalid_diagram) on bad arc bookkeeping.
TangleDiagram parse_diagram_json(std::string_view text);
std::string diagram_to_json(const TangleDiagram& t);

} // namespace tqft
