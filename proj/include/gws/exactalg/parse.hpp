#pragma once

#include <string_view>

#include "gws/exactalg/ratfunc.hpp"

namespace gws {

// Reads the canonical text form (and any expression built from integers,
// registry variables, + - * / ^ and parentheses). Throws ParseError.
RatFunc parse_ratfunc(const RegistryPtr& reg, std::string_view text);

}  // namespace gws
