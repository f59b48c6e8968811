#pragma once

#include <map>
#include <optional>
#include <string>

#include "gws/exactalg/ratfunc.hpp"

namespace gws {

// Weighted degree of f, or nullopt when f is zero or not homogeneous.
// Variables missing from `weights` have weight 0.
std::optional<long> homogeneous_degree(const RatFunc& f, const std::map<std::string, long>& weights);

// Every variable of the registry with weight 1.
std::optional<long> homogeneous_degree(const RatFunc& f);

}  // namespace gws
