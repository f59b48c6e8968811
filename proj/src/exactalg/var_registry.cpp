#include "gws/exactalg/var_registry.hpp"

#include <set>

#include "gws/error.hpp"

namespace gws {

VarRegistry::VarRegistry(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVars)
    throw CapExceeded("variable registry holds at most " + std::to_string(kMaxVars) + " names");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error("empty variable name");
    if (!seen.insert(n).second) throw Error("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> VarRegistry::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t VarRegistry::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error("unknown variable '" + std::string(name) + "'");
}

RegistryPtr make_registry(std::vector<std::string> names) {
  return std::make_shared<const VarRegistry>(std::move(names));
}

bool same_registry(const RegistryPtr& a, const RegistryPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace gws
