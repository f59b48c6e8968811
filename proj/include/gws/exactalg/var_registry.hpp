#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gws {

inline constexpr std::size_t kMaxVars = 16;

// Ordered, immutable list of formal variable names. The position of a name
// is its index in every exponent vector built over this registry, and the
// order fixes the graded-lex monomial order (index 0 is the largest variable).
class VarRegistry {
 public:
  explicit VarRegistry(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> find(std::string_view name) const;
  // Throws gws::Error when the name is unknown.
  std::size_t index(std::string_view name) const;

  bool operator==(const VarRegistry& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using RegistryPtr = std::shared_ptr<const VarRegistry>;

RegistryPtr make_registry(std::vector<std::string> names);

// Same object or same names in the same order.
bool same_registry(const RegistryPtr& a, const RegistryPtr& b);

}  // namespace gws
