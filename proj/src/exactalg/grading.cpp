#include "gws/exactalg/grading.hpp"

#include <vector>

namespace gws {

namespace {

std::optional<long> degree_with(const RatFunc& f, const std::vector<long>& w) {
  if (f.is_zero()) return std::nullopt;
  auto d = f.numerator().homogeneous_degree(w);
  if (!d) return std::nullopt;
  long total = *d;
  for (const auto& fac : f.denominator_factors()) {
    auto e = fac.poly.homogeneous_degree(w);
    if (!e) return std::nullopt;
    total -= *e * long(fac.mult);
  }
  return total;
}

}  // namespace

std::optional<long> homogeneous_degree(const RatFunc& f, const std::map<std::string, long>& weights) {
  const auto& reg = f.registry();
  std::vector<long> w(reg->size(), 0);
  for (const auto& [name, value] : weights) w[reg->index(name)] = value;
  return degree_with(f, w);
}

std::optional<long> homogeneous_degree(const RatFunc& f) {
  return degree_with(f, std::vector<long>(f.registry()->size(), 1));
}

}  // namespace gws
