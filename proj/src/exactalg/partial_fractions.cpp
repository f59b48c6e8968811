#include "gws/exactalg/partial_fractions.hpp"

#include "gws/error.hpp"

namespace gws {

LinearFactorization LinearFactorization::build(std::string_view var, std::vector<MultiPoly> factors,
                                               RatFunc scale) {
  LinearFactorization out{0, {}, std::move(scale)};
  if (out.scale.is_zero()) throw PreconditionError("partial fractions: zero scale");
  const auto& reg = out.scale.registry();
  out.var = reg->index(var);
  if (out.scale.depends_on(out.var)) throw PreconditionError("partial fractions: scale depends on the variable");
  for (auto& f : factors) {
    if (!same_registry(f.registry(), reg)) throw RegistryMismatch();
    auto c = f.coefficients_in(out.var);
    if (c.size() != 2) throw PreconditionError("partial fractions: factor " + f.to_string() + " is not linear");
    RatFunc root = -RatFunc(c[0]) / RatFunc(c[1]);
    for (const auto& g : out.factors)
      if (g.root == root) throw PreconditionError("partial fractions: repeated root " + root.to_string());
    out.factors.push_back({std::move(root), std::move(f)});
  }
  return out;
}

RatFunc LinearFactorization::product() const {
  RatFunc r = scale;
  for (const auto& f : factors) r *= RatFunc(f.factor);
  return r;
}

std::vector<PartialTerm> partial_fractions(const LinearFactorization& f, const MultiPoly& numerator) {
  if (!same_registry(numerator.registry(), f.scale.registry())) throw RegistryMismatch();
  if (f.factors.empty()) throw PreconditionError("partial fractions: no factors");
  if (numerator.degree_in(f.var) >= f.factors.size())
    throw PreconditionError("partial fractions: numerator degree is not below the factor count");
  const auto& reg = f.scale.registry();
  std::vector<std::optional<RatFunc>> at(reg->size());
  std::vector<PartialTerm> out;
  for (std::size_t k = 0; k < f.factors.size(); ++k) {
    at[f.var] = f.factors[k].root;
    RatFunc residue = RatFunc(numerator).substitute(at) / f.scale;
    for (std::size_t l = 0; l < f.factors.size(); ++l)
      if (l != k) residue *= RatFunc(f.factors[l].factor).substitute(at).inverse();
    out.push_back({std::move(residue), f.factors[k].factor});
  }
  return out;
}

RatFunc recombine(const std::vector<PartialTerm>& terms) {
  if (terms.empty()) throw PreconditionError("recombine: no terms");
  RatFunc sum(terms.front().residue.registry());
  for (const auto& t : terms) sum += t.residue / RatFunc(t.factor);
  return sum;
}

}  // namespace gws
