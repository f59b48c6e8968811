#pragma once

#include <string_view>
#include <vector>

#include "gws/exactalg/ratfunc.hpp"

namespace gws {

struct LinearFactor {
  RatFunc root;      // free of the distinguished variable
  MultiPoly factor;  // degree one in the distinguished variable
};

// scale * prod(factor) with pairwise distinct roots in variable `var`.
struct LinearFactorization {
  std::size_t var = 0;
  std::vector<LinearFactor> factors;
  RatFunc scale;

  // Throws PreconditionError when a factor is not of degree one in `var`
  // or two roots coincide.
  static LinearFactorization build(std::string_view var, std::vector<MultiPoly> factors, RatFunc scale);

  RatFunc product() const;  // scale * prod(factor)
};

struct PartialTerm {
  RatFunc residue;
  MultiPoly factor;
};

// numerator / (scale * prod factors) as sum of residue / factor.
// Requires deg_var(numerator) < number of factors.
std::vector<PartialTerm> partial_fractions(const LinearFactorization& f, const MultiPoly& numerator);

RatFunc recombine(const std::vector<PartialTerm>& terms);

}  // namespace gws
