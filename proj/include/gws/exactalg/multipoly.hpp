#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gws/exactalg/monomial.hpp"
#include "gws/exactalg/var_registry.hpp"

namespace gws {

using Rational = mpq_class;
using Integer = mpz_class;

// Canonical num/den (the two-argument mpq_class constructor does not reduce).
inline Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

struct Term {
  Monomial mono;
  Rational coef;
};

// Sparse multivariate polynomial with exact rational coefficients.
//
// Terms are kept sorted in descending graded-lex order with no zero
// coefficients; the zero polynomial has no terms. Values are immutable once
// built: every operation returns a new polynomial.
class MultiPoly {
 public:
  explicit MultiPoly(RegistryPtr reg);
  MultiPoly(RegistryPtr reg, const Rational& c);

  static MultiPoly variable(RegistryPtr reg, std::size_t index);
  static MultiPoly variable(const RegistryPtr& reg, std::string_view name);
  static MultiPoly monomial(RegistryPtr reg, const Monomial& m, const Rational& c);
  // Terms in any order, duplicates allowed; zeros dropped.
  static MultiPoly from_terms(RegistryPtr reg, std::vector<Term> terms);

  const RegistryPtr& registry() const { return reg_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value of a constant polynomial (zero for the zero polynomial).
  Rational constant_value() const;
  const Term& leading_term() const { return terms_.front(); }
  Rational coefficient(const Monomial& m) const;

  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  bool depends_on(std::size_t var) const { return degree_in(var) > 0; }

  // Weighted degree of every term, or nullopt when terms disagree or the
  // polynomial is zero.
  std::optional<long> homogeneous_degree(std::span<const long> weights) const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rational& c) const;
  MultiPoly pow(unsigned e) const;

  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // Quotient when `divisor` divides this exactly, nullopt otherwise.
  std::optional<MultiPoly> exact_divide(const MultiPoly& divisor) const;

  // Positive rational c with this / c having coprime integer coefficients
  // and a positive leading coefficient; the returned sign carries the sign
  // of the leading coefficient. Zero for the zero polynomial.
  Rational content() const;
  // this / content(): primitive integer polynomial, positive leading coefficient.
  MultiPoly primitive_part() const;

  // Coefficients of this viewed as a polynomial in `var`: result[e] is the
  // coefficient of var^e (free of var).
  std::vector<MultiPoly> coefficients_in(std::size_t var) const;

  // Polynomial evaluation homomorphism: variable i is replaced by values[i]
  // when values[i] is set. Values must share this registry.
  MultiPoly substitute(std::span<const std::optional<MultiPoly>> values) const;

  // Deterministic total order used to sort denominator factors.
  int compare(const MultiPoly& o) const;

  std::string to_string() const;

 private:
  MultiPoly(RegistryPtr reg, std::vector<Term> sorted_terms, int /*tag*/);
  void check_same(const MultiPoly& o) const;

  RegistryPtr reg_;
  std::vector<Term> terms_;
};

MultiPoly operator*(const Rational& c, const MultiPoly& p);

std::string rational_to_string(const Rational& q);

}  // namespace gws
