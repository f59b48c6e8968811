#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gws/exactalg/multipoly.hpp"

namespace gws {

// One distinct factor of a denominator, raised to `mult`.
struct DenFactor {
  MultiPoly poly;  // primitive, integer coefficients, positive leading coefficient
  unsigned mult = 1;
};

// Quotient of two polynomials over one registry.
//
// The denominator is kept as a sorted product of distinct normalized factors
// and every rational constant lives in the numerator. Factors created by the
// library are degree-one forms (or single variables), which are irreducible,
// so cancelling every factor that divides the numerator leaves the reduced
// fraction and the printed form is canonical. Equality is decided by
// cross-multiplication whenever a non-linear factor is present.
class RatFunc {
 public:
  explicit RatFunc(RegistryPtr reg);
  RatFunc(RegistryPtr reg, const Rational& c);
  RatFunc(const MultiPoly& p);  // NOLINT(google-explicit-constructor): polynomials embed

  static RatFunc variable(const RegistryPtr& reg, std::string_view name);
  // num / den; throws DivisionByZero for a zero denominator.
  static RatFunc fraction(const MultiPoly& num, const MultiPoly& den);
  // num / prod(factors), keeping the factors separate.
  static RatFunc quotient(const MultiPoly& num, std::span<const MultiPoly> factors);

  const RegistryPtr& registry() const { return num_.registry(); }
  const MultiPoly& numerator() const { return num_; }
  std::span<const DenFactor> denominator_factors() const { return den_; }
  MultiPoly denominator() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  bool is_constant() const { return den_.empty() && num_.is_constant(); }
  Rational constant_value() const;
  bool depends_on(std::size_t var) const;

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc inverse() const;
  RatFunc pow(int e) const;

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  bool operator==(const RatFunc& o) const;
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  // Evaluation homomorphism. bindings[i], when set, replaces variable i and
  // must live over the same registry. Throws PoleError when a denominator
  // factor of the reduced form vanishes identically.
  RatFunc substitute(std::span<const std::optional<RatFunc>> bindings) const;
  RatFunc substitute(const std::map<std::string, RatFunc>& bindings) const;

  // Image in another registry: each variable goes to bindings[name] when
  // present, otherwise to the target variable of the same name.
  RatFunc change_registry(const RegistryPtr& target,
                          const std::map<std::string, RatFunc>& bindings = {}) const;

  std::string to_string() const;

 private:
  friend RatFunc make_ratfunc(MultiPoly num, std::vector<DenFactor> den, bool reduce_all);

  void check_same(const RatFunc& o) const;
  bool all_factors_linear() const;

  MultiPoly num_;
  std::vector<DenFactor> den_;
};

RatFunc operator+(const Rational& c, const RatFunc& f);
RatFunc operator*(const Rational& c, const RatFunc& f);

// Image of a polynomial under a full variable map (one image per source
// variable, images over `target`).
RatFunc evaluate(const MultiPoly& p, const RegistryPtr& target, std::span<const RatFunc> images);

}  // namespace gws
