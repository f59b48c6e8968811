#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

#include "gws/exactalg/var_registry.hpp"

namespace gws {

// Exponent vector over a registry of at most kMaxVars variables.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;

  static Monomial variable(std::size_t index, unsigned power = 1);

  Exponent operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, unsigned e);

  unsigned degree() const;
  bool is_one() const { return degree() == 0; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  // Caller guarantees divides(other) is true for `other / *this`.
  Monomial operator/(const Monomial& divisor) const;

  bool operator==(const Monomial& other) const { return exp_ == other.exp_; }
  bool operator!=(const Monomial& other) const { return exp_ != other.exp_; }

  // Graded lex: total degree first, then lex with variable 0 largest.
  // Returns <0, 0, >0.
  int compare(const Monomial& other) const;

  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVars> exp_{};
};

// Descending graded-lex order (largest monomial first).
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.compare(b) > 0; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace gws
