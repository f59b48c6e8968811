#include "gws/exactalg/monomial.hpp"

#include <limits>

#include "gws/error.hpp"

namespace gws {

Monomial Monomial::variable(std::size_t index, unsigned power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= kMaxVars) throw Error("variable index out of range");
  if (e > std::numeric_limits<Exponent>::max()) throw CapExceeded("exponent overflow");
  exp_[i] = static_cast<Exponent>(e);
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exp_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned(exp_[i]) + other.exp_[i];
    if (e > std::numeric_limits<Exponent>::max()) throw CapExceeded("exponent overflow");
    r.exp_[i] = static_cast<Exponent>(e);
  }
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = static_cast<Exponent>(exp_[i] - divisor.exp_[i]);
  return r;
}

int Monomial::compare(const Monomial& other) const {
  unsigned da = degree(), db = other.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp_[i] != other.exp_[i]) return exp_[i] < other.exp_[i] ? -1 : 1;
  return 0;
}

std::size_t Monomial::hash() const {
  // FNV-1a over the exponent words.
  std::size_t h = 1469598103934665603ull;
  for (auto e : exp_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace gws
