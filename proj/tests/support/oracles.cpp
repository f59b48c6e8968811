#include "oracles.hpp"

#include <sstream>

#include "gws/exactalg/parse.hpp"

namespace gws::oracle {

namespace {

long fact(int n) {
  long f = 1;
  for (int m = 2; m <= n; ++m) f *= m;
  return f;
}

// "(x + 1*h)*(x + 2*h)*...*(x + p*h)" or "1".
std::string rising(const std::string& x, int p) {
  if (p == 0) return "1";
  std::ostringstream os;
  for (int m = 1; m <= p; ++m) os << (m > 1 ? "*" : "") << "(" << x << " + " << m << "*h)";
  return os.str();
}

}  // namespace

RatFunc proj_b(const RegistryPtr& reg, int n, int i, int d) {
  std::ostringstream os;
  os << "1/(" << fact(d);
  for (int j = 0; j <= n; ++j)
    if (j != i)
      for (int m = 1; m <= d; ++m) os << "*(lambda_" << i << " - lambda_" << j << " + " << m << "*h)";
  os << ")";
  return parse_ratfunc(reg, os.str());
}

Rational toda_a(int i, int j) {
  Rational fi(fact(i)), fj(fact(j));
  Rational q = Rational(fact(i + j)) / (fi * fi * fi * fj * fj * fj);
  q.canonicalize();
  return q;
}

RatFunc a2_a(const RegistryPtr& reg, int i, int j) {
  std::ostringstream os;
  os << rising("alpha_1 + alpha_2", i + j) << "/(" << fact(i) * fact(j) << "*" << rising("alpha_1", i) << "*"
     << rising("alpha_2", j) << "*" << rising("alpha_1 + alpha_2", i) << "*" << rising("alpha_1 + alpha_2", j)
     << ")";
  return parse_ratfunc(reg, os.str());
}

RatFunc simple_coeff(const RegistryPtr& reg, const std::string& alpha, int k) {
  long kk = 1;
  for (int m = 0; m < k; ++m) kk *= k;
  std::ostringstream os;
  os << kk << "/(" << fact(k) * fact(k) << "*" << alpha << "^" << (k - 1) << ")";
  return parse_ratfunc(reg, os.str());
}

}  // namespace gws::oracle
