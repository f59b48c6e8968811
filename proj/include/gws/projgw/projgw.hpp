#pragma once

#include <string>
#include <vector>

#include "gws/exactalg/ratfunc.hpp"
#include "gws/report.hpp"

namespace gws::projgw {

// Equivariant data of P^n: variables lambda_0..lambda_n, h, p, q.
class ProjSetup {
 public:
  explicit ProjSetup(int n);

  int n() const { return n_; }
  const RegistryPtr& registry() const { return reg_; }

  RatFunc lambda(int i) const;
  RatFunc h() const;
  RatFunc p() const;
  RatFunc q() const;
  std::size_t p_index() const { return p_; }

  void check_index(int i) const;

 private:
  int n_;
  RegistryPtr reg_;
  std::size_t p_;
};

// Polynomial in p of degree <= n whose coefficients are rational in lambda
// and h: the canonical representative modulo prod_i (p - lambda_i).
class CohomClass {
 public:
  CohomClass(const ProjSetup& setup, std::vector<RatFunc> coeffs);  // coeffs[k] of p^k, reduced if needed
  static CohomClass from_ratfunc(const ProjSetup& setup, const RatFunc& f);  // f polynomial in p
  // The unique representative taking value values[i] at p = lambda_i.
  static CohomClass interpolate(const ProjSetup& setup, const std::vector<RatFunc>& values);

  const std::vector<RatFunc>& coeffs() const { return coeffs_; }
  RatFunc restrict_to(int i) const;  // value at p = lambda_i
  RatFunc as_ratfunc() const;

  CohomClass operator+(const CohomClass& o) const;
  CohomClass operator*(const CohomClass& o) const;
  CohomClass operator*(const RatFunc& c) const;
  bool operator==(const CohomClass& o) const;

 private:
  const ProjSetup* setup_;
  std::vector<RatFunc> coeffs_;
};

CohomClass phi(const ProjSetup& setup, int i);
MultiPoly euler_e(const ProjSetup& setup, int i);
RatFunc integrate(const ProjSetup& setup, const CohomClass& f);
RatFunc pairing(const ProjSetup& setup, const CohomClass& f, const CohomClass& g);

enum class Form { B, b, u, normalized };
std::string to_string(Form f);
Form parse_form(const std::string& s);

RatFunc closed_b(const ProjSetup& setup, int i, int d);
RatFunc closed_B(const ProjSetup& setup, int i, int d);
RatFunc closed_u(const ProjSetup& setup, int i, int d);
RatFunc normalized_coeff(const ProjSetup& setup, int i, int d);
RatFunc closed_coeff(const ProjSetup& setup, Form form, int i, int d);

// b-form coefficient converted to `form` (the normalized form needs e_i).
RatFunc convert_from_b(const ProjSetup& setup, Form form, int i, int d, const RatFunc& b);

RatFunc recursion_coeff(const ProjSetup& setup, int i, int j, int k);

struct ProjSeriesTable {
  int i = 0;
  Form form = Form::b;
  std::vector<RatFunc> coeffs;  // coeffs[d]
};

// Tables s_0..s_n in b-form through degree d_max, built only from the
// recursion and s_i(0) = 1. For n = 0 there is no recursion and the table
// of exp(q/h) is returned.
std::vector<ProjSeriesTable> solve_recursion(const ProjSetup& setup, int d_max);
ProjSeriesTable to_form(const ProjSetup& setup, const ProjSeriesTable& t, Form form);

// Right-hand side of the recursion at (i, d) evaluated on the supplied
// b-form tables.
RatFunc recursion_rhs(const ProjSetup& setup, const std::vector<ProjSeriesTable>& tables, int i, int d);

VerificationReport verify_theorem_3_3(const ProjSetup& setup, int d_max);
VerificationReport verify_solver(const ProjSetup& setup, int d_max);
VerificationReport verify_first_order_fractions(const ProjSetup& setup);
VerificationReport verify_degrees(const ProjSetup& setup, int d_max);
VerificationReport euler_prefactor_identity(const ProjSetup& setup, int i, int j, int k, int d);

// n = 1 only: the image under lambda_0 - lambda_1 -> alpha, over the
// registry {alpha, h, q}. Throws PreconditionError if f is not a function of
// the difference.
RatFunc to_alpha(const ProjSetup& setup, const RatFunc& f);
const RegistryPtr& alpha_registry();

// "c_0 + c_1*q + ..." with each term printed in canonical form.
std::string series_text(const std::vector<RatFunc>& coeffs, const RatFunc& q);

// Series coefficient text "n i d <value>" per line.
std::string golden_lines(const ProjSetup& setup, const std::vector<ProjSeriesTable>& tables);

}  // namespace gws::projgw
