#pragma once

#include <array>
#include <functional>
#include <map>
#include <utility>

#include "gws/exactalg/ratfunc.hpp"
#include "gws/report.hpp"

namespace gws::toda3 {

// Registry alpha_1, alpha_2, h, lambda_0, lambda_1, lambda_2, u_0, u_1, u_2, v_1, v_2.
const RegistryPtr& toda_registry();
RatFunc var(std::string_view name);
// alpha_i -> lambda_i - lambda_{i-1}.
RatFunc to_lambda(const RatFunc& f);

// Coefficients of v_1^i v_2^j for i + j <= order; absent entries are zero.
class BiSeries {
 public:
  explicit BiSeries(int order) : order_(order) {}

  int order() const { return order_; }
  RatFunc at(int i, int j) const;
  void set(int i, int j, const RatFunc& c);
  const std::map<std::pair<int, int>, RatFunc>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  BiSeries map(const std::function<RatFunc(const RatFunc&)>& f) const;

 private:
  int order_;
  std::map<std::pair<int, int>, RatFunc> coeffs_;
};

// Sum of coefficient * v_1^e v_2^f o (v_1 d_1)^a (v_2 d_2)^b.
class TodaOperator {
 public:
  using Key = std::array<int, 4>;  // a, b, e, f

  static TodaOperator constant(const RatFunc& c);
  static TodaOperator theta(int which);  // v_which d_which
  static TodaOperator v(int which);      // multiplication by v_which

  TodaOperator operator+(const TodaOperator& o) const;
  TodaOperator operator-(const TodaOperator& o) const;
  TodaOperator operator*(const TodaOperator& o) const;  // composition
  TodaOperator operator*(const RatFunc& c) const;
  bool is_zero() const { return terms_.empty(); }
  int max_shift() const;
  const std::map<Key, RatFunc>& terms() const { return terms_; }
  TodaOperator map(const std::function<RatFunc(const RatFunc&)>& f) const;
  bool operator==(const TodaOperator& o) const;

 private:
  void add(const Key& k, const RatFunc& c);
  std::map<Key, RatFunc> terms_;
};

struct CharPolyCoeffs {
  MultiPoly p1, p2, p3;  // in u_0, u_1, u_2, v_1, v_2
};
CharPolyCoeffs char_poly();

struct TodaOperators {
  TodaOperator d1, d2, d3;
};
// Plain: u_0 -> -v_1d_1, u_1 -> v_1d_1 - v_2d_2, u_2 -> v_2d_2. Equivariant:
// u_0 -> lambda_0 - h v_1d_1, u_1 -> lambda_1 + h(v_1d_1 - v_2d_2),
// u_2 -> lambda_2 + h v_2d_2, minus sigma_i(lambda).
TodaOperators build_operators(bool equivariant);
TodaOperator plain_d2_printed();
TodaOperator plain_d3_printed();

// Exact action. Operators only raise degree, so the result is exact through
// the input order.
BiSeries apply(const TodaOperator& op, const BiSeries& s);

Rational closed_a(int i, int j);
Rational batyrev_b(int i, int j);
RatFunc closed_a_equivariant(int i, int j);  // includes 1/h^{i+j}
BiSeries closed_phi(int order);
BiSeries closed_phi_equivariant(int order);  // in lambda, via the chart

// Tables rebuilt from a_00 = 1 using only the second-operator recursion.
BiSeries rebuild_plain(int order);
BiSeries rebuild_equivariant(int order);

VerificationReport verify_recursions_plain(int n);
VerificationReport verify_batyrev(int n);
VerificationReport verify_recursions_equivariant(int n);
VerificationReport verify_operator_annihilation(int n, bool equivariant, bool negative_control = false);
VerificationReport verify_corollary_3_5(int n);

std::string golden_lines(const BiSeries& s);

}  // namespace gws::toda3
