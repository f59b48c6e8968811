#include <doctest.h>

#include "gws/error.hpp"
#include "gws/projgw/projgw.hpp"
#include "report_check.hpp"

using namespace gws;
using namespace gws::projgw;

TEST_CASE("phi_i restricts to delta_ij e_i") {
  for (int n = 0; n <= 3; ++n) {
    ProjSetup s(n);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        auto v = phi(s, i).restrict_to(j);
        if (i == j)
          CHECK(v == RatFunc(euler_e(s, i)));
        else
          CHECK(v.is_zero());
      }
  }
}

TEST_CASE("localization integrals") {
  ProjSetup s(2);
  const RatFunc one(s.registry(), Rational(1));
  CohomClass unit(s, {one});
  CHECK(integrate(s, unit).is_zero());
  CHECK(integrate(s, CohomClass(s, {RatFunc(s.registry(), Rational(0)), RatFunc(s.registry(), Rational(0)), one})) ==
        one);
  for (int i = 0; i <= 2; ++i) CHECK(pairing(s, phi(s, i), unit) == one);
}

TEST_CASE("interpolation inverts restriction") {
  ProjSetup s(2);
  std::vector<RatFunc> values{s.h(), s.lambda(0) * s.lambda(1), RatFunc(s.registry(), ratio(3, 2))};
  auto c = CohomClass::interpolate(s, values);
  for (int i = 0; i <= 2; ++i) CHECK(c.restrict_to(i) == values[std::size_t(i)]);
  CHECK(c * CohomClass(s, {RatFunc(s.registry(), Rational(1))}) == c);
}

TEST_CASE("solver agrees with the closed form") {
  for (int n = 0; n <= 2; ++n) {
    ProjSetup s(n);
    auto tables = solve_recursion(s, 4);
    for (const auto& t : tables)
      for (int d = 0; d <= 4; ++d) CHECK(t.coeffs[std::size_t(d)] == closed_b(s, t.i, d));
  }
}

TEST_CASE("form conversions") {
  ProjSetup s(2);
  for (int i = 0; i <= 2; ++i)
    for (int d = 0; d <= 3; ++d)
      for (Form f : {Form::B, Form::b, Form::u, Form::normalized})
        CHECK(convert_from_b(s, f, i, d, closed_b(s, i, d)) == closed_coeff(s, f, i, d));
  CHECK(parse_form("norm") == Form::normalized);
  CHECK_THROWS_AS(parse_form("x"), PreconditionError);
}

TEST_CASE("P^0 is the exponential series") {
  ProjSetup s(0);
  auto t = solve_recursion(s, 3);
  CHECK(t.size() == 1);
  CHECK(t[0].coeffs[3] == RatFunc(s.registry(), ratio(1, 6)));
}

TEST_CASE("alpha chart requires translation invariance") {
  ProjSetup s(1);
  CHECK(to_alpha(s, s.lambda(0) - s.lambda(1)).to_string() == "alpha");
  CHECK_THROWS_AS(to_alpha(s, s.lambda(0)), PreconditionError);
  CHECK_THROWS_AS(s.check_index(2), PreconditionError);
}

TEST_CASE("identity checks") {
  CHECK_REPORT(verify_theorem_3_3(ProjSetup(2), 3));
  CHECK_REPORT(verify_first_order_fractions(ProjSetup(2)));
  CHECK_REPORT(verify_degrees(ProjSetup(2), 3));
  CHECK_REPORT(euler_prefactor_identity(ProjSetup(2), 0, 2, 1, 3));
}
