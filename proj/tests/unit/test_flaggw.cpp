#include <doctest.h>

#include "gws/error.hpp"
#include "gws/exactalg/grading.hpp"
#include "gws/flaggw/flaggw.hpp"
#include "report_check.hpp"

using namespace gws;
using namespace gws::flaggw;

namespace {

const std::vector<std::pair<char, int>> kTypes{{'A', 2}, {'A', 3}, {'B', 2}, {'C', 2}, {'G', 2}};

}  // namespace

TEST_CASE("pruned and unpruned coefficient products agree") {
  for (auto [t, n] : kTypes) {
    FlagSetup setup = FlagSetup::type(t, n);
    for (const auto& a : setup.system().positive_roots())
      for (int k = 1; k <= 3; ++k) {
        CAPTURE(t);
        CAPTURE(roots::root_to_string(a));
        CAPTURE(k);
        CHECK(coeff_C_id(setup, a, k, true) == coeff_C_id(setup, a, k, false));
      }
  }
}

TEST_CASE("normal-bundle and literal coefficients agree on simply-laced types") {
  for (auto [t, n] : {std::pair{'A', 2}, {'A', 3}}) {
    FlagSetup setup = FlagSetup::type(t, n);
    for (const auto& a : setup.system().positive_roots())
      for (int k = 1; k <= 3; ++k) CHECK(coeff_C_id(setup, a, k) == coeff_C_id_from_normal_bundle(setup, a, k));
  }
}

TEST_CASE("normal-bundle coefficients agree with the literal ones on simple roots") {
  for (auto [t, n] : kTypes) {
    FlagSetup setup = FlagSetup::type(t, n);
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= 3; ++k) {
        auto a = setup.system().simple_root(i);
        CHECK(coeff_C_id(setup, a, k) == coeff_C_id_from_normal_bundle(setup, a, k));
      }
  }
}

TEST_CASE("factor degrees") {
  for (auto [t, n] : kTypes) {
    FlagSetup setup = FlagSetup::type(t, n);
    const auto& sys = setup.system();
    for (const auto& a : sys.positive_roots())
      for (const auto& g : sys.positive_roots()) {
        if (g == a) continue;
        for (int k = 1; k <= 3; ++k) {
          const long kc = long(k) * sys.pairing(g, a);
          CAPTURE(t);
          CAPTURE(roots::root_to_string(a));
          CAPTURE(roots::root_to_string(g));
          CAPTURE(k);
          CHECK(homogeneous_degree(truncated_factor(setup, g, a, k)) == -kc);
          CHECK(homogeneous_degree(euler_char_factor(setup, g, a, k)) == kc + 1);
        }
      }
  }
}

TEST_CASE("coefficient degree is 1 - k|alpha^vee|") {
  for (auto [t, n] : kTypes) {
    FlagSetup setup = FlagSetup::type(t, n);
    const auto& sys = setup.system();
    for (const auto& a : sys.positive_roots())
      for (int k = 1; k <= 3; ++k) {
        long height = 0;
        for (int c : coroot(sys, a)) height += c;
        CHECK(homogeneous_degree(coeff_C_id_from_normal_bundle(setup, a, k)) == 1 - k * height);
      }
  }
}

TEST_CASE("C_w is the w-image of C_id") {
  for (auto [t, n] : {std::pair{'A', 2}, {'B', 2}}) {
    FlagSetup setup = FlagSetup::type(t, n);
    const auto& sys = setup.system();
    for (const auto& w : sys.weyl_group())
      for (const auto& a : sys.positive_roots())
        for (int k = 1; k <= 2; ++k)
          CHECK(coeff_C_w(setup, w, a, k) == sys.act_on_ratfunc(w, coeff_C_id(setup, a, k)));
  }
}

TEST_CASE("A1 coefficients") {
  FlagSetup setup = FlagSetup::type('A', 1);
  const auto a = setup.alpha(1);
  const auto one = RatFunc(setup.registry(), Rational(1));
  CHECK(coeff_C_id(setup, {1}, 1) == one);
  CHECK(coeff_C_id(setup, {1}, 2) == one / a);
  CHECK(coeff_C_id(setup, {1}, 3) == RatFunc(setup.registry(), ratio(3, 4)) / (a * a));
}

TEST_CASE("z_w is the w-image of z_id") {
  FlagSetup setup = FlagSetup::type('A', 3);
  const auto& sys = setup.system();
  auto tables = solve_flag_recursion(setup, {1, 1, 1});
  const auto& zid = table_for(tables, sys.identity());
  for (const auto& t : tables)
    for (const auto& [beta, c] : zid.coeffs) CHECK(table_for(tables, t.w).coeffs.at(beta) == sys.act_on_ratfunc(t.w, c));
}

TEST_CASE("A2 solver matches the closed form in both charts") {
  CHECK_REPORT(verify_a2_solver(3));
  FlagSetup p3 = FlagSetup::type('A', 2, roots::Chart::part3);
  auto tables = solve_flag_recursion(p3, {2, 2});
  const auto& zid = table_for(tables, p3.system().identity());
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) CHECK(zid.coeffs.at({i, j}) == a2_closed(p3, i, j));
}

TEST_CASE("literal successor convention hits a pole") {
  FlagSetup setup = FlagSetup::type('A', 2);
  CHECK_THROWS_AS(solve_flag_recursion(setup, {1, 1}, Convention::theorem38), PoleError);
  auto r = verify_a2_solver(2, Convention::theorem38);
  CHECK_FALSE(r.passed());
}

TEST_CASE("rank cap") {
  FlagSetup setup = FlagSetup::type('A', 4);
  CHECK_THROWS_AS(solve_flag_recursion(setup, {1, 1, 1, 1}), CapExceeded);
  CHECK_THROWS_AS(parse_convention("other"), PreconditionError);
}

TEST_CASE("phi classes restrict to Euler classes") {
  for (int n = 1; n <= 3; ++n) CHECK_REPORT(verify_phi_restrictions(n));
}
