#include <doctest.h>

#include "gws/error.hpp"
#include "gws/exactalg/ratfunc.hpp"

using namespace gws;

namespace {

struct Ring {
  RegistryPtr reg = make_registry({"h", "alpha", "beta"});
  RatFunc h = RatFunc::variable(reg, "h");
  RatFunc a = RatFunc::variable(reg, "alpha");
  RatFunc b = RatFunc::variable(reg, "beta");
  RatFunc c(long n, long d = 1) const { return RatFunc(reg, ratio(n, d)); }
};

}  // namespace

TEST_CASE("polynomial product expands") {
  Ring r;
  auto p = (r.h + r.a) * (r.c(2) * r.h + r.a);
  CHECK(p.to_string() == "2*h^2 + 3*h*alpha + alpha^2");
}

TEST_CASE("sum over a common denominator") {
  Ring r;
  auto s = r.c(1) / (r.a + r.h) + r.c(1) / (r.h - r.a);
  CHECK(s == r.c(2) * r.h / (r.h * r.h - r.a * r.a));
  CHECK(s.to_string() == "2*h/((h - alpha)*(h + alpha))");
}

TEST_CASE("cancellation leaves the reduced form") {
  Ring r;
  auto f = (r.h * r.h - r.a * r.a) / (r.h + r.a);
  CHECK(f.is_polynomial());
  CHECK(f == r.h - r.a);
  auto g = r.c(1) / (r.h + r.a) - r.c(1) / (r.h + r.a);
  CHECK(g.is_zero());
  auto k = r.c(1) / r.h - r.a / (r.h * (r.h + r.a));
  CHECK(k == r.c(1) / (r.h + r.a));
}

TEST_CASE("substitution and poles") {
  Ring r;
  auto f = r.c(1) / (r.a + r.h);
  auto g = f.substitute({{"h", r.c(-1, 2) * r.a}});
  CHECK(g == r.c(2) / r.a);
  CHECK(g.to_string() == "2/alpha");
  auto inv_h = r.c(1) / r.h;
  CHECK_THROWS_AS(inv_h.substitute({{"h", r.c(0)}}), PoleError);
  CHECK_THROWS_AS(r.c(1) / r.c(0), DivisionByZero);
}

TEST_CASE("rational images compose") {
  Ring r;
  auto f = (r.h * r.h + r.b) / (r.a - r.h);
  auto img = r.c(1) / (r.a + r.b);
  auto g = f.substitute({{"h", img}});
  auto expect = (img * img + r.b) / (r.a - img);
  CHECK(g == expect);
}

TEST_CASE("registry mismatch is rejected") {
  Ring r;
  auto other = make_registry({"h", "beta"});
  CHECK_THROWS_AS(r.h + RatFunc::variable(other, "h"), RegistryMismatch);
  CHECK_NOTHROW(r.h + RatFunc::variable(make_registry({"h", "alpha", "beta"}), "h"));
}

TEST_CASE("constant content goes to the printed denominator") {
  Ring r;
  auto f = r.c(3) / (r.c(4) * r.a * r.a);
  CHECK(f.to_string() == "3/(4*alpha^2)");
  auto g = r.c(1, 2) / (r.h + r.a) / (r.c(2) * r.h + r.a);
  CHECK(g.to_string() == "1/(2*(h + alpha)*(2*h + alpha))");
  CHECK((-g).to_string() == "-1/(2*(h + alpha)*(2*h + alpha))");
}

TEST_CASE("expanded denominators still compare by value") {
  Ring r;
  auto expanded = r.c(1) / ((r.h + r.a) * (r.c(2) * r.h + r.a));
  auto factored = r.c(1) / (r.h + r.a) / (r.c(2) * r.h + r.a);
  CHECK(expanded == factored);
  CHECK(expanded * (r.h + r.a) == r.c(1) / (r.c(2) * r.h + r.a));
}
