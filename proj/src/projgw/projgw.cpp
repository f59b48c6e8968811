#include "gws/projgw/projgw.hpp"

#include <sstream>

#include "gws/error.hpp"
#include "gws/exactalg/grading.hpp"
#include "gws/exactalg/partial_fractions.hpp"

namespace gws::projgw {

namespace {

RegistryPtr proj_registry(int n) {
  if (n < 0) throw PreconditionError("projective dimension must be non-negative");
  if (n + 4 > int(kMaxVars)) throw CapExceeded("projective dimension too large for the variable registry");
  std::vector<std::string> names;
  for (int i = 0; i <= n; ++i) names.push_back("lambda_" + std::to_string(i));
  names.insert(names.end(), {"h", "p", "q"});
  return make_registry(names);
}

Rational factorial(int d) {
  Integer f = 1;
  for (int m = 2; m <= d; ++m) f *= m;
  return Rational(f);
}

MultiPoly lam(const ProjSetup& s, int i) { return MultiPoly::variable(s.registry(), std::size_t(i)); }
MultiPoly hpoly(const ProjSetup& s) { return MultiPoly::variable(s.registry(), "h"); }

RatFunc sum_balanced(std::vector<RatFunc> terms, const RegistryPtr& reg) {
  if (terms.empty()) return RatFunc(reg);
  while (terms.size() > 1) {
    std::vector<RatFunc> next;
    for (std::size_t k = 0; k + 1 < terms.size(); k += 2) next.push_back(terms[k] + terms[k + 1]);
    if (terms.size() % 2) next.push_back(terms.back());
    terms = std::move(next);
  }
  return terms.front();
}

std::string loc(int i, int d) { return "i=" + std::to_string(i) + " d=" + std::to_string(d); }

RatFunc inverse_euler(const ProjSetup& setup, int i) {
  std::vector<MultiPoly> fs;
  for (int b = 0; b <= setup.n(); ++b)
    if (b != i) fs.push_back(lam(setup, i) - lam(setup, b));
  return RatFunc::quotient(MultiPoly(setup.registry(), Rational(1)), fs);
}

}  // namespace

ProjSetup::ProjSetup(int n) : n_(n), reg_(proj_registry(n)), p_(reg_->index("p")) {}

RatFunc ProjSetup::lambda(int i) const {
  check_index(i);
  return RatFunc(MultiPoly::variable(reg_, std::size_t(i)));
}
RatFunc ProjSetup::h() const { return RatFunc::variable(reg_, "h"); }
RatFunc ProjSetup::p() const { return RatFunc::variable(reg_, "p"); }
RatFunc ProjSetup::q() const { return RatFunc::variable(reg_, "q"); }

void ProjSetup::check_index(int i) const {
  if (i < 0 || i > n_) throw PreconditionError("fixed-point index " + std::to_string(i) + " out of range");
}

CohomClass::CohomClass(const ProjSetup& setup, std::vector<RatFunc> coeffs) : setup_(&setup) {
  const std::size_t size = std::size_t(setup.n()) + 1;
  for (const auto& c : coeffs)
    if (c.depends_on(setup.p_index())) throw PreconditionError("cohomology coefficient depends on p");
  if (coeffs.size() <= size) {
    coeffs.resize(size, RatFunc(setup.registry()));
    coeffs_ = std::move(coeffs);
    return;
  }
  coeffs_ = std::move(coeffs);
  std::vector<RatFunc> values;
  for (int i = 0; i <= setup.n(); ++i) values.push_back(restrict_to(i));
  *this = interpolate(setup, values);
}

CohomClass CohomClass::from_ratfunc(const ProjSetup& setup, const RatFunc& f) {
  for (const auto& fac : f.denominator_factors())
    if (fac.poly.depends_on(setup.p_index())) throw PreconditionError("class is not polynomial in p");
  RatFunc den_inv(f.registry(), Rational(1));
  for (const auto& fac : f.denominator_factors()) den_inv *= RatFunc(fac.poly).inverse().pow(int(fac.mult));
  std::vector<RatFunc> coeffs;
  for (const auto& c : f.numerator().coefficients_in(setup.p_index())) coeffs.push_back(RatFunc(c) * den_inv);
  return CohomClass(setup, std::move(coeffs));
}

CohomClass CohomClass::interpolate(const ProjSetup& setup, const std::vector<RatFunc>& values) {
  const int n = setup.n();
  if (int(values.size()) != n + 1) throw PreconditionError("interpolation needs one value per fixed point");
  // Newton divided differences at the nodes lambda_0..lambda_n.
  std::vector<RatFunc> dd = values, newton;
  newton.push_back(dd[0]);
  for (int l = 1; l <= n; ++l) {
    for (int i = 0; i + l <= n; ++i) dd[i] = (dd[i + 1] - dd[i]) / (setup.lambda(i + l) - setup.lambda(i));
    newton.push_back(dd[0]);
  }
  std::vector<RatFunc> poly{newton[std::size_t(n)]};
  for (int l = n - 1; l >= 0; --l) {
    // poly <- poly * (p - lambda_l) + newton[l]
    std::vector<RatFunc> next(poly.size() + 1, RatFunc(setup.registry()));
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= poly[k] * setup.lambda(l);
    }
    next[0] += newton[std::size_t(l)];
    poly = std::move(next);
  }
  CohomClass out(setup, {});
  poly.resize(std::size_t(n) + 1, RatFunc(setup.registry()));
  out.coeffs_ = std::move(poly);
  return out;
}

RatFunc CohomClass::restrict_to(int i) const {
  RatFunc x = setup_->lambda(i);
  RatFunc acc(setup_->registry());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatFunc CohomClass::as_ratfunc() const {
  RatFunc acc(setup_->registry());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * setup_->p() + *it;
  return acc;
}

CohomClass CohomClass::operator+(const CohomClass& o) const {
  std::vector<RatFunc> c = coeffs_;
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += o.coeffs_[k];
  return CohomClass(*setup_, std::move(c));
}

CohomClass CohomClass::operator*(const CohomClass& o) const {
  std::vector<RatFunc> c(coeffs_.size() + o.coeffs_.size() - 1, RatFunc(setup_->registry()));
  for (std::size_t a = 0; a < coeffs_.size(); ++a)
    for (std::size_t b = 0; b < o.coeffs_.size(); ++b) c[a + b] += coeffs_[a] * o.coeffs_[b];
  return CohomClass(*setup_, std::move(c));
}

CohomClass CohomClass::operator*(const RatFunc& s) const {
  std::vector<RatFunc> c = coeffs_;
  for (auto& x : c) x *= s;
  return CohomClass(*setup_, std::move(c));
}

bool CohomClass::operator==(const CohomClass& o) const { return coeffs_ == o.coeffs_; }

CohomClass phi(const ProjSetup& setup, int i) {
  setup.check_index(i);
  RatFunc f(setup.registry(), Rational(1));
  for (int b = 0; b <= setup.n(); ++b)
    if (b != i) f *= setup.p() - setup.lambda(b);
  return CohomClass::from_ratfunc(setup, f);
}

MultiPoly euler_e(const ProjSetup& setup, int i) {
  setup.check_index(i);
  MultiPoly e(setup.registry(), Rational(1));
  for (int b = 0; b <= setup.n(); ++b)
    if (b != i) e *= lam(setup, i) - lam(setup, b);
  return e;
}

RatFunc integrate(const ProjSetup& setup, const CohomClass& f) {
  std::vector<RatFunc> terms;
  for (int i = 0; i <= setup.n(); ++i) terms.push_back(f.restrict_to(i) * inverse_euler(setup, i));
  return sum_balanced(std::move(terms), setup.registry());
}

RatFunc pairing(const ProjSetup& setup, const CohomClass& f, const CohomClass& g) {
  return integrate(setup, f * g);
}

std::string to_string(Form f) {
  switch (f) {
    case Form::B: return "B";
    case Form::b: return "b";
    case Form::u: return "u";
    case Form::normalized: return "norm";
  }
  return "?";
}

Form parse_form(const std::string& s) {
  if (s == "B") return Form::B;
  if (s == "b") return Form::b;
  if (s == "u") return Form::u;
  if (s == "norm") return Form::normalized;
  throw PreconditionError("unknown series form '" + s + "'");
}

RatFunc closed_b(const ProjSetup& setup, int i, int d) {
  setup.check_index(i);
  if (d < 0) throw PreconditionError("degree must be non-negative");
  std::vector<MultiPoly> fs;
  for (int j = 0; j <= setup.n(); ++j)
    if (j != i)
      for (int m = 1; m <= d; ++m) fs.push_back(lam(setup, i) - lam(setup, j) + Rational(m) * hpoly(setup));
  return RatFunc::quotient(MultiPoly(setup.registry(), 1 / factorial(d)), fs);
}

RatFunc closed_B(const ProjSetup& setup, int i, int d) { return closed_b(setup, i, d) / setup.h().pow(d); }

RatFunc closed_u(const ProjSetup& setup, int i, int d) { return closed_b(setup, i, d); }

RatFunc normalized_coeff(const ProjSetup& setup, int i, int d) {
  setup.check_index(i);
  if (d < 0) throw PreconditionError("degree must be non-negative");
  std::vector<MultiPoly> fs;
  for (int b = 0; b <= setup.n(); ++b)
    for (int m = 0; m <= d; ++m)
      if (b != i || m != 0) fs.push_back(lam(setup, i) - lam(setup, b) + Rational(m) * hpoly(setup));
  return RatFunc::quotient(MultiPoly(setup.registry(), Rational(1)), fs);
}

RatFunc closed_coeff(const ProjSetup& setup, Form form, int i, int d) {
  switch (form) {
    case Form::B: return closed_B(setup, i, d);
    case Form::b: return closed_b(setup, i, d);
    case Form::u: return closed_u(setup, i, d);
    case Form::normalized: return normalized_coeff(setup, i, d);
  }
  throw PreconditionError("unknown form");
}

RatFunc convert_from_b(const ProjSetup& setup, Form form, int i, int d, const RatFunc& b) {
  switch (form) {
    case Form::b:
    case Form::u: return b;
    case Form::B: return b / setup.h().pow(d);
    case Form::normalized: return b / setup.h().pow(d) * inverse_euler(setup, i);
  }
  throw PreconditionError("unknown form");
}

RatFunc recursion_coeff(const ProjSetup& setup, int i, int j, int k) {
  setup.check_index(i);
  setup.check_index(j);
  if (i == j) throw PreconditionError("recursion coefficient needs i != j");
  if (k < 1) throw PreconditionError("recursion coefficient needs k >= 1");
  std::vector<MultiPoly> fs;
  for (int b = 0; b <= setup.n(); ++b)
    if (b != i)
      for (int m = 1; m <= k; ++m)
        if (b != j || m != k)
          fs.push_back(lam(setup, i) - lam(setup, b) + ratio(m, k) * (lam(setup, j) - lam(setup, i)));
  return RatFunc::quotient(MultiPoly(setup.registry(), 1 / factorial(k)), fs);
}

RatFunc recursion_rhs(const ProjSetup& setup, const std::vector<ProjSeriesTable>& tables, int i, int d) {
  std::vector<RatFunc> terms;
  const auto& reg = setup.registry();
  std::vector<std::optional<RatFunc>> at(reg->size());
  const std::size_t hv = reg->index("h");
  for (int j = 0; j <= setup.n(); ++j) {
    if (j == i) continue;
    if (tables.at(std::size_t(j)).form != Form::b) throw PreconditionError("recursion needs b-form tables");
    for (int k = 1; k <= d; ++k) {
      at[hv] = (setup.lambda(j) - setup.lambda(i)) * RatFunc(reg, ratio(1, k));
      RatFunc shifted = tables[std::size_t(j)].coeffs.at(std::size_t(d - k)).substitute(at);
      RatFunc pole = setup.lambda(i) - setup.lambda(j) + RatFunc(reg, Rational(k)) * setup.h();
      terms.push_back(recursion_coeff(setup, i, j, k) * shifted / pole);
    }
  }
  return sum_balanced(std::move(terms), reg);
}

std::vector<ProjSeriesTable> solve_recursion(const ProjSetup& setup, int d_max) {
  if (d_max < 0) throw PreconditionError("degree bound must be non-negative");
  const auto& reg = setup.registry();
  std::vector<ProjSeriesTable> tables(std::size_t(setup.n()) + 1);
  for (int i = 0; i <= setup.n(); ++i) {
    tables[std::size_t(i)].i = i;
    tables[std::size_t(i)].coeffs.push_back(RatFunc(reg, Rational(1)));
  }
  if (setup.n() == 0) {
    for (int d = 1; d <= d_max; ++d) tables[0].coeffs.push_back(RatFunc(reg, 1 / factorial(d)));
    return tables;
  }
  for (int d = 1; d <= d_max; ++d) {
    std::vector<RatFunc> layer;
    for (int i = 0; i <= setup.n(); ++i) layer.push_back(recursion_rhs(setup, tables, i, d));
    for (int i = 0; i <= setup.n(); ++i) tables[std::size_t(i)].coeffs.push_back(std::move(layer[std::size_t(i)]));
  }
  return tables;
}

ProjSeriesTable to_form(const ProjSetup& setup, const ProjSeriesTable& t, Form form) {
  if (t.form != Form::b) throw PreconditionError("conversion starts from b-form tables");
  ProjSeriesTable out{t.i, form, {}};
  for (std::size_t d = 0; d < t.coeffs.size(); ++d)
    out.coeffs.push_back(convert_from_b(setup, form, t.i, int(d), t.coeffs[d]));
  return out;
}

VerificationReport verify_theorem_3_3(const ProjSetup& setup, int d_max) {
  VerificationReport r("proj-recursion");
  ReportTimer timer(r);
  r.param("n", setup.n()).param("max-d", d_max);
  if (setup.n() == 0) {
    r.notes.push_back("n=0: no recursion relations; series is exp(q/h)");
    auto t = to_form(setup, solve_recursion(setup, d_max)[0], Form::B);
    for (int d = 0; d <= d_max; ++d) r.expect_equal(loc(0, d), t.coeffs[std::size_t(d)], closed_B(setup, 0, d));
    r.finish();
    return r;
  }
  std::vector<ProjSeriesTable> closed(std::size_t(setup.n()) + 1);
  for (int i = 0; i <= setup.n(); ++i) {
    closed[std::size_t(i)].i = i;
    for (int d = 0; d <= d_max; ++d) closed[std::size_t(i)].coeffs.push_back(closed_b(setup, i, d));
  }
  for (int d = 1; d <= d_max; ++d)
    for (int i = 0; i <= setup.n(); ++i)
      r.expect_equal(loc(i, d), recursion_rhs(setup, closed, i, d), closed[std::size_t(i)].coeffs[std::size_t(d)]);
  r.finish();
  return r;
}

VerificationReport verify_solver(const ProjSetup& setup, int d_max) {
  VerificationReport r("proj-solver");
  ReportTimer timer(r);
  r.param("n", setup.n()).param("max-d", d_max);
  auto tables = solve_recursion(setup, d_max);
  for (const auto& t : tables)
    for (int d = 0; d <= d_max; ++d) {
      if (setup.n() == 0)
        r.expect_equal(loc(t.i, d), convert_from_b(setup, Form::B, t.i, d, t.coeffs[std::size_t(d)]),
                       closed_B(setup, t.i, d));
      else
        r.expect_equal(loc(t.i, d), t.coeffs[std::size_t(d)], closed_b(setup, t.i, d));
    }
  r.finish();
  return r;
}

VerificationReport verify_first_order_fractions(const ProjSetup& setup) {
  VerificationReport r("first-order-fractions");
  ReportTimer timer(r);
  r.param("n", setup.n());
  const auto& reg = setup.registry();
  if (setup.n() == 0) r.notes.push_back("n=0: no factors");
  for (int i = 0; i <= setup.n() && setup.n() > 0; ++i) {
    std::vector<MultiPoly> fs;
    std::vector<int> js;
    for (int j = 0; j <= setup.n(); ++j)
      if (j != i) {
        fs.push_back(lam(setup, i) - lam(setup, j) + hpoly(setup));
        js.push_back(j);
      }
    auto lf = LinearFactorization::build("h", fs, RatFunc(reg, Rational(1)));
    auto terms = partial_fractions(lf, MultiPoly(reg, Rational(1)));
    for (std::size_t t = 0; t < terms.size(); ++t) {
      int j = js[t];
      std::vector<MultiPoly> rest;
      for (int b = 0; b <= setup.n(); ++b)
        if (b != i && b != j) rest.push_back(lam(setup, j) - lam(setup, b));
      RatFunc expected = RatFunc::quotient(MultiPoly(reg, Rational(1)), rest);
      r.expect_equal("i=" + std::to_string(i) + " j=" + std::to_string(j), terms[t].residue, expected);
    }
    r.expect_equal("i=" + std::to_string(i) + " sum", recombine(terms), closed_b(setup, i, 1));
  }
  r.finish();
  return r;
}

VerificationReport verify_degrees(const ProjSetup& setup, int d_max) {
  VerificationReport r("proj-degrees");
  ReportTimer timer(r);
  r.param("n", setup.n()).param("max-d", d_max);
  const long n = setup.n();
  auto check = [&](const std::string& where, const RatFunc& f, long expected) {
    auto deg = homogeneous_degree(f);
    r.expect(where, deg && *deg == expected, deg ? std::to_string(*deg) : "not homogeneous",
             std::to_string(expected));
  };
  for (int i = 0; i <= n; ++i)
    for (int d = 0; d <= d_max; ++d) {
      check("b " + loc(i, d), closed_b(setup, i, d), -d * n);
      check("B " + loc(i, d), closed_B(setup, i, d), -d * (n + 1));
      check("u " + loc(i, d), closed_u(setup, i, d), -d * n);
      for (int j = 0; j <= n; ++j)
        if (j != i && d >= 1)
          check("c i=" + std::to_string(i) + " j=" + std::to_string(j) + " k=" + std::to_string(d),
                recursion_coeff(setup, i, j, d), -d * n + 1);
    }
  r.finish();
  return r;
}

VerificationReport euler_prefactor_identity(const ProjSetup& setup, int i, int j, int k, int d) {
  VerificationReport r("euler-prefactor");
  ReportTimer timer(r);
  r.param("n", setup.n()).param("i", i).param("j", j).param("k", k).param("d", d);
  setup.check_index(i);
  setup.check_index(j);
  if (i == j || k < 1 || k > d) throw PreconditionError("prefactor identity needs i != j and 1 <= k <= d");
  const auto& reg = setup.registry();
  const RatFunc inv_k(reg, ratio(1, k));
  const RatFunc node = (setup.lambda(j) - setup.lambda(i)) * inv_k;
  const RatFunc c_restricted = (setup.lambda(i) - setup.lambda(j)) * inv_k;
  const RatFunc e_i(euler_e(setup, i));

  std::vector<MultiPoly> big;
  for (int b = 0; b <= setup.n(); ++b)
    for (int m = 0; m <= k; ++m) {
      if ((b == i && m == 0) || (b == j && m == k)) continue;
      big.push_back(ratio(k - m, k) * lam(setup, i) + ratio(m, k) * lam(setup, j) - lam(setup, b));
    }
  RatFunc inv_big = RatFunc::quotient(MultiPoly(reg, Rational(1)), big);
  RatFunc lhs = inv_k * e_i * node.pow(d) / (setup.h() + c_restricted) * inv_big;
  RatFunc pole = RatFunc(reg, Rational(k)) * setup.h() + setup.lambda(i) - setup.lambda(j);
  RatFunc rhs = recursion_coeff(setup, i, j, k) / pole * node.pow(d - k);
  r.expect_equal("total", lhs, rhs);

  // The b = i, m >= 1 part of the product.
  RatFunc sub(reg, Rational(1));
  for (int m = 1; m <= k; ++m) sub *= RatFunc(reg, ratio(m, k)) * (setup.lambda(j) - setup.lambda(i));
  r.expect_equal("sub-product", sub, RatFunc(reg, factorial(k)) * node.pow(k));
  r.finish();
  return r;
}

const RegistryPtr& alpha_registry() {
  static const RegistryPtr reg = make_registry({"alpha", "h", "q"});
  return reg;
}

RatFunc to_alpha(const ProjSetup& setup, const RatFunc& f) {
  if (setup.n() != 1) throw PreconditionError("the alpha chart needs n = 1");
  const auto& target = alpha_registry();
  const RatFunc alpha = RatFunc::variable(target, "alpha");
  const RatFunc one(target, Rational(1));
  RatFunc out = f.change_registry(target, {{"lambda_0", alpha}, {"lambda_1", RatFunc(target)}, {"p", RatFunc(target)}});
  RatFunc shifted =
      f.change_registry(target, {{"lambda_0", alpha + one}, {"lambda_1", one}, {"p", RatFunc(target)}});
  if (out != shifted) throw PreconditionError("not a function of lambda_0 - lambda_1");
  return out;
}

std::string series_text(const std::vector<RatFunc>& coeffs, const RatFunc& q) {
  std::string out;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    if (coeffs[d].is_zero()) continue;
    std::string t = (coeffs[d] * q.pow(int(d))).to_string();
    if (out.empty())
      out = t;
    else if (t.front() == '-')
      out += " - " + t.substr(1);
    else
      out += " + " + t;
  }
  return out.empty() ? "0" : out;
}

std::string golden_lines(const ProjSetup& setup, const std::vector<ProjSeriesTable>& tables) {
  std::ostringstream os;
  for (const auto& t : tables)
    for (std::size_t d = 0; d < t.coeffs.size(); ++d)
      os << setup.n() << " " << t.i << " " << d << " " << t.coeffs[d].to_string() << "\n";
  return os.str();
}

}  // namespace gws::projgw
