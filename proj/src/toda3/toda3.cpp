#include "gws/toda3/toda3.hpp"

#include <sstream>

#include "gws/error.hpp"
#include "gws/flaggw/flaggw.hpp"

namespace gws::toda3 {

namespace {

Rational factorial(int d) {
  Integer f = 1;
  for (int m = 2; m <= d; ++m) f *= m;
  return Rational(f);
}

Rational binomial(int b, int a) {
  if (a < 0 || a > b) return Rational(0);
  return factorial(b) / (factorial(a) * factorial(b - a));
}

RatFunc constant(const Rational& c) { return RatFunc(toda_registry(), c); }

std::string ij(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

// p^!_x = prod_{m=1}^{p} (x + m h), kept factored.
RatFunc shifted_factorial(const MultiPoly& x, int p) {
  const MultiPoly h = MultiPoly::variable(toda_registry(), "h");
  std::vector<MultiPoly> fs;
  for (int m = 1; m <= p; ++m) fs.push_back(x + Rational(m) * h);
  return RatFunc::quotient(MultiPoly(toda_registry(), Rational(1)), fs).inverse();
}

RatFunc inverse_shifted_factorial(const MultiPoly& x, int p) {
  const MultiPoly h = MultiPoly::variable(toda_registry(), "h");
  std::vector<MultiPoly> fs;
  for (int m = 1; m <= p; ++m) fs.push_back(x + Rational(m) * h);
  return RatFunc::quotient(MultiPoly(toda_registry(), Rational(1)), fs);
}

std::map<std::string, RatFunc> plain_point() {
  return {{"lambda_0", constant(0)}, {"lambda_1", constant(0)}, {"lambda_2", constant(0)},
          {"alpha_1", constant(0)},  {"alpha_2", constant(0)},  {"h", constant(1)}};
}

}  // namespace

const RegistryPtr& toda_registry() {
  static const RegistryPtr reg = make_registry(
      {"alpha_1", "alpha_2", "h", "lambda_0", "lambda_1", "lambda_2", "u_0", "u_1", "u_2", "v_1", "v_2"});
  return reg;
}

RatFunc var(std::string_view name) { return RatFunc::variable(toda_registry(), name); }

RatFunc to_lambda(const RatFunc& f) {
  return f.substitute({{"alpha_1", var("lambda_1") - var("lambda_0")}, {"alpha_2", var("lambda_2") - var("lambda_1")}});
}

RatFunc BiSeries::at(int i, int j) const {
  if (i < 0 || j < 0) return RatFunc(toda_registry());
  if (i + j > order_) throw PreconditionError("coefficient " + ij(i, j) + " beyond the truncation order");
  auto it = coeffs_.find({i, j});
  return it == coeffs_.end() ? RatFunc(toda_registry()) : it->second;
}

void BiSeries::set(int i, int j, const RatFunc& c) {
  if (i < 0 || j < 0 || i + j > order_) throw PreconditionError("index " + ij(i, j) + " outside the series");
  if (c.is_zero())
    coeffs_.erase({i, j});
  else
    coeffs_.insert_or_assign({i, j}, c);
}

BiSeries BiSeries::map(const std::function<RatFunc(const RatFunc&)>& f) const {
  BiSeries out(order_);
  for (const auto& [k, c] : coeffs_) out.set(k.first, k.second, f(c));
  return out;
}

void TodaOperator::add(const Key& k, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TodaOperator TodaOperator::constant(const RatFunc& c) {
  TodaOperator op;
  op.add({0, 0, 0, 0}, c);
  return op;
}

TodaOperator TodaOperator::theta(int which) {
  if (which != 1 && which != 2) throw PreconditionError("theta index must be 1 or 2");
  TodaOperator op;
  op.add(which == 1 ? Key{1, 0, 0, 0} : Key{0, 1, 0, 0}, RatFunc(toda_registry(), Rational(1)));
  return op;
}

TodaOperator TodaOperator::v(int which) {
  if (which != 1 && which != 2) throw PreconditionError("v index must be 1 or 2");
  TodaOperator op;
  op.add(which == 1 ? Key{0, 0, 1, 0} : Key{0, 0, 0, 1}, RatFunc(toda_registry(), Rational(1)));
  return op;
}

TodaOperator TodaOperator::operator+(const TodaOperator& o) const {
  TodaOperator out = *this;
  for (const auto& [k, c] : o.terms_) out.add(k, c);
  return out;
}

TodaOperator TodaOperator::operator-(const TodaOperator& o) const { return *this + o * RatFunc(toda_registry(), Rational(-1)); }

TodaOperator TodaOperator::operator*(const RatFunc& c) const {
  TodaOperator out;
  for (const auto& [k, x] : terms_) out.add(k, x * c);
  return out;
}

TodaOperator TodaOperator::operator*(const TodaOperator& o) const {
  // theta_1^a o v_1^e = v_1^e o (theta_1 + e)^a.
  TodaOperator out;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) {
      const auto [a1, b1, e1, f1] = k1;
      const auto [a2, b2, e2, f2] = k2;
      for (int r = 0; r <= a1; ++r)
        for (int s = 0; s <= b1; ++s) {
          Rational w = binomial(a1, r) * binomial(b1, s);
          for (int t = r; t < a1; ++t) w *= e2;
          for (int t = s; t < b1; ++t) w *= f2;
          if (w == 0) continue;
          out.add({r + a2, s + b2, e1 + e2, f1 + f2}, c1 * c2 * RatFunc(toda_registry(), w));
        }
    }
  return out;
}

int TodaOperator::max_shift() const {
  int m = 0;
  for (const auto& [k, c] : terms_) m = std::max(m, k[2] + k[3]);
  return m;
}

TodaOperator TodaOperator::map(const std::function<RatFunc(const RatFunc&)>& f) const {
  TodaOperator out;
  for (const auto& [k, c] : terms_) out.add(k, f(c));
  return out;
}

bool TodaOperator::operator==(const TodaOperator& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (const auto& [k, c] : terms_) {
    auto it = o.terms_.find(k);
    if (it == o.terms_.end() || it->second != c) return false;
  }
  return true;
}

CharPolyCoeffs char_poly() {
  const auto& reg = toda_registry();
  auto x = [&](const char* n) { return MultiPoly::variable(reg, n); };
  const MultiPoly u0 = x("u_0"), u1 = x("u_1"), u2 = x("u_2"), v1 = x("v_1"), v2 = x("v_2");
  return {u0 + u1 + u2, u0 * u1 + u0 * u2 + u1 * u2 + v1 + v2, u0 * u1 * u2 + u0 * v2 + u2 * v1};
}

TodaOperators build_operators(bool equivariant) {
  const auto& reg = toda_registry();
  const RatFunc h = equivariant ? var("h") : RatFunc(reg, Rational(1));
  const RatFunc l0 = equivariant ? var("lambda_0") : RatFunc(reg);
  const RatFunc l1 = equivariant ? var("lambda_1") : RatFunc(reg);
  const RatFunc l2 = equivariant ? var("lambda_2") : RatFunc(reg);
  const auto t1 = TodaOperator::theta(1), t2 = TodaOperator::theta(2);
  const auto v1 = TodaOperator::v(1), v2 = TodaOperator::v(2);
  const auto C = [](const RatFunc& c) { return TodaOperator::constant(c); };
  // Realization of h q_i d/dq_i on q^{lambda/h} phi(v_1, v_2).
  const TodaOperator u0 = C(l0) - t1 * h;
  const TodaOperator u1 = C(l1) + (t1 - t2) * h;
  const TodaOperator u2 = C(l2) + t2 * h;
  const TodaOperator p1 = u0 + u1 + u2;
  const TodaOperator p2 = u0 * u1 + u0 * u2 + u1 * u2 + v1 + v2;
  const TodaOperator p3 = u0 * u1 * u2 + u0 * v2 + u2 * v1;
  return {p1 - C(l0 + l1 + l2), p2 - C(l0 * l1 + l0 * l2 + l1 * l2), p3 - C(l0 * l1 * l2)};
}

TodaOperator plain_d2_printed() {
  const auto t1 = TodaOperator::theta(1), t2 = TodaOperator::theta(2);
  const RatFunc minus(toda_registry(), Rational(-1));
  return (t1 * t1) * minus + t1 * t2 - (t2 * t2) + TodaOperator::v(1) + TodaOperator::v(2);
}

TodaOperator plain_d3_printed() {
  const auto t1 = TodaOperator::theta(1), t2 = TodaOperator::theta(2);
  const RatFunc minus(toda_registry(), Rational(-1));
  return (t1 * t1 * t2) * minus + t1 * (t2 * t2) - TodaOperator::v(2) * t1 + TodaOperator::v(1) * t2;
}

BiSeries apply(const TodaOperator& op, const BiSeries& s) {
  BiSeries out(s.order());
  std::map<std::pair<int, int>, RatFunc> acc;
  for (const auto& [k, c] : op.terms()) {
    const auto [a, b, e, f] = k;
    for (const auto& [idx, x] : s.coeffs()) {
      const int i = idx.first + e, j = idx.second + f;
      if (i + j > s.order()) continue;
      Rational w = 1;
      for (int t = 0; t < a; ++t) w *= idx.first;
      for (int t = 0; t < b; ++t) w *= idx.second;
      if (w == 0) continue;
      RatFunc term = c * x * RatFunc(toda_registry(), w);
      auto it = acc.find({i, j});
      if (it == acc.end())
        acc.emplace(std::make_pair(i, j), term);
      else
        it->second += term;
    }
  }
  for (const auto& [idx, c] : acc) out.set(idx.first, idx.second, c);
  return out;
}

Rational closed_a(int i, int j) {
  if (i < 0 || j < 0) return 0;
  Rational fi = factorial(i), fj = factorial(j);
  return factorial(i + j) / (fi * fi * fi * fj * fj * fj);
}

Rational batyrev_b(int i, int j) {
  if (i < 0 || j < 0) return 0;
  Rational sum = 0;
  for (int r = 0; r <= std::min(i, j); ++r) sum += binomial(i, r) * binomial(j, r);
  Rational fi = factorial(i), fj = factorial(j);
  return sum / (fi * fi * fj * fj);
}

RatFunc closed_a_equivariant(int i, int j) {
  if (i < 0 || j < 0) return RatFunc(toda_registry());
  const auto& reg = toda_registry();
  const MultiPoly a1 = MultiPoly::variable(reg, "alpha_1");
  const MultiPoly a2 = MultiPoly::variable(reg, "alpha_2");
  RatFunc out = shifted_factorial(a1 + a2, i + j) * RatFunc(reg, 1 / (factorial(i) * factorial(j)));
  out *= inverse_shifted_factorial(a1, i) * inverse_shifted_factorial(a2, j);
  out *= inverse_shifted_factorial(a1 + a2, i) * inverse_shifted_factorial(a1 + a2, j);
  return out * var("h").pow(-(i + j));
}

BiSeries closed_phi(int order) {
  BiSeries s(order);
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order; ++j) s.set(i, j, constant(closed_a(i, j)));
  return s;
}

BiSeries closed_phi_equivariant(int order) {
  BiSeries s(order);
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order; ++j) s.set(i, j, to_lambda(closed_a_equivariant(i, j)));
  return s;
}

BiSeries rebuild_plain(int order) {
  BiSeries s(order);
  s.set(0, 0, constant(1));
  for (int n = 1; n <= order; ++n)
    for (int i = 0; i <= n; ++i) {
      int j = n - i;
      Rational diag = i * i - i * j + j * j;
      s.set(i, j, (s.at(i - 1, j) + s.at(i, j - 1)) * RatFunc(toda_registry(), 1 / diag));
    }
  return s;
}

BiSeries rebuild_equivariant(int order) {
  BiSeries s(order);
  s.set(0, 0, constant(1));
  const RatFunc h = var("h"), a1 = var("alpha_1"), a2 = var("alpha_2");
  for (int n = 1; n <= order; ++n)
    for (int i = 0; i <= n; ++i) {
      int j = n - i;
      // i^2h^2 - ijh^2 + j^2h^2 + ih alpha_1 + jh alpha_2, kept as h * (linear form).
      RatFunc lin = constant(Rational(i * i - i * j + j * j)) * h + constant(i) * a1 + constant(j) * a2;
      s.set(i, j, (s.at(i - 1, j) + s.at(i, j - 1)) / (h * lin));
    }
  return s;
}

VerificationReport verify_recursions_plain(int n) {
  VerificationReport r("toda-plain");
  ReportTimer timer(r);
  r.param("max", n);
  auto a = [](int i, int j) { return closed_a(i, j); };
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) {
      if (i + j > 0) {
        r.expect_equal("second " + ij(i, j), Rational(i * i - i * j + j * j) * a(i, j), a(i - 1, j) + a(i, j - 1));
        r.expect_equal("third " + ij(i, j), Rational(i * j * (i - j)) * a(i, j),
                       Rational(-i) * a(i, j - 1) + Rational(j) * a(i - 1, j));
        r.expect_equal("cubes " + ij(i, j), Rational(i * i * i) * a(i, j - 1), Rational(j * j * j) * a(i - 1, j));
      }
      r.expect_equal("symmetry " + ij(i, j), a(i, j), a(j, i));
    }
  for (int i = 0; i <= n; ++i) r.expect_equal("row " + ij(i, 0), a(i, 0), 1 / (factorial(i) * factorial(i)));
  auto rebuilt = rebuild_plain(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) r.expect_equal("rebuild " + ij(i, j), rebuilt.at(i, j), constant(a(i, j)));
  r.finish();
  return r;
}

VerificationReport verify_batyrev(int n) {
  VerificationReport r("batyrev");
  ReportTimer timer(r);
  r.param("max", n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      r.expect_equal("b=a " + ij(i, j), batyrev_b(i, j), closed_a(i, j));
      Rational sum = 0;
      for (int k = 0; k <= std::min(i, j); ++k) sum += binomial(i, k) * binomial(j, k);
      r.expect_equal("vandermonde " + ij(i, j), sum, binomial(i + j, i));
    }
  r.finish();
  return r;
}

VerificationReport verify_recursions_equivariant(int n) {
  VerificationReport r("toda-eq");
  ReportTimer timer(r);
  r.param("max", n).param("chart", "part3");
  const RatFunc h = var("h"), a1 = var("alpha_1"), a2 = var("alpha_2");
  const RatFunc l0 = var("lambda_0"), l1 = var("lambda_1"), l2 = var("lambda_2");
  auto a = [](int i, int j) { return closed_a_equivariant(i, j); };
  auto c = [](long x) { return constant(Rational(x)); };
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) {
      const RatFunc aij = a(i, j);
      if (i + j > 0) {
        RatFunc diag = c(i * i - i * j + j * j) * h * h + c(i) * h * a1 + c(j) * h * a2;
        r.expect_equal("second " + ij(i, j), diag * aij, a(i - 1, j) + a(i, j - 1));
        RatFunc ih = c(i) * h, jh = c(j) * h;
        RatFunc lhs = ((ih - l0) * (ih - jh + l1) * (jh + l2) + l0 * l1 * l2) * to_lambda(aij);
        RatFunc rhs = (l0 - ih) * to_lambda(a(i, j - 1)) + (jh + l2) * to_lambda(a(i - 1, j));
        r.expect_equal("third " + ij(i, j), lhs, rhs);
        r.expect_equal("cubes " + ij(i, j), ih * (ih + a1) * (ih + a1 + a2) * a(i, j - 1),
                       jh * (jh + a2) * (jh + a1 + a2) * a(i - 1, j));
      }
      r.expect_equal("symmetry " + ij(i, j), aij,
                     a(j, i).substitute({{"alpha_1", a2}, {"alpha_2", a1}}));
      r.expect_equal("plain limit " + ij(i, j), aij.substitute(plain_point()), constant(closed_a(i, j)));
    }
  for (int i = 0; i <= n; ++i) {
    RatFunc row = RatFunc(toda_registry(), 1 / factorial(i)) * h.pow(-i) *
                  inverse_shifted_factorial(MultiPoly::variable(toda_registry(), "alpha_1"), i);
    r.expect_equal("row " + ij(i, 0), a(i, 0), row);
  }
  auto rebuilt = rebuild_equivariant(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) r.expect_equal("rebuild " + ij(i, j), rebuilt.at(i, j), a(i, j));
  r.finish();
  return r;
}

VerificationReport verify_operator_annihilation(int n, bool equivariant, bool negative_control) {
  VerificationReport r("toda-operators");
  ReportTimer timer(r);
  r.param("max", n).param("mode", equivariant ? "equivariant" : "plain");
  if (negative_control) r.param("input", "constant 1");
  auto ops = build_operators(equivariant);
  r.expect("first operator", ops.d1.is_zero(), ops.d1.is_zero() ? "0" : "non-zero", "0");
  if (!equivariant) {
    r.expect("second operator form", ops.d2 == plain_d2_printed(), "built", "printed");
    r.expect("third operator form", ops.d3 == plain_d3_printed(), "built", "printed");
  } else {
    auto plain = build_operators(false);
    auto spec = [](const RatFunc& f) { return f.substitute(plain_point()); };
    r.expect("second operator limit", ops.d2.map(spec) == plain.d2, "specialized", "plain");
    r.expect("third operator limit", ops.d3.map(spec) == plain.d3, "specialized", "plain");
  }
  BiSeries phi(n);
  if (negative_control)
    phi.set(0, 0, constant(1));
  else
    phi = equivariant ? closed_phi_equivariant(n) : closed_phi(n);
  r.notes.push_back("results exact through order " + std::to_string(n));
  for (auto [name, op] : {std::pair{"second", &ops.d2}, std::pair{"third", &ops.d3}}) {
    BiSeries out = apply(*op, phi);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j)
        r.expect_equal(std::string(name) + " " + ij(i, j), out.at(i, j), RatFunc(toda_registry()));
  }
  r.finish();
  return r;
}

VerificationReport verify_corollary_3_5(int n) {
  VerificationReport r("corollary35");
  ReportTimer timer(r);
  r.param("max", n);
  flaggw::FlagSetup setup = flaggw::FlagSetup::type('A', 2);
  auto tables = flaggw::solve_flag_recursion(setup, {n, n});
  const auto& z = flaggw::table_for(tables, setup.system().identity());
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) {
      RatFunc rescaled = z.coeffs.at({i, j}) / setup.h().pow(i + j);
      r.expect_equal(ij(i, j), rescaled.change_registry(toda_registry()), closed_a_equivariant(i, j));
    }
  r.finish();
  return r;
}

std::string golden_lines(const BiSeries& s) {
  std::ostringstream os;
  for (int i = 0; i <= s.order(); ++i)
    for (int j = 0; i + j <= s.order(); ++j) os << ij(i, j) << " " << s.at(i, j).to_string() << "\n";
  return os.str();
}

}  // namespace gws::toda3
