#include "gws/exactalg/ratfunc.hpp"

#include <algorithm>
#include <sstream>

#include "gws/error.hpp"

namespace gws {

namespace {

bool is_linear(const MultiPoly& p) { return p.total_degree() == 1; }

void insert_factor(std::vector<DenFactor>& den, const MultiPoly& poly, unsigned mult) {
  if (mult == 0) return;
  auto it = std::lower_bound(den.begin(), den.end(), poly,
                             [](const DenFactor& f, const MultiPoly& p) { return f.poly.compare(p) < 0; });
  if (it != den.end() && it->poly.compare(poly) == 0) {
    it->mult += mult;
  } else {
    den.insert(it, DenFactor{poly, mult});
  }
}

// p = scale * (variables) * rest, with rest primitive and positive-leading.
// The variable and rest parts are appended to `den` with multiplicity `mult`.
Rational split_into(const MultiPoly& p, unsigned mult, std::vector<DenFactor>& den) {
  const auto& reg = p.registry();
  Monomial g = p.terms().front().mono;
  for (const auto& t : p.terms())
    for (std::size_t v = 0; v < reg->size(); ++v) g.set(v, std::min<unsigned>(g[v], t.mono[v]));
  MultiPoly rest = g.is_one() ? p : *p.exact_divide(MultiPoly::monomial(reg, g, Rational(1)));
  Rational scale = rest.content();
  rest = rest.primitive_part();
  for (std::size_t v = 0; v < reg->size(); ++v)
    if (g[v]) insert_factor(den, MultiPoly::variable(reg, v), g[v] * mult);
  if (!rest.is_constant()) insert_factor(den, rest, mult);
  return scale;
}

MultiPoly expand(const RegistryPtr& reg, const std::vector<DenFactor>& fs) {
  MultiPoly out(reg, Rational(1));
  for (const auto& f : fs) out = out * f.poly.pow(f.mult);
  return out;
}

bool may_divide(const MultiPoly& num, const MultiPoly& f) {
  if (num.total_degree() < f.total_degree()) return false;
  for (std::size_t v = 0; v < f.registry()->size(); ++v)
    if (f.degree_in(v) > num.degree_in(v)) return false;
  return true;
}

// Divide `num` by as many copies of each selected factor as possible,
// lowering multiplicities; factors that reach zero are removed.
template <class Pred>
void cancel(MultiPoly& num, std::vector<DenFactor>& den, Pred selected) {
  for (std::size_t i = 0; i < den.size(); ++i) {
    if (!selected(i)) continue;
    auto& f = den[i];
    while (f.mult > 0 && !num.is_zero() && may_divide(num, f.poly)) {
      auto q = num.exact_divide(f.poly);
      if (!q) break;
      num = std::move(*q);
      --f.mult;
    }
  }
  std::erase_if(den, [](const DenFactor& f) { return f.mult == 0; });
}

}  // namespace

RatFunc make_ratfunc(MultiPoly num, std::vector<DenFactor> den, bool reduce_all) {
  RatFunc r(num.registry());
  if (num.is_zero()) return r;
  if (reduce_all) cancel(num, den, [](std::size_t) { return true; });
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

RatFunc::RatFunc(RegistryPtr reg) : num_(std::move(reg)) {}

RatFunc::RatFunc(RegistryPtr reg, const Rational& c) : num_(std::move(reg), c) {}

RatFunc::RatFunc(const MultiPoly& p) : num_(p) {}

RatFunc RatFunc::variable(const RegistryPtr& reg, std::string_view name) {
  return RatFunc(MultiPoly::variable(reg, name));
}

RatFunc RatFunc::fraction(const MultiPoly& num, const MultiPoly& den) {
  if (!same_registry(num.registry(), den.registry())) throw RegistryMismatch();
  if (den.is_zero()) throw DivisionByZero();
  std::vector<DenFactor> fs;
  Rational scale = split_into(den, 1, fs);
  return make_ratfunc(num * Rational(1 / scale), std::move(fs), true);
}

RatFunc RatFunc::quotient(const MultiPoly& num, std::span<const MultiPoly> factors) {
  std::vector<DenFactor> fs;
  Rational scale(1);
  for (const auto& f : factors) {
    if (!same_registry(num.registry(), f.registry())) throw RegistryMismatch();
    if (f.is_zero()) throw DivisionByZero();
    scale *= split_into(f, 1, fs);
  }
  return make_ratfunc(num * Rational(1 / scale), std::move(fs), true);
}

MultiPoly RatFunc::denominator() const { return expand(registry(), den_); }

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw Error("rational function is not constant");
  return num_.constant_value();
}

bool RatFunc::depends_on(std::size_t var) const {
  if (num_.depends_on(var)) return true;
  return std::any_of(den_.begin(), den_.end(), [&](const DenFactor& f) { return f.poly.depends_on(var); });
}

void RatFunc::check_same(const RatFunc& o) const {
  if (!same_registry(registry(), o.registry())) throw RegistryMismatch();
}

bool RatFunc::all_factors_linear() const {
  return std::all_of(den_.begin(), den_.end(), [](const DenFactor& f) { return is_linear(f.poly); });
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  check_same(o);
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_.empty() && o.den_.empty()) return RatFunc(num_ + o.num_);

  // Least common multiple of the two factor lists. Only a factor with equal
  // multiplicity on both sides can divide the new numerator, since the
  // inputs are reduced and the factors irreducible; non-linear factors are
  // always retried.
  std::vector<DenFactor> lcm, cof_a, cof_b;
  std::vector<bool> candidate;
  std::size_t i = 0, j = 0;
  while (i < den_.size() || j < o.den_.size()) {
    int c = i == den_.size() ? 1 : j == o.den_.size() ? -1 : den_[i].poly.compare(o.den_[j].poly);
    if (c < 0) {
      lcm.push_back(den_[i]);
      cof_b.push_back(den_[i]);
      candidate.push_back(!is_linear(den_[i].poly));
      ++i;
    } else if (c > 0) {
      lcm.push_back(o.den_[j]);
      cof_a.push_back(o.den_[j]);
      candidate.push_back(!is_linear(o.den_[j].poly));
      ++j;
    } else {
      unsigned ea = den_[i].mult, eb = o.den_[j].mult;
      lcm.push_back({den_[i].poly, std::max(ea, eb)});
      if (ea < eb) cof_a.push_back({den_[i].poly, eb - ea});
      if (eb < ea) cof_b.push_back({den_[i].poly, ea - eb});
      candidate.push_back(ea == eb || !is_linear(den_[i].poly));
      ++i;
      ++j;
    }
  }
  MultiPoly num = num_ * expand(registry(), cof_a) + o.num_ * expand(registry(), cof_b);
  if (num.is_zero()) return RatFunc(registry());
  cancel(num, lcm, [&](std::size_t k) { return candidate[k]; });
  return make_ratfunc(std::move(num), std::move(lcm), false);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  check_same(o);
  if (is_zero() || o.is_zero()) return RatFunc(registry());
  if (den_.empty() && o.den_.empty()) return RatFunc(num_ * o.num_);
  MultiPoly na = num_, nb = o.num_;
  std::vector<DenFactor> da = den_, db = o.den_;
  cancel(na, db, [](std::size_t) { return true; });
  cancel(nb, da, [](std::size_t) { return true; });
  for (const auto& f : db) insert_factor(da, f.poly, f.mult);
  return make_ratfunc(na * nb, std::move(da), false);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero();
  std::vector<DenFactor> fs;
  Rational scale = split_into(num_, 1, fs);
  return make_ratfunc(expand(registry(), den_) * Rational(1 / scale), std::move(fs), false);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  check_same(o);
  return *this * o.inverse();
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  if (e == 0) return RatFunc(registry(), Rational(1));
  RatFunc r = *this;
  r.num_ = num_.pow(unsigned(e));
  for (auto& f : r.den_) f.mult *= unsigned(e);
  return r;
}

bool RatFunc::operator==(const RatFunc& o) const {
  check_same(o);
  if (num_ == o.num_ && den_.size() == o.den_.size()) {
    bool same = true;
    for (std::size_t i = 0; same && i < den_.size(); ++i)
      same = den_[i].mult == o.den_[i].mult && den_[i].poly == o.den_[i].poly;
    if (same) return true;
  }
  // Reduced forms over irreducible factors are unique.
  if (all_factors_linear() && o.all_factors_linear()) return false;
  return (*this - o).is_zero();
}

namespace {

// p(images) * prod_v den(images[v])^{deg_v p}, with polynomial arithmetic only.
struct ImageParts {
  MultiPoly num;
  MultiPoly den;  // expanded
  std::vector<MultiPoly> num_pow, den_pow;

  const MultiPoly& npow(unsigned e) {
    while (num_pow.size() <= e) num_pow.push_back(num_pow.back() * num);
    return num_pow[e];
  }
  const MultiPoly& dpow(unsigned e) {
    while (den_pow.size() <= e) den_pow.push_back(den_pow.back() * den);
    return den_pow[e];
  }
};

MultiPoly horner(const MultiPoly& p, std::size_t var, const std::vector<unsigned>& global_deg,
                 std::vector<ImageParts>& parts, const RegistryPtr& target) {
  const std::size_t n = p.registry()->size();
  while (var < n && global_deg[var] == 0) ++var;
  if (var == n) return MultiPoly(target, p.constant_value());
  auto coeffs = p.coefficients_in(var);
  auto& img = parts[var];
  const unsigned top = global_deg[var];
  MultiPoly acc(target);
  for (unsigned e = 0; e < coeffs.size(); ++e) {
    if (coeffs[e].is_zero()) continue;
    MultiPoly sub = horner(coeffs[e], var + 1, global_deg, parts, target);
    sub = sub * img.npow(e);
    if (top > e) sub = sub * img.dpow(top - e);
    acc += sub;
  }
  return acc;
}

}  // namespace

RatFunc evaluate(const MultiPoly& p, const RegistryPtr& target, std::span<const RatFunc> images) {
  const std::size_t n = p.registry()->size();
  if (images.size() != n) throw Error("evaluate: need one image per variable");
  for (const auto& im : images)
    if (!same_registry(im.registry(), target)) throw RegistryMismatch();
  if (p.is_zero()) return RatFunc(target);

  std::vector<unsigned> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = p.degree_in(v);
  std::vector<ImageParts> parts;
  parts.reserve(n);
  std::vector<DenFactor> den;
  for (std::size_t v = 0; v < n; ++v) {
    const RatFunc& im = images[v];
    MultiPoly d = im.denominator();
    parts.push_back(ImageParts{im.numerator(), d, {MultiPoly(target, Rational(1))}, {MultiPoly(target, Rational(1))}});
    if (deg[v] > 0)
      for (const auto& f : im.denominator_factors()) insert_factor(den, f.poly, f.mult * deg[v]);
  }
  MultiPoly q = horner(p, 0, deg, parts, target);
  return make_ratfunc(std::move(q), std::move(den), true);
}

RatFunc RatFunc::substitute(std::span<const std::optional<RatFunc>> bindings) const {
  const auto& reg = registry();
  std::vector<RatFunc> images;
  images.reserve(reg->size());
  for (std::size_t v = 0; v < reg->size(); ++v) {
    if (v < bindings.size() && bindings[v]) {
      if (!same_registry(bindings[v]->registry(), reg)) throw RegistryMismatch();
      images.push_back(*bindings[v]);
    } else {
      images.emplace_back(MultiPoly::variable(reg, v));
    }
  }
  // Denominator images are inverted one factor at a time so that linear
  // images stay separate factors.
  RatFunc inv_den(reg, Rational(1));
  for (const auto& f : den_) {
    RatFunc fi = evaluate(f.poly, reg, images);
    if (fi.is_zero()) throw PoleError("factor " + f.poly.to_string() + " vanishes");
    inv_den *= fi.inverse().pow(int(f.mult));
  }
  return evaluate(num_, reg, images) * inv_den;
}

RatFunc RatFunc::substitute(const std::map<std::string, RatFunc>& bindings) const {
  std::vector<std::optional<RatFunc>> b(registry()->size());
  for (const auto& [name, value] : bindings) b[registry()->index(name)] = value;
  return substitute(b);
}

RatFunc RatFunc::change_registry(const RegistryPtr& target, const std::map<std::string, RatFunc>& bindings) const {
  const auto& reg = registry();
  std::vector<RatFunc> images;
  images.reserve(reg->size());
  for (std::size_t v = 0; v < reg->size(); ++v) {
    auto it = bindings.find(reg->name(v));
    if (it != bindings.end()) {
      images.push_back(it->second);
    } else if (auto idx = target->find(reg->name(v))) {
      images.emplace_back(MultiPoly::variable(target, *idx));
    } else if (depends_on(v)) {
      throw Error("change_registry: no image for variable '" + reg->name(v) + "'");
    } else {
      images.emplace_back(target);
    }
  }
  RatFunc inv_den(target, Rational(1));
  for (const auto& f : den_) {
    RatFunc fi = evaluate(f.poly, target, images);
    if (fi.is_zero()) throw PoleError("factor " + f.poly.to_string() + " vanishes");
    inv_den *= fi.inverse().pow(int(f.mult));
  }
  return evaluate(num_, target, images) * inv_den;
}

std::string RatFunc::to_string() const {
  if (den_.empty()) return num_.to_string();
  Rational c = num_.content();
  MultiPoly rest = num_ * Rational(1 / c);
  std::ostringstream os;
  if (c < 0) {
    os << "-";
    c = -c;
  }
  Integer top = c.get_num(), bottom = c.get_den();
  if (rest.is_constant()) {
    os << top.get_str();
  } else {
    if (top != 1) os << top.get_str() << "*";
    if (rest.size() > 1)
      os << "(" << rest.to_string() << ")";
    else
      os << rest.to_string();
  }
  std::vector<std::string> items;
  if (bottom != 1) items.push_back(bottom.get_str());
  for (const auto& f : den_) {
    std::string s = f.poly.size() > 1 ? "(" + f.poly.to_string() + ")" : f.poly.to_string();
    if (f.mult > 1) s += "^" + std::to_string(f.mult);
    items.push_back(std::move(s));
  }
  os << "/";
  if (items.size() == 1) {
    os << items.front();
  } else {
    os << "(";
    for (std::size_t i = 0; i < items.size(); ++i) os << (i ? "*" : "") << items[i];
    os << ")";
  }
  return os.str();
}

RatFunc operator+(const Rational& c, const RatFunc& f) { return RatFunc(f.registry(), c) + f; }

RatFunc operator*(const Rational& c, const RatFunc& f) { return RatFunc(f.registry(), c) * f; }

}  // namespace gws
