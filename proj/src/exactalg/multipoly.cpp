#include "gws/exactalg/multipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "gws/error.hpp"

namespace gws {

namespace {

// Merge two descending-sorted term lists, b scaled by `sign`.
std::vector<Term> merge_add(std::span<const Term> a, std::span<const Term> b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = a[i].mono.compare(b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coef = -out.back().coef;
    } else {
      Rational s = sign > 0 ? Rational(a[i].coef + b[j].coef) : Rational(a[i].coef - b[j].coef);
      if (s != 0) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (sign < 0) out.back().coef = -out.back().coef;
  }
  return out;
}

std::vector<Term> times_term(std::span<const Term> a, const Term& t) {
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back({x.mono * t.mono, x.coef * t.coef});
  return out;
}

}  // namespace

MultiPoly::MultiPoly(RegistryPtr reg) : reg_(std::move(reg)) {
  if (!reg_) throw Error("polynomial needs a variable registry");
}

MultiPoly::MultiPoly(RegistryPtr reg, const Rational& c) : MultiPoly(std::move(reg)) {
  if (c != 0) {
    terms_.push_back({Monomial{}, c});
    terms_.back().coef.canonicalize();
  }
}

MultiPoly::MultiPoly(RegistryPtr reg, std::vector<Term> sorted_terms, int)
    : reg_(std::move(reg)), terms_(std::move(sorted_terms)) {}

MultiPoly MultiPoly::variable(RegistryPtr reg, std::size_t index) {
  if (index >= reg->size()) throw Error("variable index out of range");
  return monomial(std::move(reg), Monomial::variable(index), Rational(1));
}

MultiPoly MultiPoly::variable(const RegistryPtr& reg, std::string_view name) {
  return variable(reg, reg->index(name));
}

MultiPoly MultiPoly::monomial(RegistryPtr reg, const Monomial& m, const Rational& c) {
  MultiPoly p(std::move(reg));
  if (c != 0) {
    p.terms_.push_back({m, c});
    p.terms_.back().coef.canonicalize();
  }
  return p;
}

MultiPoly MultiPoly::from_terms(RegistryPtr reg, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono.compare(b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    t.coef.canonicalize();
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  return MultiPoly(std::move(reg), std::move(out), 0);
}

void MultiPoly::check_same(const MultiPoly& o) const {
  if (!same_registry(reg_, o.reg_)) throw RegistryMismatch();
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw Error("polynomial is not constant");
  return terms_.front().coef;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coef;
  return 0;
}

unsigned MultiPoly::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

unsigned MultiPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono[var]);
  return d;
}

std::optional<long> MultiPoly::homogeneous_degree(std::span<const long> weights) const {
  if (terms_.empty()) return std::nullopt;
  std::optional<long> deg;
  for (const auto& t : terms_) {
    long d = 0;
    for (std::size_t i = 0; i < reg_->size(); ++i) d += weights[i] * long(t.mono[i]);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

MultiPoly MultiPoly::operator-() const {
  auto out = terms_;
  for (auto& t : out) t.coef = -t.coef;
  return MultiPoly(reg_, std::move(out), 0);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_same(o);
  return MultiPoly(reg_, merge_add(terms_, o.terms_, +1), 0);
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  check_same(o);
  return MultiPoly(reg_, merge_add(terms_, o.terms_, -1), 0);
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_same(o);
  if (terms_.empty() || o.terms_.empty()) return MultiPoly(reg_);
  const auto& big = terms_.size() >= o.terms_.size() ? terms_ : o.terms_;
  const auto& small = terms_.size() >= o.terms_.size() ? o.terms_ : terms_;
  // Multiplying by a single term keeps the order, so a short factor is
  // handled as a sequence of sorted merges.
  if (small.size() <= 8) {
    std::vector<Term> acc = times_term(big, small[0]);
    for (std::size_t k = 1; k < small.size(); ++k) acc = merge_add(acc, times_term(big, small[k]), +1);
    return MultiPoly(reg_, std::move(acc), 0);
  }
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(big.size() * 4);
  Rational prod;
  for (const auto& x : small)
    for (const auto& y : big) {
      prod = x.coef * y.coef;
      auto [it, fresh] = acc.try_emplace(x.mono * y.mono, prod);
      if (!fresh) it->second += prod;
    }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, std::move(c)});
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.mono.compare(b.mono) > 0; });
  return MultiPoly(reg_, std::move(out), 0);
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
  if (c == 0) return MultiPoly(reg_);
  auto out = terms_;
  for (auto& t : out) t.coef *= c;
  return MultiPoly(reg_, std::move(out), 0);
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(reg_, Rational(1));
  MultiPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  check_same(o);
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef) return false;
  return true;
}

std::optional<MultiPoly> MultiPoly::exact_divide(const MultiPoly& divisor) const {
  check_same(divisor);
  if (divisor.is_zero()) throw DivisionByZero();
  if (is_zero()) return MultiPoly(reg_);
  const Term& lead = divisor.terms_.front();
  if (divisor.terms_.size() == 1) {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!lead.mono.divides(t.mono)) return std::nullopt;
      out.push_back({t.mono / lead.mono, t.coef / lead.coef});
    }
    return MultiPoly(reg_, std::move(out), 0);
  }
  // With a single divisor the division algorithm is exact: if the leading
  // term of the remainder is not a multiple of lead.mono, divisor does not
  // divide this.
  std::map<Monomial, Rational, GrlexGreater> rem;
  for (const auto& t : terms_) rem.emplace_hint(rem.end(), t.mono, t.coef);
  std::vector<Term> quotient;
  Rational q, delta;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lead.mono.divides(it->first)) return std::nullopt;
    Monomial qm = it->first / lead.mono;
    q = it->second / lead.coef;
    rem.erase(it);
    for (std::size_t k = 1; k < divisor.terms_.size(); ++k) {
      const Term& d = divisor.terms_[k];
      delta = q * d.coef;
      auto [pos, fresh] = rem.try_emplace(qm * d.mono);
      pos->second -= delta;
      if (pos->second == 0) rem.erase(pos);
    }
    quotient.push_back({qm, q});
  }
  return MultiPoly(reg_, std::move(quotient), 0);
}

Rational MultiPoly::content() const {
  if (terms_.empty()) return 0;
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& t : terms_) {
    num_gcd = gcd(num_gcd, Integer(t.coef.get_num()));
    den_lcm = lcm(den_lcm, Integer(t.coef.get_den()));
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  if (terms_.front().coef < 0) c = -c;
  return c;
}

MultiPoly MultiPoly::primitive_part() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  if (c == 1) return *this;
  auto out = terms_;
  for (auto& t : out) t.coef /= c;
  return MultiPoly(reg_, std::move(out), 0);
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
  std::vector<std::vector<Term>> buckets(degree_in(var) + 1);
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    unsigned e = m[var];
    m.set(var, 0);
    buckets[e].push_back({m, t.coef});
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(reg_, std::move(b)));
  return out;
}

MultiPoly MultiPoly::substitute(std::span<const std::optional<MultiPoly>> values) const {
  const std::size_t n = reg_->size();
  for (std::size_t v = 0; v < n && v < values.size(); ++v)
    if (values[v]) check_same(*values[v]);
  // powers[v][e] = values[v]^e, filled lazily.
  std::vector<std::vector<MultiPoly>> powers(n);
  auto power = [&](std::size_t v, unsigned e) -> const MultiPoly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.emplace_back(reg_, Rational(1));
    while (cache.size() <= e) cache.push_back(cache.back() * *values[v]);
    return cache[e];
  };
  // Group terms that share the substituted part to limit multiplications.
  std::map<Monomial, std::vector<Term>, GrlexGreater> groups;
  for (const auto& t : terms_) {
    Monomial bound, kept = t.mono;
    for (std::size_t v = 0; v < n; ++v)
      if (v < values.size() && values[v] && t.mono[v]) {
        bound.set(v, t.mono[v]);
        kept.set(v, 0);
      }
    groups[bound].push_back({kept, t.coef});
  }
  std::vector<Term> flat;
  for (auto& [bound, rest] : groups) {
    MultiPoly factor(reg_, Rational(1));
    for (std::size_t v = 0; v < n; ++v)
      if (bound[v]) factor = factor * power(v, bound[v]);
    MultiPoly part = from_terms(reg_, std::move(rest)) * factor;
    flat.insert(flat.end(), part.terms_.begin(), part.terms_.end());
  }
  return from_terms(reg_, std::move(flat));
}

int MultiPoly::compare(const MultiPoly& o) const {
  std::size_t n = std::min(terms_.size(), o.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = terms_[i].mono.compare(o.terms_[i].mono);
    if (c != 0) return c;
    if (terms_[i].coef != o.terms_[i].coef) return terms_[i].coef < o.terms_[i].coef ? -1 : 1;
  }
  if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size() ? -1 : 1;
  return 0;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (c < 0) c = -c;
    bool has_vars = !t.mono.is_one();
    bool printed = false;
    if (!has_vars || c != 1) {
      os << c.get_str();
      printed = true;
    }
    for (std::size_t v = 0; v < reg_->size(); ++v) {
      unsigned e = t.mono[v];
      if (!e) continue;
      if (printed) os << "*";
      os << reg_->name(v);
      if (e > 1) os << "^" << e;
      printed = true;
    }
  }
  return os.str();
}

}  // namespace gws
