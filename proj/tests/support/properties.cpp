#include "properties.hpp"

#include <random>
#include <set>

#include "gws/error.hpp"
#include "gws/exactalg/grading.hpp"
#include "gws/exactalg/parse.hpp"
#include "gws/exactalg/partial_fractions.hpp"
#include "gws/exactalg/ratfunc.hpp"
#include "gws/roots/roots.hpp"

namespace gws::props {

namespace {

const RegistryPtr& reg() {
  static const RegistryPtr r = make_registry({"x", "y", "z"});
  return r;
}

class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  int small(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  RatFunc var(int i) const { return RatFunc::variable(reg(), reg()->name(std::size_t(i))); }
  RatFunc constant(long n, long d = 1) const { return RatFunc(reg(), ratio(n, d)); }

  // Nonzero linear form with small coefficients, optionally with a constant term.
  RatFunc linear(bool affine = true) {
    for (;;) {
      RatFunc f = affine ? constant(small(-3, 3)) : constant(0);
      for (int i = 0; i < 3; ++i) f = f + constant(small(-2, 2)) * var(i);
      if (!f.is_constant()) return f;
    }
  }

  RatFunc poly(int max_terms = 4) {
    RatFunc f = constant(0);
    int terms = small(1, max_terms);
    for (int t = 0; t < terms; ++t) {
      RatFunc m = constant(small(-5, 5), small(1, 3));
      for (int i = 0; i < 3; ++i) m = m * var(i).pow(small(0, 2));
      f = f + m;
    }
    return f;
  }

  // Polynomial over a product of linear factors, built factor by factor.
  RatFunc ratfunc() {
    RatFunc f = poly();
    int k = small(0, 2);
    for (int i = 0; i < k; ++i) f = f * linear().inverse();
    return f;
  }

  RatFunc nonzero_ratfunc() {
    for (;;) {
      RatFunc f = ratfunc();
      if (!f.is_zero()) return f;
    }
  }

  // Homogeneous in x, y, z of the returned degree.
  std::pair<RatFunc, long> homogeneous() {
    int d = small(0, 3);
    RatFunc num = constant(0);
    for (int t = 0; t < 3; ++t) {
      RatFunc m = constant(small(1, 4));
      int left = d;
      for (int i = 0; i < 2; ++i) {
        int e = small(0, left);
        m = m * var(i).pow(e);
        left -= e;
      }
      num = num + m * var(2).pow(left);
    }
    int k = small(0, 2);
    for (int i = 0; i < k; ++i) num = num * linear(false).inverse();
    return {num, long(d - k)};
  }

 private:
  std::mt19937 rng_;
};

std::string idx(const char* what, int s) { return std::string(what) + " #" + std::to_string(s); }

}  // namespace

VerificationReport ring_axioms(std::uint32_t seed, int samples) {
  VerificationReport r("ring-axioms");
  ReportTimer timer(r);
  r.param("seed", long(seed)).param("samples", samples);
  Gen g(seed);
  const RatFunc zero = g.constant(0), one = g.constant(1);
  for (int s = 0; s < samples; ++s) {
    RatFunc a = g.ratfunc(), b = g.ratfunc(), c = g.ratfunc();
    r.expect_equal(idx("add commutes", s), a + b, b + a);
    r.expect_equal(idx("mul commutes", s), a * b, b * a);
    r.expect_equal(idx("add associates", s), (a + b) + c, a + (b + c));
    r.expect_equal(idx("mul associates", s), (a * b) * c, a * (b * c));
    r.expect_equal(idx("distributes", s), a * (b + c), a * b + a * c);
    r.expect_equal(idx("additive identity", s), a + zero, a);
    r.expect_equal(idx("multiplicative identity", s), a * one, a);
    r.expect(idx("additive inverse", s), (a - a).is_zero() && (a + (-a)).is_zero(), (a - a).to_string(), "0");
  }
  r.finish();
  return r;
}

VerificationReport field_axioms(std::uint32_t seed, int samples) {
  VerificationReport r("field-axioms");
  ReportTimer timer(r);
  r.param("seed", long(seed)).param("samples", samples);
  Gen g(seed);
  const RatFunc one = g.constant(1);
  for (int s = 0; s < samples; ++s) {
    RatFunc a = g.nonzero_ratfunc(), b = g.nonzero_ratfunc(), c = g.ratfunc();
    r.expect_equal(idx("inverse", s), a * a.inverse(), one);
    r.expect_equal(idx("division", s), (c / a) * a, c);
    r.expect_equal(idx("inverse of product", s), (a * b).inverse(), a.inverse() * b.inverse());
    r.expect_equal(idx("double inverse", s), a.inverse().inverse(), a);
    r.expect_equal(idx("fraction sum", s), c / a + c / b, c * (a + b) / (a * b));
  }
  r.finish();
  return r;
}

VerificationReport substitution_homomorphism(std::uint32_t seed, int samples) {
  VerificationReport r("substitution-homomorphism");
  ReportTimer timer(r);
  r.param("seed", long(seed)).param("samples", samples);
  Gen g(seed);
  long skipped = 0;
  for (int s = 0; s < samples; ++s) {
    RatFunc a = g.ratfunc(), b = g.nonzero_ratfunc();
    std::map<std::string, RatFunc> sigma{{"x", g.linear()}, {"y", g.linear() / g.linear()}};
    try {
      auto sub = [&](const RatFunc& f) { return f.substitute(sigma); };
      r.expect_equal(idx("sum", s), sub(a + b), sub(a) + sub(b));
      r.expect_equal(idx("product", s), sub(a * b), sub(a) * sub(b));
      RatFunc sb = sub(b);
      if (!sb.is_zero()) r.expect_equal(idx("quotient", s), sub(a / b), sub(a) / sb);
      r.expect_equal(idx("identity", s), a.substitute({{"x", g.var(0)}}), a);
    } catch (const PoleError&) {
      ++skipped;
    }
  }
  r.param("pole-samples", skipped);
  r.finish();
  return r;
}

VerificationReport partial_fraction_recombination(std::uint32_t seed, int samples) {
  VerificationReport r("partial-fraction-recombination");
  ReportTimer timer(r);
  r.param("seed", long(seed)).param("samples", samples);
  Gen g(seed);
  const MultiPoly x = MultiPoly::variable(reg(), "x");
  for (int s = 0; s < samples; ++s) {
    int m = g.small(1, 4);
    std::vector<MultiPoly> factors;
    while (int(factors.size()) < m) {
      int k = g.small(1, 3), cy = g.small(-2, 2), cz = g.small(-2, 2), c0 = g.small(-3, 3);
      MultiPoly f = x * MultiPoly(reg(), Rational(k)) + MultiPoly::variable(reg(), "y") * MultiPoly(reg(), Rational(cy)) +
                    MultiPoly::variable(reg(), "z") * MultiPoly(reg(), Rational(cz)) + MultiPoly(reg(), Rational(c0));
      std::vector<MultiPoly> trial = factors;
      trial.push_back(f);
      try {
        LinearFactorization::build("x", trial, g.constant(1));
      } catch (const PreconditionError&) {
        continue;
      }
      factors.push_back(f);
    }
    RatFunc scale = g.constant(g.small(1, 5), g.small(1, 3)) * (g.var(1) + g.constant(g.small(-2, 2)) * g.var(2)).inverse();
    auto fac = LinearFactorization::build("x", factors, scale);
    RatFunc num_r = g.constant(0);
    for (int e = 0; e < m; ++e) num_r = num_r + g.poly(2) * g.var(0).pow(e);
    // Keep the x-degree below the number of factors.
    MultiPoly num = num_r.numerator();
    {
      std::vector<MultiPoly> cs = num.coefficients_in(0);
      MultiPoly trimmed(reg(), Rational(0));
      for (std::size_t e = 0; e < cs.size() && int(e) < m; ++e) trimmed += cs[e] * x.pow(unsigned(e));
      num = trimmed;
    }
    auto terms = partial_fractions(fac, num);
    RatFunc expected = RatFunc(num);
    for (const auto& f : factors) expected = expected * RatFunc(f).inverse();
    expected = expected * scale.inverse();
    r.expect_equal(idx("recombine", s), recombine(terms), expected);
    r.expect(idx("term count", s), terms.size() == factors.size(), std::to_string(terms.size()),
             std::to_string(factors.size()));
    for (std::size_t t = 0; t < terms.size(); ++t)
      r.expect(idx("residue free of x", s), !terms[t].residue.depends_on(0), terms[t].residue.to_string(),
               "no x");
  }
  r.finish();
  return r;
}

VerificationReport degree_additivity(std::uint32_t seed, int samples) {
  VerificationReport r("degree-additivity");
  ReportTimer timer(r);
  r.param("seed", long(seed)).param("samples", samples);
  Gen g(seed);
  auto show = [](std::optional<long> d) { return d ? std::to_string(*d) : std::string("none"); };
  for (int s = 0; s < samples; ++s) {
    auto [a, da] = g.homogeneous();
    auto [b, db] = g.homogeneous();
    r.expect(idx("degree", s), homogeneous_degree(a) == da, show(homogeneous_degree(a)), std::to_string(da));
    r.expect(idx("product", s), homogeneous_degree(a * b) == da + db, show(homogeneous_degree(a * b)),
             std::to_string(da + db));
    r.expect(idx("quotient", s), homogeneous_degree(a / b) == da - db, show(homogeneous_degree(a / b)),
             std::to_string(da - db));
    if (da != db) {
      RatFunc sum = a + b;
      r.expect(idx("mixed sum", s), !homogeneous_degree(sum).has_value(), show(homogeneous_degree(sum)), "none");
    }
  }
  r.finish();
  return r;
}

VerificationReport parse_round_trip(std::uint32_t seed, int samples) {
  VerificationReport r("parse-round-trip");
  ReportTimer timer(r);
  r.param("seed", long(seed)).param("samples", samples);
  Gen g(seed);
  for (int s = 0; s < samples; ++s) {
    RatFunc a = g.ratfunc();
    RatFunc back = parse_ratfunc(reg(), a.to_string());
    r.expect_equal(idx("value", s), back, a);
    r.expect(idx("text", s), back.to_string() == a.to_string(), back.to_string(), a.to_string());
  }
  r.finish();
  return r;
}

VerificationReport weyl_properties(char type, int rank) {
  using namespace roots;
  VerificationReport r("weyl-properties");
  ReportTimer timer(r);
  r.param("type", std::string(1, type)).param("rank", rank);
  const RootSystem sys = RootSystem::generate(CartanMatrix::of_type(type, rank));
  const auto& W = sys.weyl_group();
  const auto id = sys.identity();
  const RegistryPtr areg = [&] {
    std::vector<std::string> names;
    for (int i = 1; i <= rank; ++i) names.push_back(RootSystem::alpha_name(i));
    return make_registry(names);
  }();
  auto yes = [](bool b) { return std::string(b ? "true" : "false"); };

  for (int i = 1; i <= rank; ++i) {
    auto s = sys.simple_reflection(i);
    r.expect("simple involution s" + std::to_string(i), s * s == id, yes(s * s == id), "true");
  }
  for (const auto& a : sys.roots()) {
    auto s = sys.reflection(a);
    r.expect("reflection involution " + root_to_string(a), s * s == id, yes(s * s == id), "true");
    auto image = sys.apply(s, a);
    Root neg = a;
    for (auto& c : neg) c = -c;
    r.expect("reflection negates " + root_to_string(a), image == neg, root_to_string(image), root_to_string(neg));
    r.expect("pairing with itself " + root_to_string(a), sys.pairing(a, a) == 2, std::to_string(sys.pairing(a, a)),
             "2");
  }
  const MultiPoly e_id = sys.euler_class(id, areg);
  std::size_t longest = 0;
  for (std::size_t k = 0; k < W.size(); ++k) {
    const auto& w = W[k];
    const std::string tag = " w=" + word_to_string(sys.reduced_word(w));
    r.expect("inverse" + tag, w * w.inverse() == id, yes(w * w.inverse() == id), "true");
    auto inv = sys.inversion_set(w);
    const int len = sys.length(w);
    r.expect("inversion set size" + tag, int(inv.size()) == len, std::to_string(inv.size()), std::to_string(len));
    std::size_t brute = 0;
    for (const auto& g : sys.positive_roots())
      if (!RootSystem::is_positive(sys.apply(w, g))) ++brute;
    r.expect("inversion count" + tag, brute == inv.size(), std::to_string(brute), std::to_string(inv.size()));
    for (const auto& g : inv)
      r.expect("inversion sent negative" + tag, RootSystem::is_positive(g) && !RootSystem::is_positive(sys.apply(w, g)),
               root_to_string(sys.apply(w, g)), "negative");
    r.expect("length of inverse" + tag, sys.length(w.inverse()) == len, std::to_string(sys.length(w.inverse())),
             std::to_string(len));
    r.expect("word round trip" + tag, sys.from_word(sys.reduced_word(w)) == w, "differs", "equal");
    MultiPoly signed_e = (len % 2 == 0) ? e_id : -e_id;
    r.expect("euler sign" + tag, sys.euler_class(w, areg) == signed_e, sys.euler_class(w, areg).to_string(),
             signed_e.to_string());
    longest = std::max<std::size_t>(longest, std::size_t(len));
    for (std::size_t l = 0; l < W.size(); l += 3) {
      const auto& v = W[l];
      for (const auto& a : sys.roots()) {
        auto lhs = sys.apply(w * v, a), rhs = sys.apply(w, sys.apply(v, a));
        if (lhs != rhs) r.expect("action composes" + tag, false, root_to_string(lhs), root_to_string(rhs));
      }
      auto f = RatFunc(sys.linear_form(sys.simple_root(1), areg)) / RatFunc(e_id);
      r.expect_equal("ratfunc action composes" + tag, sys.act_on_ratfunc(w * v, f),
                     sys.act_on_ratfunc(w, sys.act_on_ratfunc(v, f)));
    }
  }
  r.expect("longest length", longest == sys.num_positive() && std::size_t(sys.length(sys.longest())) == longest,
           std::to_string(longest), std::to_string(sys.num_positive()));
  r.finish();
  return r;
}

VerificationReport type_a_permutation_model(int rank) {
  using namespace roots;
  VerificationReport r("type-a-permutation-model");
  ReportTimer timer(r);
  r.param("rank", rank);
  const RootSystem sys = RootSystem::generate(CartanMatrix::of_type('A', rank));
  const auto& W = sys.weyl_group();
  std::set<std::vector<int>> perms;
  for (const auto& w : W) {
    const std::string tag = " w=" + word_to_string(sys.reduced_word(w));
    auto pw = type_a_permutation(sys, w);
    perms.insert(pw);
    long inversions = 0;
    for (std::size_t a = 0; a < pw.size(); ++a)
      for (std::size_t b = a + 1; b < pw.size(); ++b)
        if (pw[a] > pw[b]) ++inversions;
    r.expect("inversions = length" + tag, inversions == sys.length(w), std::to_string(inversions),
             std::to_string(sys.length(w)));
    for (const auto& v : W) {
      auto pv = type_a_permutation(sys, v), pwv = type_a_permutation(sys, w * v);
      std::vector<int> comp(pw.size());
      for (std::size_t a = 0; a < pw.size(); ++a) comp[a] = pw[std::size_t(pv[a])];
      if (comp != pwv) r.expect("homomorphism" + tag, false, "pi_w o pi_v", "pi_wv");
    }
  }
  r.expect("bijective", perms.size() == W.size(), std::to_string(perms.size()), std::to_string(W.size()));
  r.finish();
  return r;
}

}  // namespace gws::props
