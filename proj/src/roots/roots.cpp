#include "gws/roots/roots.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "gws/error.hpp"

namespace gws::roots {

CartanMatrix::CartanMatrix(std::vector<std::vector<int>> entries) : a_(std::move(entries)) {
  const std::size_t r = a_.size();
  if (r == 0) throw PreconditionError("Cartan matrix must have positive rank");
  for (std::size_t i = 0; i < r; ++i) {
    if (a_[i].size() != r) throw PreconditionError("Cartan matrix must be square");
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j && a_[i][j] != 2) throw PreconditionError("Cartan matrix diagonal must be 2");
      if (i != j && a_[i][j] > 0) throw PreconditionError("Cartan matrix off-diagonal entries must be <= 0");
      if (i != j && (a_[i][j] == 0) != (a_[j][i] == 0))
        throw PreconditionError("Cartan matrix zero pattern must be symmetric");
    }
  }
}

CartanMatrix CartanMatrix::of_type(char type, int rank) {
  if (rank < 1) throw PreconditionError("rank must be positive");
  const std::size_t r = std::size_t(rank);
  std::vector<std::vector<int>> a(r, std::vector<int>(r, 0));
  for (std::size_t i = 0; i < r; ++i) a[i][i] = 2;
  auto link = [&](std::size_t i, std::size_t j) { a[i][j] = a[j][i] = -1; };
  switch (type) {
    case 'A':
      for (std::size_t i = 0; i + 1 < r; ++i) link(i, i + 1);
      break;
    case 'B':
    case 'C':
      if (rank < 2) throw PreconditionError("types B and C need rank >= 2");
      for (std::size_t i = 0; i + 1 < r; ++i) link(i, i + 1);
      // B: alpha_r short; C: alpha_r long.
      if (type == 'B')
        a[r - 1][r - 2] = -2;
      else
        a[r - 2][r - 1] = -2;
      break;
    case 'D':
      if (rank < 4) throw PreconditionError("type D needs rank >= 4");
      for (std::size_t i = 0; i + 2 < r; ++i) link(i, i + 1);
      link(r - 3, r - 1);
      break;
    case 'G':
      if (rank != 2) throw PreconditionError("type G has rank 2");
      // alpha_1 short.
      a[0][1] = -3;
      a[1][0] = -1;
      break;
    default:
      throw PreconditionError(std::string("unsupported root system type '") + type + "'");
  }
  return CartanMatrix(std::move(a));
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  std::vector<int> p(perm_.size());
  for (std::size_t x = 0; x < p.size(); ++x) p[x] = perm_[std::size_t(o.perm_[x])];
  return WeylElement(std::move(p));
}

WeylElement WeylElement::inverse() const {
  std::vector<int> p(perm_.size());
  for (std::size_t x = 0; x < p.size(); ++x) p[std::size_t(perm_[x])] = int(x);
  return WeylElement(std::move(p));
}

namespace {

Root simple_reflect(const CartanMatrix& a, int i, const Root& beta) {
  int c = 0;
  for (int j = 0; j < a.rank(); ++j) c += beta[std::size_t(j)] * a(i, j);
  Root out = beta;
  out[std::size_t(i)] -= c;
  return out;
}

std::vector<long> symmetrizer(const CartanMatrix& a) {
  const int r = a.rank();
  std::vector<Rational> d(std::size_t(r), Rational(0));
  for (int start = 0; start < r; ++start) {
    if (d[std::size_t(start)] != 0) continue;
    d[std::size_t(start)] = 1;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < r; ++j) {
        if (j == i || a(i, j) == 0) continue;
        Rational dj = d[std::size_t(i)] * a(i, j) / a(j, i);
        if (d[std::size_t(j)] == 0) {
          d[std::size_t(j)] = dj;
          queue.push_back(j);
        } else if (d[std::size_t(j)] != dj) {
          throw PreconditionError("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  Integer l = 1;
  for (const auto& x : d) l = lcm(l, Integer(x.get_den()));
  std::vector<long> out;
  for (const auto& x : d) {
    Rational y = x * l;
    out.push_back(Integer(y.get_num()).get_si());
  }
  return out;
}

}  // namespace

RootSystem RootSystem::generate(const CartanMatrix& cartan, Caps caps) {
  RootSystem sys(cartan);
  const int r = cartan.rank();
  sys.sym_ = symmetrizer(cartan);

  std::vector<Root> pos;
  std::map<Root, int> seen;
  std::deque<Root> queue;
  for (int i = 0; i < r; ++i) {
    Root e(std::size_t(r), 0);
    e[std::size_t(i)] = 1;
    pos.push_back(e);
    seen[e] = 1;
    queue.push_back(e);
  }
  while (!queue.empty()) {
    Root beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < r; ++i) {
      Root g = simple_reflect(cartan, i, beta);
      if (!is_positive(g) || seen.count(g)) continue;
      if (pos.size() >= caps.positive_roots) throw CapExceeded("positive-root cap exceeded");
      seen[g] = 1;
      pos.push_back(g);
      queue.push_back(g);
    }
  }
  std::sort(pos.begin(), pos.end(), [](const Root& a, const Root& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  sys.roots_ = pos;
  for (const auto& p : pos) {
    Root n = p;
    for (auto& x : n) x = -x;
    sys.roots_.push_back(n);
  }
  for (std::size_t k = 0; k < sys.roots_.size(); ++k) sys.index_[sys.roots_[k]] = int(k);

  std::vector<WeylElement> gens;
  for (int i = 1; i <= r; ++i) gens.push_back(sys.simple_reflection(i));
  std::map<WeylElement, int> known;
  WeylElement id = sys.identity();
  sys.weyl_.push_back(id);
  known[id] = 0;
  for (std::size_t k = 0; k < sys.weyl_.size(); ++k) {
    for (const auto& s : gens) {
      WeylElement w = sys.weyl_[k] * s;
      if (known.count(w)) continue;
      if (sys.weyl_.size() >= caps.weyl_elements) throw CapExceeded("Weyl-group cap exceeded");
      known[w] = int(sys.weyl_.size());
      sys.weyl_.push_back(w);
    }
  }
  return sys;
}

std::vector<Root> RootSystem::positive_roots() const {
  return {roots_.begin(), roots_.begin() + std::ptrdiff_t(num_positive())};
}

int RootSystem::index_of(const Root& r) const {
  auto it = index_.find(r);
  return it == index_.end() ? -1 : it->second;
}

bool RootSystem::is_positive(const Root& r) {
  bool any = false;
  for (int x : r) {
    if (x < 0) return false;
    any = any || x > 0;
  }
  return any;
}

int RootSystem::height(const Root& r) { return std::accumulate(r.begin(), r.end(), 0); }

Root RootSystem::simple_root(int i) const {
  if (i < 1 || i > rank()) throw PreconditionError("simple root index out of range");
  Root e(std::size_t(rank()), 0);
  e[std::size_t(i - 1)] = 1;
  return e;
}

int RootSystem::pairing(const Root& gamma, const Root& alpha) const {
  const int r = rank();
  long ga = 0, aa = 0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      long b = sym_[std::size_t(i)] * cartan_(i, j);  // (alpha_i, alpha_j) up to scale
      ga += long(gamma[std::size_t(i)]) * alpha[std::size_t(j)] * b;
      aa += long(alpha[std::size_t(i)]) * alpha[std::size_t(j)] * b;
    }
  if (aa == 0 || (2 * ga) % aa != 0) throw PreconditionError("pairing with a non-root");
  return int(2 * ga / aa);
}

Root RootSystem::coroot(const Root& gamma) const {
  if (!is_root(gamma)) throw PreconditionError("coroot of a non-root " + root_to_string(gamma));
  const int r = rank();
  long gg = 0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      gg += long(gamma[std::size_t(i)]) * gamma[std::size_t(j)] * sym_[std::size_t(i)] * cartan_(i, j);
  Root out(std::size_t(r), 0);
  for (int i = 0; i < r; ++i) {
    long v = 2 * long(gamma[std::size_t(i)]) * sym_[std::size_t(i)];
    if (v % gg != 0) throw Error("non-integral coroot coordinates");
    out[std::size_t(i)] = int(v / gg);
  }
  return out;
}

Root RootSystem::reflect(const Root& alpha, const Root& gamma) const {
  if (!is_root(alpha)) throw PreconditionError("reflection in a non-root " + root_to_string(alpha));
  int c = pairing(gamma, alpha);
  Root out = gamma;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= c * alpha[i];
  return out;
}

WeylElement RootSystem::identity() const {
  std::vector<int> p(roots_.size());
  std::iota(p.begin(), p.end(), 0);
  return WeylElement(std::move(p));
}

WeylElement RootSystem::reflection(const Root& alpha) const {
  std::vector<int> p(roots_.size());
  for (std::size_t k = 0; k < roots_.size(); ++k) p[k] = index_of(reflect(alpha, roots_[k]));
  return WeylElement(std::move(p));
}

WeylElement RootSystem::simple_reflection(int i) const { return reflection(simple_root(i)); }

WeylElement RootSystem::from_word(const std::vector<int>& word) const {
  WeylElement w = identity();
  for (int i : word) w = w * simple_reflection(i);
  return w;
}

WeylElement RootSystem::longest() const {
  WeylElement best = identity();
  int best_len = 0;
  for (const auto& w : weyl_) {
    int l = length(w);
    if (l > best_len) {
      best = w;
      best_len = l;
    }
  }
  return best;
}

Root RootSystem::apply(const WeylElement& w, const Root& r) const {
  int k = index_of(r);
  if (k < 0) throw PreconditionError("not a root: " + root_to_string(r));
  return roots_[std::size_t(w.image(k))];
}

std::vector<int> RootSystem::reduced_word(const WeylElement& w) const {
  std::vector<int> rev;
  WeylElement cur = w;
  WeylElement id = identity();
  while (!(cur == id)) {
    bool found = false;
    for (int i = 1; i <= rank(); ++i) {
      if (!is_positive(apply(cur, simple_root(i)))) {
        rev.push_back(i);
        cur = cur * simple_reflection(i);
        found = true;
        break;
      }
    }
    if (!found) throw Error("reduced word: element without descent");
  }
  return {rev.rbegin(), rev.rend()};
}

std::vector<Root> RootSystem::inversion_set(const WeylElement& w) const {
  auto word = reduced_word(w);
  std::vector<Root> inv;
  WeylElement u = identity();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    inv.push_back(apply(u, simple_root(*it)));
    u = u * simple_reflection(*it);
  }
  std::sort(inv.begin(), inv.end(), [&](const Root& a, const Root& b) { return index_of(a) < index_of(b); });
  return inv;
}

MultiPoly RootSystem::linear_form(const Root& r, const RegistryPtr& reg) const {
  MultiPoly out(reg);
  for (int i = 0; i < rank(); ++i)
    if (r[std::size_t(i)]) out += Rational(r[std::size_t(i)]) * MultiPoly::variable(reg, alpha_name(i + 1));
  return out;
}

RatFunc RootSystem::act_on_ratfunc(const WeylElement& w, const RatFunc& f) const {
  std::map<std::string, RatFunc> images;
  for (int i = 1; i <= rank(); ++i)
    images.emplace(alpha_name(i), RatFunc(linear_form(apply(w, simple_root(i)), f.registry())));
  return f.substitute(images);
}

MultiPoly RootSystem::euler_class(const WeylElement& w, const RegistryPtr& reg) const {
  MultiPoly e(reg, Rational(1));
  for (const auto& g : positive_roots()) e *= linear_form(apply(w, g), reg);
  return e;
}

std::string RootSystem::describe() const {
  std::ostringstream os;
  os << "rank " << rank() << "\ncartan";
  for (const auto& row : cartan_.entries()) {
    os << " [";
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << "]";
  }
  os << "\npositive_roots " << num_positive() << ":";
  for (const auto& g : positive_roots()) os << " " << root_to_string(g);
  os << "\nweyl_order " << weyl_.size() << "\n";
  return os.str();
}

std::vector<int> type_a_permutation(const RootSystem& sys, const WeylElement& w) {
  const int n = sys.rank();
  if (!(sys.cartan().entries() == CartanMatrix::of_type('A', n).entries()))
    throw PreconditionError("permutation model needs a type A root system");
  std::vector<int> pi(std::size_t(n) + 1);
  std::iota(pi.begin(), pi.end(), 0);
  // pi = tau_{i1} o ... o tau_{ik}: apply the transpositions right to left.
  auto word = sys.reduced_word(w);
  for (auto& x : pi)
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      int a = *it - 1, b = *it;
      if (x == a)
        x = b;
      else if (x == b)
        x = a;
    }
  return pi;
}

Chart parse_chart(const std::string& s) {
  if (s == "part1") return Chart::part1;
  if (s == "part3") return Chart::part3;
  throw PreconditionError("unknown chart '" + s + "'");
}

std::string to_string(Chart c) { return c == Chart::part1 ? "part1" : "part3"; }

std::map<std::string, RatFunc> type_a_chart(int n, Chart chart, const RegistryPtr& reg) {
  std::map<std::string, RatFunc> out;
  for (int i = 1; i <= n; ++i) {
    RatFunc prev = RatFunc::variable(reg, "lambda_" + std::to_string(i - 1));
    RatFunc cur = RatFunc::variable(reg, "lambda_" + std::to_string(i));
    out.emplace(RootSystem::alpha_name(i), chart == Chart::part1 ? prev - cur : cur - prev);
  }
  return out;
}

std::string word_to_string(const std::vector<int>& word) {
  if (word.empty()) return "id";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i);
  return s;
}

std::string root_to_string(const Root& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + ")";
}

}  // namespace gws::roots
