#pragma once

#include <map>
#include <string>
#include <vector>

#include "gws/exactalg/ratfunc.hpp"

namespace gws::roots {

// Coordinates in the simple-root basis.
using Root = std::vector<int>;

class CartanMatrix {
 public:
  // entries[i][j] = <alpha_j, alpha_i^vee>.
  explicit CartanMatrix(std::vector<std::vector<int>> entries);
  // Standard matrices for types A, B, C, D, G (Bourbaki numbering).
  static CartanMatrix of_type(char type, int rank);

  int rank() const { return int(a_.size()); }
  int operator()(int i, int j) const { return a_[std::size_t(i)][std::size_t(j)]; }
  const std::vector<std::vector<int>>& entries() const { return a_; }

 private:
  std::vector<std::vector<int>> a_;
};

struct Caps {
  std::size_t positive_roots = 200;
  std::size_t weyl_elements = 10000;
};

class RootSystem;

// Weyl group element as a permutation of the full root list of its system.
class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(std::vector<int> perm) : perm_(std::move(perm)) {}

  const std::vector<int>& perm() const { return perm_; }
  int image(int root_index) const { return perm_[std::size_t(root_index)]; }

  WeylElement operator*(const WeylElement& o) const;  // (this * o)(x) = this(o(x))
  WeylElement inverse() const;
  bool operator==(const WeylElement& o) const { return perm_ == o.perm_; }
  bool operator<(const WeylElement& o) const { return perm_ < o.perm_; }

 private:
  std::vector<int> perm_;
};

class RootSystem {
 public:
  static RootSystem generate(const CartanMatrix& cartan, Caps caps = {});

  int rank() const { return cartan_.rank(); }
  const CartanMatrix& cartan() const { return cartan_; }
  // Positive roots first (by height, then lexicographically), then their negatives in the same order.
  const std::vector<Root>& roots() const { return roots_; }
  std::vector<Root> positive_roots() const;
  std::size_t num_positive() const { return roots_.size() / 2; }
  int index_of(const Root& r) const;  // -1 when r is not a root
  bool is_root(const Root& r) const { return index_of(r) >= 0; }
  static bool is_positive(const Root& r);
  static int height(const Root& r);
  Root simple_root(int i) const;

  // <gamma, alpha^vee>.
  int pairing(const Root& gamma, const Root& alpha) const;
  // Coordinates of gamma^vee in the simple-coroot basis.
  Root coroot(const Root& gamma) const;
  // s_alpha(gamma); throws PreconditionError when alpha is not a root.
  Root reflect(const Root& alpha, const Root& gamma) const;

  const std::vector<WeylElement>& weyl_group() const { return weyl_; }
  WeylElement identity() const;
  WeylElement simple_reflection(int i) const;
  WeylElement reflection(const Root& alpha) const;
  WeylElement from_word(const std::vector<int>& word) const;  // 1-based simple indices
  WeylElement longest() const;
  Root apply(const WeylElement& w, const Root& r) const;

  // Reduced word (1-based indices, w = s_{word[0]} ... s_{word[k-1]}).
  std::vector<int> reduced_word(const WeylElement& w) const;
  int length(const WeylElement& w) const { return int(reduced_word(w).size()); }
  // R+ intersected with w^{-1}(-R+), built from the reduced word.
  std::vector<Root> inversion_set(const WeylElement& w) const;

  // Registry names of the simple-root variables.
  static std::string alpha_name(int i) { return "alpha_" + std::to_string(i); }
  MultiPoly linear_form(const Root& r, const RegistryPtr& reg) const;
  // alpha_i -> w(alpha_i) in f.
  RatFunc act_on_ratfunc(const WeylElement& w, const RatFunc& f) const;
  MultiPoly euler_class(const WeylElement& w, const RegistryPtr& reg) const;

  std::string describe() const;

 private:
  explicit RootSystem(CartanMatrix c) : cartan_(std::move(c)) {}

  CartanMatrix cartan_;
  std::vector<long> sym_;  // (alpha_i, alpha_i) up to a common factor
  std::vector<Root> roots_;
  std::map<Root, int> index_;
  std::vector<WeylElement> weyl_;
};

// Type A_n: s_i is the transposition (i-1 i) of {0..n}; w acts on
// lambda_a by lambda_a -> lambda_{pi(a)}.
std::vector<int> type_a_permutation(const RootSystem& sys, const WeylElement& w);

enum class Chart { part1, part3 };  // alpha_i = lambda_{i-1} - lambda_i, or lambda_i - lambda_{i-1}
Chart parse_chart(const std::string& s);
std::string to_string(Chart c);
// Images alpha_i -> lambda-linear form over `reg` (which must hold lambda_0..lambda_n).
std::map<std::string, RatFunc> type_a_chart(int n, Chart chart, const RegistryPtr& reg);

std::string word_to_string(const std::vector<int>& word);  // "id" or "s1s2"
std::string root_to_string(const Root& r);

}  // namespace gws::roots
