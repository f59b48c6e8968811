#pragma once

#include <map>
#include <string>
#include <vector>

#include "gws/exactalg/ratfunc.hpp"
#include "gws/report.hpp"
#include "gws/roots/roots.hpp"

namespace gws::flaggw {

using roots::Root;
using roots::RootSystem;
using roots::WeylElement;

// Root system plus a registry alpha_1..alpha_r, h; type A also carries
// lambda_0..lambda_n and u_0..u_n.
class FlagSetup {
 public:
  explicit FlagSetup(const roots::CartanMatrix& cartan, roots::Chart chart = roots::Chart::part1);
  static FlagSetup type(char t, int rank, roots::Chart chart = roots::Chart::part1);

  const RootSystem& system() const { return sys_; }
  const RegistryPtr& registry() const { return reg_; }
  bool is_type_a() const { return type_a_; }
  roots::Chart chart() const { return chart_; }

  RatFunc alpha(int i) const;
  RatFunc h() const;
  RatFunc form(const Root& r) const;  // sum a_i alpha_i
  // alpha_i -> lambda chart images (type A only).
  std::map<std::string, RatFunc> chart_images() const;

 private:
  RootSystem sys_;
  RegistryPtr reg_;
  bool type_a_ = false;
  roots::Chart chart_;
};

// Class in the u-variables with lambda coefficients.
struct FlagClass {
  RatFunc value;
};

FlagClass phi_w(const FlagSetup& setup, const WeylElement& w);
// u_p -> lambda_{w(p)}.
RatFunc restrict_to(const FlagSetup& setup, const FlagClass& f, const WeylElement& w);
MultiPoly euler_lambda(const FlagSetup& setup, const WeylElement& w);  // prod_{p<q} (lambda_{w(p)} - lambda_{w(q)})

// Truncated factor of the coefficient product for one gamma (see coeff_C_id).
RatFunc truncated_factor(const FlagSetup& setup, const Root& gamma, const Root& alpha, int k);
// Same factor in the form whose degree is the Euler characteristic:
// prod_{m>=0}(gamma - m/k alpha) / prod_{m>=1}(s_alpha gamma - m/k alpha).
RatFunc euler_char_factor(const FlagSetup& setup, const Root& gamma, const Root& alpha, int k);

RatFunc coeff_C_id(const FlagSetup& setup, const Root& alpha, int k, bool prune = true);
// The same coefficient assembled from the normal-bundle Euler class and the
// degree shift k |alpha^vee|.
RatFunc coeff_C_id_from_normal_bundle(const FlagSetup& setup, const Root& alpha, int k);
RatFunc coeff_C_w(const FlagSetup& setup, const WeylElement& w, const Root& alpha, int k);

enum class Convention { lemma37, theorem38 };
Convention parse_convention(const std::string& s);
std::string to_string(Convention c);

using Multidegree = std::vector<int>;  // coroot-basis coordinates

struct FlagSeriesTable {
  WeylElement w;
  std::vector<int> word;
  std::map<Multidegree, RatFunc> coeffs;
};

// Coroot-basis coordinates of gamma^vee.
Multidegree coroot(const RootSystem& sys, const Root& gamma);

// literal: the printed closed product; normal_bundle: the same product with
// the degree shift taken from the coroot height (differs only for
// non-simply-laced non-simple roots).
enum class CoeffSource { literal, normal_bundle };

// Tables z_w for every w, for all multidegrees componentwise <= beta_max.
std::vector<FlagSeriesTable> solve_flag_recursion(const FlagSetup& setup, const Multidegree& beta_max,
                                                  Convention conv = Convention::lemma37,
                                                  CoeffSource source = CoeffSource::normal_bundle);
const FlagSeriesTable& table_for(const std::vector<FlagSeriesTable>& tables, const WeylElement& w);

// The A2 closed form a_ij(alpha_1, alpha_2; h) (z-normalization).
RatFunc a2_closed(const FlagSetup& setup, int i, int j);

VerificationReport verify_a1_crosscheck(int d_max);
VerificationReport verify_a2_theorem_3_2(int n_max);
VerificationReport verify_lemma_3_4(int i, int j);
VerificationReport verify_a2_solver(int n_max, Convention conv = Convention::lemma37);
VerificationReport verify_coeff_formula(int k_max);
VerificationReport verify_phi_restrictions(int n);
VerificationReport verify_flag_degrees(char type, int rank, int total_max,
                                       CoeffSource source = CoeffSource::normal_bundle);

std::string golden_lines(const FlagSetup& setup, const std::vector<FlagSeriesTable>& tables, const std::string& type);

}  // namespace gws::flaggw
