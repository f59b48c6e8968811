#include "gws/cli/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "gws/error.hpp"
#include "gws/flaggw/flaggw.hpp"
#include "gws/projgw/projgw.hpp"
#include "gws/toda3/toda3.hpp"

namespace gws::cli {

namespace {

struct Options {
  std::optional<int> n, max_d, max, i, j, rank;
  std::string level = "quick";
  std::string chart = "part1";
  std::string convention = "lemma37";
  std::string form = "b";
  std::string type = "A";
  std::string mode = "plain";
  bool negative_control = false;
  bool timing = false;
  std::string out, json;
};

bool full(const Options& o) { return o.level == "full"; }
int pick(const std::optional<int>& v, int quick, int full_value, const Options& o) {
  return v ? *v : (full(o) ? full_value : quick);
}

void check_bound(int v, int lo, int hi, const std::string& name) {
  if (v < lo || v > hi)
    throw CapExceeded(name + " = " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
}

using Reports = std::vector<VerificationReport>;

std::vector<int> proj_dims(const Options& o) {
  if (o.n) {
    check_bound(*o.n, 0, 8, "n");
    return {*o.n};
  }
  return full(o) ? std::vector<int>{1, 2, 3} : std::vector<int>{1, 2};
}

Reports check_proj_recursion(const Options& o) {
  Reports out;
  for (int n : proj_dims(o)) {
    int d = pick(o.max_d, 4, n >= 3 ? 4 : 5, o);
    check_bound(d, 0, 12, "max-d");
    projgw::ProjSetup setup(n);
    auto r = projgw::verify_theorem_3_3(setup, d);
    r.absorb(projgw::verify_solver(setup, d), "solver ");
    r.finish();
    out.push_back(std::move(r));
  }
  return out;
}

Reports check_proj_degrees(const Options& o) {
  Reports out;
  for (int n : proj_dims(o)) {
    int d = pick(o.max_d, 4, 5, o);
    check_bound(d, 0, 12, "max-d");
    out.push_back(projgw::verify_degrees(projgw::ProjSetup(n), d));
  }
  return out;
}

Reports check_first_order(const Options& o) {
  Reports out;
  for (int n : o.n ? std::vector<int>{*o.n} : std::vector<int>{1, 2, 3})
    out.push_back(projgw::verify_first_order_fractions(projgw::ProjSetup(n)));
  return out;
}

Reports check_euler_prefactor(const Options& o) {
  VerificationReport all("euler-prefactor");
  std::vector<int> dims = o.n ? std::vector<int>{*o.n} : std::vector<int>{1, 2};
  int d_max = pick(o.max_d, 3, 5, o);
  check_bound(d_max, 1, 8, "max-d");
  all.param("max-d", d_max);
  for (int n : dims) {
    projgw::ProjSetup setup(n);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        for (int d = 1; d <= d_max && i != j; ++d)
          for (int k = 1; k <= d; ++k)
            all.absorb(projgw::euler_prefactor_identity(setup, i, j, k, d),
                       "n=" + std::to_string(n) + " i=" + std::to_string(i) + " j=" + std::to_string(j) +
                           " k=" + std::to_string(k) + " d=" + std::to_string(d) + " ");
  }
  all.param("n", o.n ? std::to_string(*o.n) : "1,2");
  all.finish();
  return {all};
}

Reports check_a1_cross(const Options& o) {
  int d = pick(o.max_d, 5, 5, o);
  check_bound(d, 0, 10, "max-d");
  return {flaggw::verify_a1_crosscheck(d)};
}

Reports check_a2_recursion(const Options& o) {
  int n = pick(o.max, 3, 6, o);
  check_bound(n, 0, 8, "max");
  return {flaggw::verify_a2_theorem_3_2(n)};
}

Reports check_a2_solver(const Options& o) {
  int n = pick(o.max, 3, 5, o);
  check_bound(n, 0, 6, "max");
  return {flaggw::verify_a2_solver(n, flaggw::parse_convention(o.convention))};
}

Reports check_lemma34(const Options& o) {
  if (o.i || o.j) {
    if (!(o.i && o.j)) throw PreconditionError("lemma34 needs both --i and --j");
    check_bound(*o.j, 0, 8, "j");
    return {flaggw::verify_lemma_3_4(*o.i, *o.j)};
  }
  Reports out;
  for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 2}})
    out.push_back(flaggw::verify_lemma_3_4(i, j));
  return out;
}

Reports check_flag_coefficients(const Options& o) {
  int k = pick(o.max, 4, 4, o);
  check_bound(k, 1, 6, "max");
  return {flaggw::verify_coeff_formula(k)};
}

Reports check_phi(const Options& o) {
  Reports out;
  for (int n : o.n ? std::vector<int>{*o.n} : std::vector<int>{1, 2, 3}) {
    check_bound(n, 1, 3, "n");
    out.push_back(flaggw::verify_phi_restrictions(n));
  }
  return out;
}

Reports check_flag_degrees(const Options& o) {
  if (o.type.size() != 1) throw PreconditionError("--type must be a single letter");
  int rank = o.rank.value_or(2);
  check_bound(rank, 1, 3, "rank");
  int n = pick(o.max, rank == 3 ? 1 : 3, rank == 3 ? 2 : 4, o);
  check_bound(n, 0, rank == 3 ? 2 : 6, "max");
  return {flaggw::verify_flag_degrees(o.type[0], rank, n)};
}

Reports check_toda_plain(const Options& o) {
  int n = pick(o.max, 6, 12, o);
  check_bound(n, 0, 40, "max");
  return {toda3::verify_recursions_plain(n)};
}

Reports check_batyrev(const Options& o) {
  int n = pick(o.max, 6, 12, o);
  check_bound(n, 0, 40, "max");
  return {toda3::verify_batyrev(n)};
}

Reports check_toda_eq(const Options& o) {
  int n = pick(o.max, 5, 8, o);
  check_bound(n, 0, 12, "max");
  return {toda3::verify_recursions_equivariant(n)};
}

Reports check_toda_operators(const Options& o) {
  if (o.mode != "plain" && o.mode != "equivariant" && o.mode != "both")
    throw PreconditionError("--mode must be plain, equivariant or both");
  Reports out;
  if (o.mode != "equivariant") {
    int n = pick(o.max, 6, 12, o);
    check_bound(n, 0, 30, "max");
    out.push_back(toda3::verify_operator_annihilation(n, false, o.negative_control));
  }
  if (o.mode != "plain") {
    int n = pick(o.max, 5, 8, o);
    check_bound(n, 0, 10, "max");
    out.push_back(toda3::verify_operator_annihilation(n, true, o.negative_control));
  }
  return out;
}

Reports check_corollary35(const Options& o) {
  int n = pick(o.max, 3, 5, o);
  check_bound(n, 0, 6, "max");
  return {toda3::verify_corollary_3_5(n)};
}

using CheckFn = std::function<Reports(const Options&)>;

const std::vector<std::pair<std::string, CheckFn>>& checks() {
  static const std::vector<std::pair<std::string, CheckFn>> table{
      {"proj-recursion", check_proj_recursion},
      {"proj-degrees", check_proj_degrees},
      {"first-order", check_first_order},
      {"euler-prefactor", check_euler_prefactor},
      {"a1-cross", check_a1_cross},
      {"flag-coefficients", check_flag_coefficients},
      {"phi", check_phi},
      {"a2-recursion", check_a2_recursion},
      {"lemma34", check_lemma34},
      {"a2-solver", check_a2_solver},
      {"flag-degrees", check_flag_degrees},
      {"toda-plain", check_toda_plain},
      {"toda-eq", check_toda_eq},
      {"toda-operators", check_toda_operators},
      {"batyrev", check_batyrev},
      {"corollary35", check_corollary35},
  };
  return table;
}

Reports run_check(const std::string& name, const Options& o) {
  if (name == "all") {
    Options sub;
    sub.level = o.level;
    sub.mode = "both";
    Reports out;
    for (const auto& [n, fn] : checks())
      for (auto& r : fn(sub)) out.push_back(std::move(r));
    return out;
  }
  for (const auto& [n, fn] : checks())
    if (n == name) return fn(o);
  throw PreconditionError("unknown check '" + name + "'");
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open '" + path + "' for writing");
  f << text;
}

std::string series_proj(const Options& o) {
  int n = o.n.value_or(1);
  check_bound(n, 0, 6, "n");
  int d = o.max_d.value_or(3);
  check_bound(d, 0, n >= 3 ? 5 : 8, "max-d");
  projgw::ProjSetup setup(n);
  projgw::Form form = projgw::parse_form(o.form);
  auto tables = projgw::solve_recursion(setup, d);
  std::ostringstream os;
  os << "# gws-series " << kReportVersion << " proj n=" << n << " max-d=" << d << " form=" << projgw::to_string(form)
     << "\n";
  std::vector<projgw::ProjSeriesTable> conv;
  for (const auto& t : tables) conv.push_back(projgw::to_form(setup, t, form));
  os << projgw::golden_lines(setup, conv);
  if (n == 1 && roots::parse_chart(o.chart) == roots::Chart::part1 && form == projgw::Form::b) {
    const RatFunc q = RatFunc::variable(projgw::alpha_registry(), "q");
    for (const auto& t : conv) {
      std::vector<RatFunc> c;
      for (const auto& x : t.coeffs) {
        RatFunc y = projgw::to_alpha(setup, x);
        c.push_back(t.i == 0 ? y : y.substitute({{"alpha", -RatFunc::variable(projgw::alpha_registry(), "alpha")}}));
      }
      os << (t.i == 0 ? "# alpha = lambda_0 - lambda_1\n" : "# alpha = lambda_1 - lambda_0\n");
      os << "s_" << t.i << " = " << projgw::series_text(c, q) << "\n";
    }
  }
  return os.str();
}

std::string series_flag(const Options& o, int rank) {
  int n = rank == 1 ? o.max_d.value_or(o.max.value_or(4)) : o.max.value_or(3);
  check_bound(n, 0, rank == 1 ? 10 : 5, rank == 1 ? "max-d" : "max");
  auto chart = roots::parse_chart(o.chart);
  auto conv = flaggw::parse_convention(o.convention);
  flaggw::FlagSetup setup = flaggw::FlagSetup::type('A', rank, chart);
  auto tables = flaggw::solve_flag_recursion(setup, flaggw::Multidegree(std::size_t(rank), n), conv);
  for (auto& t : tables)
    std::erase_if(t.coeffs, [&](const auto& kv) {
      int s = 0;
      for (int x : kv.first) s += x;
      return s > n;
    });
  std::ostringstream os;
  os << "# gws-series " << kReportVersion << " flag-a" << rank << " max=" << n << " convention="
     << flaggw::to_string(conv) << "\n";
  os << flaggw::golden_lines(setup, tables, "A" + std::to_string(rank));
  return os.str();
}

std::string series_toda(const Options& o, bool equivariant) {
  int n = o.max.value_or(equivariant ? 3 : 4);
  check_bound(n, 0, equivariant ? 10 : 40, "max");
  toda3::BiSeries s(n);
  if (equivariant) {
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) s.set(i, j, toda3::closed_a_equivariant(i, j));
  } else {
    s = toda3::rebuild_plain(n);
  }
  std::ostringstream os;
  os << "# gws-series " << kReportVersion << (equivariant ? " toda-eq" : " toda") << " max=" << n << "\n";
  os << toda3::golden_lines(s);
  return os.str();
}

}  // namespace

std::string format_reports(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "gws-report " << kReportVersion << "\n";
  std::size_t failed = 0;
  for (const auto& r : reports) {
    os << "check " << r.check << "\n";
    for (const auto& [k, v] : r.params) os << "param " << k << " " << v << "\n";
    os << "status " << to_string(r.status) << "\n";
    os << "compared " << r.compared << "\n";
    for (const auto& f : r.failures) os << "failure " << f.location << "\n  lhs " << f.lhs << "\n  rhs " << f.rhs << "\n";
    for (const auto& n : r.notes) os << "note " << n << "\n";
    os << "end\n";
    if (r.status == Status::fail) ++failed;
  }
  os << "summary " << reports.size() << " checks, " << failed << " failed\n";
  return os.str();
}

std::string reports_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json root;
  root["format"] = "gws-report";
  root["version"] = kReportVersion;
  root["reports"] = nlohmann::ordered_json::array();
  root["timing"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) j["params"][k] = v;
    j["status"] = to_string(r.status);
    j["compared"] = r.compared;
    j["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : r.failures) j["failures"].push_back({{"location", f.location}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    j["notes"] = r.notes;
    root["reports"].push_back(j);
    root["timing"].push_back({{"check", r.check}, {"wall_ms", r.wall_ms}});
  }
  return root.dump(2) + "\n";
}

int exit_code(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (r.status == Status::fail) return 1;
  return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact equivariant Gromov-Witten series and identity checks"};
  app.require_subcommand(1);
  Options o;
  std::string target, check;

  auto* series = app.add_subcommand("series", "write a coefficient table");
  series->add_option("target", target, "proj | flag-a1 | flag-a2 | toda | toda-eq")
      ->required()
      ->check(CLI::IsMember({"proj", "flag-a1", "flag-a2", "toda", "toda-eq"}));
  auto* verify = app.add_subcommand("verify", "run an identity check");
  std::vector<std::string> names{"all"};
  for (const auto& [n, fn] : checks()) names.push_back(n);
  verify->add_option("check", check, "check name")->required()->check(CLI::IsMember(names));

  for (auto* sub : {series, verify}) {
    sub->add_option("--n", o.n, "projective dimension or A_n rank");
    sub->add_option("--max-d", o.max_d, "maximal degree d");
    sub->add_option("--max", o.max, "maximal total degree (or k for coefficient checks)");
    sub->add_option("--chart", o.chart, "alpha chart")->check(CLI::IsMember({"part1", "part3"}));
    sub->add_option("--convention", o.convention, "flag recursion convention")
        ->check(CLI::IsMember({"lemma37", "theorem38"}));
    sub->add_option("--out", o.out, "output path (default stdout)");
  }
  series->add_option("--form", o.form, "projective coefficient form")->check(CLI::IsMember({"B", "b", "u", "norm"}));
  verify->add_option("--level", o.level, "default bounds")->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--i", o.i, "first index (lemma34)");
  verify->add_option("--j", o.j, "second index (lemma34)");
  verify->add_option("--type", o.type, "root system type (flag-degrees)")
      ->check(CLI::IsMember({"A", "B", "C", "G"}));
  verify->add_option("--rank", o.rank, "root system rank (flag-degrees)");
  verify->add_option("--mode", o.mode, "plain | equivariant | both (toda-operators)");
  verify->add_flag("--negative-control", o.negative_control, "apply the operators to the constant series 1");
  verify->add_option("--json", o.json, "also write the JSON mirror to this path");
  verify->add_flag("--timing", o.timing, "append wall times after the report");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (series->parsed()) {
      std::string text;
      if (target == "proj")
        text = series_proj(o);
      else if (target == "flag-a1")
        text = series_flag(o, 1);
      else if (target == "flag-a2")
        text = series_flag(o, 2);
      else
        text = series_toda(o, target == "toda-eq");
      emit(text, o.out, out);
      return 0;
    }
    auto reports = run_check(check, o);
    std::string text = format_reports(reports);
    if (o.timing) {
      std::ostringstream t;
      for (const auto& r : reports) t << "timing " << r.check << " " << r.wall_ms << " ms\n";
      text += t.str();
    }
    emit(text, o.out, out);
    if (!o.json.empty()) emit(reports_json(reports), o.json, out);
    return exit_code(reports);
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace gws::cli
