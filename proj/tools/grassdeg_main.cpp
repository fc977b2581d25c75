#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "grassdeg/closure.hpp"
#include "grassdeg/degree.hpp"
#include "grassdeg/repdim.hpp"

namespace {

using grassdeg::GaussianRational;
using grassdeg::GRMatrix;
using grassdeg::Int;
using grassdeg::Rational;
using json = nlohmann::json;

constexpr const char* kToolVersion = "0.1.0";
constexpr std::uint64_t kDefaultSeed = 20250809;

// exit codes: 0 ok, 1 usage, 2 cross-check disagreement
constexpr int kExitUsage = 1;
constexpr int kExitDisagreement = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DisagreementError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json make_envelope(const std::string& command, json parameters, json results,
                   std::optional<std::uint64_t> seed = std::nullopt) {
  json env;
  env["command"] = command;
  env["parameters"] = std::move(parameters);
  env["results"] = std::move(results);
  if (seed) env["seed"] = *seed;
  env["toolVersion"] = kToolVersion;
  return env;
}

void emit(const json& env) { std::cout << env.dump(2) << "\n"; }

json lambda_to_json(const grassdeg::Partition& lambda, int k) {
  json arr = json::array();
  for (int i = 0; i < k; ++i) arr.push_back(lambda.part(i));
  return arr;
}

json report_to_json(const grassdeg::DegreeReport& report) {
  json terms = json::array();
  int k_reduced = std::min(report.k, report.n - report.k);
  for (const auto& t : report.terms) {
    terms.push_back(json{{"lambda", lambda_to_json(t.lambda, k_reduced)},
                         {"A_coeff", grassdeg::to_string(t.a.coeff())},
                         {"A_sqrtpi", t.a.half_pi_exp()},
                         {"B_coeff", grassdeg::to_string(t.b.coeff())},
                         {"B_sqrtpi", t.b.half_pi_exp()},
                         {"C", grassdeg::to_string(t.c)}});
  }
  return json{{"k", report.k},
              {"n", report.n},
              {"degree", grassdeg::to_string(report.degree)},
              {"alpha", grassdeg::to_string(report.alpha_kn)},
              {"terms", std::move(terms)},
              {"method", report.method}};
}

std::string pi_str(const grassdeg::PiScaled& v) { return v.str(); }

// ----- matrix input ------------------------------------------------------

GRMatrix matrix_from_json_text(const std::string& text) {
  json parsed;
  try {
    parsed = json::parse(text);
  } catch (const json::parse_error& e) {
    // translate byte offset into line/column
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw UsageError("matrix JSON parse error at line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ": " + e.what());
  }
  if (!parsed.is_array() || parsed.empty())
    throw UsageError("matrix must be a nonempty JSON array of arrays");
  const int rows = static_cast<int>(parsed.size());
  if (!parsed[0].is_array() || parsed[0].empty())
    throw UsageError("matrix rows must be nonempty arrays");
  const int cols = static_cast<int>(parsed[0].size());
  GRMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!parsed[i].is_array() || static_cast<int>(parsed[i].size()) != cols)
      throw UsageError("matrix row " + std::to_string(i) + " has inconsistent length");
    for (int j = 0; j < cols; ++j) {
      const json& cell = parsed[i][j];
      try {
        if (cell.is_string())
          m.at(i, j) = GaussianRational::parse(cell.get<std::string>());
        else if (cell.is_number_integer())
          m.at(i, j) = GaussianRational(Rational(cell.get<long>()));
        else
          throw std::invalid_argument("entries must be strings or integers");
      } catch (const std::invalid_argument& e) {
        throw UsageError("matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                         "): " + e.what());
      }
    }
  }
  return m;
}

GRMatrix parse_matrix_argument(const std::string& arg) {
  if (arg.rfind("diag(", 0) == 0 && arg.back() == ')') {
    std::string inner = arg.substr(5, arg.size() - 6);
    std::vector<GaussianRational> diag;
    std::string cur;
    for (char c : inner) {
      if (c == ',') {
        diag.push_back(GaussianRational::parse(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) diag.push_back(GaussianRational::parse(cur));
    if (diag.empty()) throw UsageError("diag(...) needs at least one entry");
    GRMatrix m(static_cast<int>(diag.size()), static_cast<int>(diag.size()));
    for (std::size_t i = 0; i < diag.size(); ++i)
      m.at(static_cast<int>(i), static_cast<int>(i)) = diag[i];
    return m;
  }
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw UsageError("cannot open matrix file '" + arg.substr(1) + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return matrix_from_json_text(ss.str());
  }
  return matrix_from_json_text(arg);
}

json matrix_to_json(const GRMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

// ----- degree ------------------------------------------------------------

struct DegreeOptions {
  int k = 0, n = 0;
  std::string method = "formula";
  bool as_json = false;
  long budget_p = 12;
  int budget_jack = 6;
};

void run_degree(const DegreeOptions& opt) {
  const int k = opt.k, n = opt.n;
  if (k < 1 || k > n - 1) throw UsageError("degree: need 1 <= k <= n-1");
  const int k_reduced = std::min(k, n - k);

  std::optional<Int> formula, closed, oracle;
  json methods = json::object();
  std::vector<std::string> skipped;

  auto want = [&](const char* name) { return opt.method == name || opt.method == "all"; };

  grassdeg::DegreeReport report;
  if (want("formula")) {
    if (k_reduced > opt.budget_jack)
      throw UsageError("degree: k exceeds the Jack budget (" + std::to_string(opt.budget_jack) +
                       "); raise --jack-budget");
    report = grassdeg::degree(k, n);
    formula = report.degree;
    methods["formula"] = grassdeg::to_string(*formula);
  }
  if (want("closed-form")) {
    if (k_reduced <= 4) {
      closed = grassdeg::closed_form_degree(k_reduced, n);
      methods["closed_form"] = grassdeg::to_string(*closed);
    } else if (opt.method == "closed-form") {
      throw UsageError("degree: closed form only available for k <= 4 (after duality)");
    } else {
      skipped.push_back("closed_form");
    }
  }
  if (want("oracle")) {
    const long p = static_cast<long>(k_reduced) * (n - k_reduced);
    if (p <= opt.budget_p) {
      oracle = grassdeg::degree_by_differences(k_reduced, n,
                                               grassdeg::DifferenceOptions{opt.budget_p, 32});
      methods["oracle"] = grassdeg::to_string(*oracle);
    } else if (opt.method == "oracle") {
      throw UsageError("degree: p = k(n-k) = " + std::to_string(p) + " exceeds --budget " +
                       std::to_string(opt.budget_p));
    } else {
      skipped.push_back("oracle");
    }
  }

  // cross-check: all computed routes must agree
  std::optional<Int> value;
  for (const auto& v : {formula, closed, oracle}) {
    if (!v) continue;
    if (!value) value = v;
    if (*v != *value)
      throw DisagreementError("method disagreement: " + methods.dump());
  }
  if (!value) throw UsageError("degree: no method produced a value");

  json results;
  results["degree"] = grassdeg::to_string(*value);
  results["methods"] = methods;
  if (!skipped.empty()) results["methods_skipped"] = skipped;
  if (formula) results["report"] = report_to_json(report);
  Int plucker = grassdeg::plucker_degree(k, n);
  results["plucker_degree"] = grassdeg::to_string(plucker);
  results["degree_ratio"] = grassdeg::to_string(grassdeg::make_rational(*value, plucker));
  results["ratio_note"] =
      "exact ratio degree/plucker_degree as computed; for k=1,2 it equals 2^(n-1) and 2(n-1), "
      "the reciprocals of the published comparison";

  if (opt.as_json) {
    emit(make_envelope("degree",
                       json{{"k", k}, {"n", n}, {"method", opt.method}}, results));
    return;
  }
  std::cout << "degree of Gr(" << k << ", R^" << n << ") = " << grassdeg::to_string(*value)
            << "\n";
  if (k != k_reduced) std::cout << "reduced to k = " << k_reduced << " by duality\n";
  for (auto it = methods.begin(); it != methods.end(); ++it)
    std::cout << "  " << it.key() << ": " << it.value().get<std::string>() << "\n";
  if (methods.size() > 1) std::cout << "  all computed methods agree\n";
  if (formula) {
    std::cout << "alpha = " << grassdeg::to_string(report.alpha_kn) << "\n";
    std::cout << "terms (lambda, A, B, C):\n";
    for (const auto& t : report.terms) {
      std::cout << "  " << lambda_to_json(t.lambda, k_reduced).dump() << "  A = " << pi_str(t.a)
                << "  B = " << pi_str(t.b) << "  C = " << grassdeg::to_string(t.c) << "\n";
    }
  }
  std::cout << "plucker degree = " << grassdeg::to_string(plucker)
            << ", ratio = " << results["degree_ratio"].get<std::string>() << "\n";
  std::cout << "note: " << results["ratio_note"].get<std::string>() << "\n";
}

// ----- table -------------------------------------------------------------

struct TableOptions {
  int kmax = 0, nmax = 0;
  std::string format = "csv";
  long budget_p = 12;
  int budget_jack = 6;
};

void run_table(const TableOptions& opt) {
  if (opt.kmax < 1 || opt.nmax < 2) throw UsageError("table: need kmax >= 1 and nmax >= 2");
  if (opt.kmax > opt.budget_jack)
    throw UsageError("table: kmax exceeds the Jack budget (" + std::to_string(opt.budget_jack) +
                     "); raise --jack-budget");
  json rows = json::array();
  for (int k = 1; k <= opt.kmax; ++k) {
    for (int n = 2 * k; n <= opt.nmax; ++n) {
      Int d = grassdeg::degree(k, n).degree;
      Int pl = grassdeg::plucker_degree(k, n);
      rows.push_back(json{{"k", k},
                          {"n", n},
                          {"degree", grassdeg::to_string(d)},
                          {"plucker_degree", grassdeg::to_string(pl)},
                          {"ratio", grassdeg::to_string(grassdeg::make_rational(d, pl))}});
    }
  }
  if (opt.format == "csv") {
    std::cout << "k,n,degree,plucker_degree,ratio\n";
    for (const auto& r : rows)
      std::cout << r["k"].get<int>() << "," << r["n"].get<int>() << ","
                << r["degree"].get<std::string>() << "," << r["plucker_degree"].get<std::string>()
                << "," << r["ratio"].get<std::string>() << "\n";
    return;
  }
  if (opt.format != "json") throw UsageError("table: format must be csv or json");
  emit(make_envelope("table", json{{"kmax", opt.kmax}, {"nmax", opt.nmax}, {"format", opt.format}},
                     json{{"rows", std::move(rows)}}));
}

// ----- selberg -----------------------------------------------------------

struct SelbergOptions {
  int m = 0, p = 0, d = 0;
  long mc_samples = 0;
  std::uint64_t seed = kDefaultSeed;
  bool as_json = false;
};

void run_selberg(const SelbergOptions& opt) {
  if (opt.m < 1 || opt.p < 1 || opt.d < 1) throw UsageError("selberg: need m, p, d >= 1");
  Rational exact = grassdeg::selberg_rhs(opt.m, opt.p, opt.d);
  json results{{"exact", grassdeg::to_string(exact)}};
  std::optional<std::uint64_t> seed;
  if (opt.mc_samples > 0) {
    auto mc = grassdeg::selberg_monte_carlo(opt.m, opt.p, opt.d, opt.mc_samples, opt.seed);
    results["mc"] = json{{"estimate", mc.estimate},
                         {"std_error", mc.std_error},
                         {"samples", mc.samples},
                         {"accepted", mc.accepted}};
    seed = mc.seed;
  }
  if (opt.as_json) {
    emit(make_envelope("selberg", json{{"m", opt.m}, {"p", opt.p}, {"d", opt.d}}, results, seed));
    return;
  }
  std::cout << "selberg rhs(m=" << opt.m << ", p=" << opt.p << ", d=" << opt.d
            << ") = " << grassdeg::to_string(exact) << " = " << exact.get_d() << "\n";
  if (opt.mc_samples > 0) {
    const auto& mc = results["mc"];
    std::cout << "monte carlo: " << mc["estimate"].get<double>() << " +/- "
              << mc["std_error"].get<double>() << " (" << mc["samples"].get<long>()
              << " samples, seed " << *seed << ")\n";
  }
}

// ----- closure -----------------------------------------------------------

void run_closure_check(const std::string& matrix_arg, const std::string& t_arg, int k,
                       bool as_json) {
  GRMatrix x = parse_matrix_argument(matrix_arg);
  GaussianRational t = GaussianRational::parse(t_arg);
  bool member = grassdeg::projective_member(grassdeg::ProjPoint{x, t}, k);
  json results{{"member", member}};
  if (t == GaussianRational(Rational(1)))
    results["affine_member"] = grassdeg::affine_member(x, k);
  if (as_json) {
    emit(make_envelope("closure.check",
                       json{{"k", k}, {"t", t.str()}, {"matrix", matrix_to_json(x)}}, results));
    return;
  }
  std::cout << "[X : " << t.str() << "] is " << (member ? "a member" : "not a member")
            << " of the projective closure for k = " << k << "\n";
  if (results.contains("affine_member"))
    std::cout << "affine member: " << (results["affine_member"].get<bool>() ? "yes" : "no")
              << "\n";
}

void run_closure_boundary(int n, int d, bool as_json) {
  GRMatrix x = grassdeg::boundary_generator(n, d);
  json results{{"matrix", matrix_to_json(x)},
               {"rank", grassdeg::rank_exact(x)},
               {"square_is_zero", (x * x).is_zero()},
               {"trace_is_zero", x.trace().is_zero()}};
  if (as_json) {
    emit(make_envelope("closure.boundary", json{{"n", n}, {"d", d}}, results));
    return;
  }
  std::cout << "boundary generator X_" << d << " in Sym^2(C^" << n << "), rank "
            << results["rank"].get<int>() << ":\n";
  for (int i = 0; i < x.rows(); ++i) {
    std::cout << "  [";
    for (int j = 0; j < x.cols(); ++j) std::cout << (j ? ", " : "") << x.at(i, j).str();
    std::cout << "]\n";
  }
}

void run_closure_orbit_dim(int n, int d, bool as_json) {
  int computed = grassdeg::orbit_dimension(n, d);
  int expected = d * (n - d);
  json results{{"orbit_dimension", computed}, {"expected", expected}};
  if (computed != expected)
    throw DisagreementError("orbit dimension " + std::to_string(computed) +
                            " differs from d(n-d) = " + std::to_string(expected));
  if (as_json) {
    emit(make_envelope("closure.orbit-dim", json{{"n", n}, {"d", d}}, results));
    return;
  }
  std::cout << "dim Z_" << d << " = " << computed << " (= d(n-d))\n";
}

void run_closure_epsilon(int n, int k, int d, const std::string& eps_arg, bool as_json) {
  Rational eps = grassdeg::rational_from_string(eps_arg);
  auto check = grassdeg::epsilon_family_check(n, k, d, eps);
  json results{{"ok", check.ok}};
  if (!check.ok) results["failed_identity"] = check.failed_identity;
  if (as_json)
    emit(make_envelope("closure.epsilon",
                       json{{"n", n}, {"k", k}, {"d", d}, {"eps", grassdeg::to_string(eps)}},
                       results));
  else if (check.ok)
    std::cout << "all identities hold\n";
  else
    std::cout << "failed identity: " << check.failed_identity << "\n";
  if (!check.ok) throw DisagreementError("epsilon identity failed: " + check.failed_identity);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact degrees and projective closure of real Grassmannians in matrix models"};
  app.require_subcommand(1);

  DegreeOptions deg;
  auto* cmd_degree = app.add_subcommand("degree", "degree of Gr(k, R^n) in Sym^2");
  cmd_degree->add_option("k", deg.k, "number of planes k")->required();
  cmd_degree->add_option("n", deg.n, "ambient dimension n")->required();
  cmd_degree->add_option("--method", deg.method, "formula | closed-form | oracle | all")
      ->check(CLI::IsMember({"formula", "closed-form", "oracle", "all"}))
      ->capture_default_str();
  cmd_degree->add_flag("--json", deg.as_json, "emit the JSON envelope");
  cmd_degree->add_option("--budget", deg.budget_p, "cap on p = k(n-k) for the oracle")
      ->capture_default_str();
  cmd_degree->add_option("--jack-budget", deg.budget_jack, "cap on k for the Jack route")
      ->capture_default_str();

  TableOptions tab;
  auto* cmd_table = app.add_subcommand("table", "degree table over a (k, n) grid");
  cmd_table->add_option("kmax", tab.kmax)->required();
  cmd_table->add_option("nmax", tab.nmax)->required();
  cmd_table->add_option("--format", tab.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd_table->add_option("--budget", tab.budget_p)->capture_default_str();
  cmd_table->add_option("--jack-budget", tab.budget_jack)->capture_default_str();

  SelbergOptions sel;
  auto* cmd_selberg =
      app.add_subcommand("selberg", "exact ordered-simplex integral and Monte-Carlo check");
  cmd_selberg->add_option("m", sel.m)->required();
  cmd_selberg->add_option("p", sel.p)->required();
  cmd_selberg->add_option("d", sel.d)->required();
  cmd_selberg->add_option("--mc", sel.mc_samples, "Monte-Carlo sample count");
  cmd_selberg->add_option("--seed", sel.seed, "PRNG seed")->capture_default_str();
  cmd_selberg->add_flag("--json", sel.as_json, "emit the JSON envelope");

  auto* cmd_closure = app.add_subcommand("closure", "projective closure toolkit");
  cmd_closure->require_subcommand(1);

  std::string chk_matrix, chk_t = "1";
  int chk_k = 0;
  bool chk_json = false;
  auto* cmd_check = cmd_closure->add_subcommand("check", "membership of [X : t]");
  cmd_check->add_option("--matrix", chk_matrix,
                        "JSON array-of-arrays of entries, diag(...), or @file")
      ->required();
  cmd_check->add_option("--k", chk_k)->required();
  cmd_check->add_option("--t", chk_t, "homogenizing coordinate")->capture_default_str();
  cmd_check->add_flag("--json", chk_json);

  int bnd_n = 0, bnd_d = 0;
  bool bnd_json = false;
  auto* cmd_boundary = cmd_closure->add_subcommand("boundary", "rank-d boundary base point");
  cmd_boundary->add_option("--n", bnd_n)->required();
  cmd_boundary->add_option("--d", bnd_d)->required();
  cmd_boundary->add_flag("--json", bnd_json);

  int orb_n = 0, orb_d = 0;
  bool orb_json = false;
  auto* cmd_orbit = cmd_closure->add_subcommand("orbit-dim", "dimension of the stratum Z_d");
  cmd_orbit->add_option("--n", orb_n)->required();
  cmd_orbit->add_option("--d", orb_d)->required();
  cmd_orbit->add_flag("--json", orb_json);

  int eps_n = 0, eps_k = 0, eps_d = 0;
  std::string eps_val = "1";
  bool eps_json = false;
  auto* cmd_eps = cmd_closure->add_subcommand("epsilon", "degeneration identity checks");
  cmd_eps->add_option("--n", eps_n)->required();
  cmd_eps->add_option("--k", eps_k)->required();
  cmd_eps->add_option("--d", eps_d)->required();
  cmd_eps->add_option("--eps", eps_val, "positive rational")->capture_default_str();
  cmd_eps->add_flag("--json", eps_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cmd_degree->parsed()) run_degree(deg);
    if (cmd_table->parsed()) run_table(tab);
    if (cmd_selberg->parsed()) run_selberg(sel);
    if (cmd_check->parsed()) run_closure_check(chk_matrix, chk_t, chk_k, chk_json);
    if (cmd_boundary->parsed()) run_closure_boundary(bnd_n, bnd_d, bnd_json);
    if (cmd_orbit->parsed()) run_closure_orbit_dim(orb_n, orb_d, orb_json);
    if (cmd_eps->parsed()) run_closure_epsilon(eps_n, eps_k, eps_d, eps_val, eps_json);
  } catch (const DisagreementError& e) {
    std::cout << make_envelope("error", json::object(), json{{"error", e.what()}}).dump(2)
              << "\n";
    std::cerr << "cross-check disagreement: " << e.what() << "\n";
    return kExitDisagreement;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
