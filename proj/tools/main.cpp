// Copyright (c) 2026 The zetabe authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: evaluate any library function, dump the dichotomy
// figure curves as CSV, or run the verification suites with a pass/fail exit
// code.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zetabe/beta_exponential.hpp"
#include "zetabe/special_functions.hpp"
#include "zetabe/verification.hpp"
#include "zetabe/zeta_monotonicity.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadArguments = 2;
constexpr int kExitNumericalFailure = 3;
constexpr int kExitUnwritablePath = 4;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_coord(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

class arg_map {
 public:
  explicit arg_map(const std::vector<std::string>& kv_pairs) {
    for (const auto& kv : kv_pairs) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos || eq == 0)
        throw zetabe::domain_error("expected key=value, got '" + kv + "'");
      const std::string key = kv.substr(0, eq);
      const std::string val = kv.substr(eq + 1);
      std::size_t used = 0;
      double parsed = 0.0;
      try {
        parsed = std::stod(val, &used);
      } catch (const std::exception&) {
        throw zetabe::domain_error("argument '" + key + "' is not a number");
      }
      if (used != val.size())
        throw zetabe::domain_error("argument '" + key + "' is not a number");
      values_[key] = parsed;
    }
  }

  double get(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end())
      throw zetabe::domain_error("missing argument '" + key + "='");
    return it->second;
  }

  int get_int(const std::string& key) const {
    const double v = get(key);
    const int n = static_cast<int>(v);
    if (static_cast<double>(n) != v)
      throw zetabe::domain_error("argument '" + key + "' must be an integer");
    return n;
  }

 private:
  std::map<std::string, double> values_;
};

int run_eval(const std::string& function, const std::vector<std::string>& kv,
             double rel_tol) {
  zetabe::eval_config cfg;
  cfg.rel_tol = rel_tol;
  double value = 0.0;
  try {
    const arg_map args(kv);
    if (function == "zeta") {
      value = zetabe::hurwitz_zeta(args.get("x"), args.get("s"), cfg).value;
    } else if (function == "zeta-diff") {
      value = zetabe::hurwitz_zeta_diff(args.get("x"), args.get("a"),
                                        args.get("b"), cfg).value;
    } else if (function == "digamma") {
      value = zetabe::digamma(args.get("s"));
    } else if (function == "polygamma") {
      value = zetabe::polygamma(args.get_int("m"), args.get("s"), cfg);
    } else if (function == "f") {
      value = zetabe::f({args.get("x"), args.get("a"), args.get("b")}, cfg);
    } else if (function == "cumulant") {
      value = zetabe::cumulant(args.get_int("n"),
                               zetabe::be_params(args.get("a"), args.get("b")));
    } else if (function == "f-be") {
      value = zetabe::f_be(args.get_int("n"),
                           zetabe::be_params(args.get("a"), args.get("b")));
    } else if (function == "pdf") {
      value = zetabe::pdf(args.get("x"),
                          zetabe::be_params(args.get("a"), args.get("b")));
    } else if (function == "cdf") {
      value = zetabe::cdf(args.get("x"),
                          zetabe::be_params(args.get("a"), args.get("b")));
    } else if (function == "hazard") {
      value = zetabe::hazard(args.get("x"),
                             zetabe::be_params(args.get("a"), args.get("b")));
    } else if (function == "cgf") {
      value = zetabe::cgf(args.get("t"),
                          zetabe::be_params(args.get("a"), args.get("b")));
    } else {
      std::cerr << "unknown function '" << function << "'\n";
      return kExitBadArguments;
    }
  } catch (const zetabe::convergence_error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumericalFailure;
  } catch (const zetabe::overflow_error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumericalFailure;
  } catch (const std::exception& e) {
    std::cerr << "bad arguments: " << e.what() << '\n';
    return kExitBadArguments;
  }
  std::cout << format_double(value) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// figure
// ---------------------------------------------------------------------------

struct range_spec {
  double lo = 0.0;
  double hi = 0.0;
  double step = 0.0;
};

std::optional<range_spec> parse_range(const std::string& text) {
  range_spec r;
  const auto c1 = text.find(':');
  const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) return std::nullopt;
  try {
    r.lo = std::stod(text.substr(0, c1));
    r.hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    r.step = std::stod(text.substr(c2 + 1));
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return r;
}

std::vector<double> expand_range(const range_spec& r) {
  std::vector<double> grid;
  for (std::int64_t i = 0;; ++i) {
    const double v = r.lo + static_cast<double>(i) * r.step;
    if (v > r.hi + 1e-9 * r.step) break;
    grid.push_back(v);
  }
  return grid;
}

int run_figure(const std::string& panel, std::vector<double> a_values,
               std::vector<int> n_values, const std::string& range_text,
               const std::string& out_path) {
  range_spec range;
  if (panel == "left") {
    range = {0.5, 10.0, 0.05};
  } else if (panel == "right") {
    range = {0.05, 6.0, 0.05};
  } else {
    std::cerr << "panel must be 'left' or 'right'\n";
    return kExitBadArguments;
  }
  if (!range_text.empty()) {
    const auto parsed = parse_range(range_text);
    if (!parsed) {
      std::cerr << "range must be lo:hi:step\n";
      return kExitBadArguments;
    }
    range = *parsed;
  }
  if (!(range.step > 0.0) || !(range.lo <= range.hi)) {
    std::cerr << "invalid range: need lo <= hi and step > 0\n";
    return kExitBadArguments;
  }
  if (panel == "left" && !(range.lo > 0.0)) {
    std::cerr << "invalid range: f_BE diverges as b -> 0, need lo > 0\n";
    return kExitBadArguments;
  }
  if (a_values.empty()) a_values = {0.1, 1.0, 10.0};
  if (n_values.empty()) n_values = {1, 2, 3};
  for (double a : a_values)
    if (!(a > 0.0)) {
      std::cerr << "a values must be positive\n";
      return kExitBadArguments;
    }
  for (int n : n_values)
    if (n < 1 || n > 64) {
      std::cerr << "n values must be in [1, 64]\n";
      return kExitBadArguments;
    }
  std::sort(a_values.begin(), a_values.end());
  std::sort(n_values.begin(), n_values.end());
  const std::vector<double> grid = expand_range(range);

  std::string csv;
  try {
    if (panel == "left") {
      csv = "a,n,b,value\n";
      for (double a : a_values)
        for (int n : n_values)
          for (double b : grid)
            csv += format_coord(a) + "," + std::to_string(n) + "," +
                   format_coord(b) + "," +
                   format_double(zetabe::f_be(n, zetabe::be_params(a, b))) + "\n";
    } else {
      csv = "a,x,density\n";
      for (double a : a_values)
        for (double x : grid)
          csv += format_coord(a) + "," + format_coord(x) + "," +
                 format_double(zetabe::pdf(x, zetabe::be_params(a, 1.0))) + "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumericalFailure;
  }

  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) {
    std::cerr << "cannot open '" << out_path << "' for writing\n";
    return kExitUnwritablePath;
  }
  out << csv;
  out.flush();
  if (!out) {
    std::cerr << "write to '" << out_path << "' failed\n";
    return kExitUnwritablePath;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

using zetabe::verify::check_record;

check_record report_to_record(const char* check, double a, double b,
                              const zetabe::verify::monotonicity_report& rep) {
  check_record rec;
  rec.check = check;
  char buf[64];
  std::snprintf(buf, sizeof buf, "a=%g b=%g", a, b);
  rec.params = buf;
  rec.pass = rep.pass;
  rec.margin = rep.min_margin;
  rec.detail = rep.detail;
  return rec;
}

void run_theorem1_suite(std::vector<check_record>& records) {
  const auto x_grid = zetabe::verify::standard_grid::x_grid();
  for (double a : zetabe::verify::standard_grid::a_values())
    for (double b : zetabe::verify::standard_grid::b_values())
      records.push_back(report_to_record(
          "theorem1.f_monotonicity", a, b,
          zetabe::verify::scan_f_monotonicity(
              a, b, x_grid, zetabe::verify::standard_grid::monotonicity_margin)));
}

void run_chains_suite(std::vector<check_record>& records) {
  for (double a : zetabe::verify::standard_grid::a_values())
    for (double b : zetabe::verify::standard_grid::b_values())
      records.push_back(report_to_record("chains.polygamma_chain", a, b,
                                         zetabe::verify::check_chain(a, b, 10)));
}

void run_lemma_suite(std::vector<check_record>& records, std::uint64_t seed) {
  for (auto& rec : zetabe::verify::check_lemma_cases(100, 50, seed))
    records.push_back(std::move(rec));
}


void run_distribution_suite(std::vector<check_record>& records,
                            std::uint64_t seed) {
  namespace vf = zetabe::verify;
  std::vector<double> shape_grid;
  for (int i = 1; i <= 200; ++i) shape_grid.push_back(0.05 * i);

  for (double a : vf::standard_grid::a_values()) {
    for (double b : vf::standard_grid::b_values()) {
      const zetabe::be_params p(a, b);
      records.push_back(vf::check_normalization(p));
      records.push_back(vf::check_cdf_pdf_consistency(p));
      records.push_back(vf::check_cgf_cumulants(p));
      records.push_back(vf::check_dispersion(p));
      records.push_back(vf::check_shape_and_hazard(p, shape_grid, 1e-3));
      records.push_back(vf::check_fbe_cross_identity(p));
      records.push_back(vf::check_fbe_monotone_in_n(p));
    }
  }

  // Monte Carlo moments and the exponential KS check.
  records.push_back(vf::check_moments(zetabe::be_params(0.5, 1.0), 1'000'000, seed));
  records.push_back(vf::check_moments(zetabe::be_params(1.0, 2.0), 1'000'000, seed + 1));
  records.push_back(vf::check_moments(zetabe::be_params(2.0, 3.0), 1'000'000, seed + 2));
  records.push_back(vf::check_ks_exponential(2.0, 1'000'000, seed + 3));
}

int run_verify(const std::string& suite, std::uint64_t seed,
               const std::string& out_path) {
  std::vector<check_record> records;
  try {
    if (suite == "theorem1" || suite == "all") run_theorem1_suite(records);
    if (suite == "chains" || suite == "all") run_chains_suite(records);
    if (suite == "lemma" || suite == "all") run_lemma_suite(records, seed);
    if (suite == "distribution" || suite == "all")
      run_distribution_suite(records, seed);
  } catch (const std::exception& e) {
    std::cerr << "verification aborted: " << e.what() << '\n';
    return kExitNumericalFailure;
  }
  if (records.empty()) {
    std::cerr << "unknown suite '" << suite << "'\n";
    return kExitBadArguments;
  }

  nlohmann::json out = nlohmann::json::array();
  bool all_pass = true;
  for (const auto& rec : records) {
    all_pass = all_pass && rec.pass;
    out.push_back({{"check", rec.check},
                   {"params", rec.params},
                   {"pass", rec.pass},
                   {"margin", rec.margin},
                   {"detail", rec.detail}});
  }
  const std::string text = out.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      std::cerr << "cannot open '" << out_path << "' for writing\n";
      return kExitUnwritablePath;
    }
    file << text;
    file.flush();
    if (!file) {
      std::cerr << "write to '" << out_path << "' failed\n";
      return kExitUnwritablePath;
    }
  }
  return all_pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hurwitz zeta monotonicity and beta-exponential distribution toolkit"};
  app.require_subcommand(1);

  // eval
  std::string eval_function;
  std::vector<std::string> eval_args;
  double rel_tol = 1e-12;
  auto* eval_cmd = app.add_subcommand(
      "eval", "Evaluate a function; prints the value with 17 significant digits");
  eval_cmd->add_option("function", eval_function,
                       "One of: zeta zeta-diff digamma polygamma f cumulant "
                       "f-be pdf cdf hazard cgf")
      ->required();
  eval_cmd->add_option("args", eval_args, "Arguments as key=value (e.g. x=2 a=1 b=4)");
  eval_cmd->add_option("--rel-tol", rel_tol, "Relative tolerance for series evaluation")
      ->capture_default_str();

  // figure
  std::string panel = "left";
  std::vector<double> fig_a;
  std::vector<int> fig_n;
  std::string fig_range;
  std::string fig_out;
  auto* fig_cmd = app.add_subcommand(
      "figure", "Emit dichotomy curve data as CSV (left: b -> f_BE(n,a,b); "
                "right: density g(x;a,1))");
  fig_cmd->add_option("--panel", panel, "left or right")->capture_default_str();
  fig_cmd->add_option("--a", fig_a, "a values (default left: 0.1 1 10; right: 0.4 0.7 1 2 4)");
  fig_cmd->add_option("--n", fig_n, "cumulant orders, left panel only (default 1 2 3)");
  fig_cmd->add_option("--range", fig_range,
                      "Curve grid as lo:hi:step (default left b: 0.5:10:0.05, "
                      "right x: 0.05:6:0.05)");
  fig_cmd->add_option("--out", fig_out, "Output CSV path")->required();

  // verify
  std::string suite = "all";
  std::uint64_t seed = 20260811ULL;
  std::string verify_out;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Run verification suites; exit 0 iff every check passes");
  verify_cmd->add_option("--suite", suite,
                         "all, theorem1, chains, lemma, or distribution")
      ->capture_default_str();
  verify_cmd->add_option("--seed", seed, "Seed for randomized checks")
      ->capture_default_str();
  verify_cmd->add_option("--out", verify_out, "Write the JSON report here "
                         "(default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadArguments;
  }

  if (eval_cmd->parsed()) return run_eval(eval_function, eval_args, rel_tol);
  if (fig_cmd->parsed()) {
    if (panel == "right" && fig_a.empty()) fig_a = {0.4, 0.7, 1.0, 2.0, 4.0};
    return run_figure(panel, fig_a, fig_n, fig_range, fig_out);
  }
  if (verify_cmd->parsed()) {
    if (suite != "all" && suite != "theorem1" && suite != "chains" &&
        suite != "lemma" && suite != "distribution") {
      std::cerr << "unknown suite '" << suite << "'\n";
      return kExitBadArguments;
    }
    return run_verify(suite, seed, verify_out);
  }
  return kExitBadArguments;
}
