#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <optional>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "orthocorr/correlation.hpp"
#include "orthocorr/difference_equation.hpp"
#include "orthocorr/output.hpp"
#include "orthocorr/quadrature.hpp"
#include "orthocorr/verification.hpp"

namespace orthocorr::cli {

namespace {

// Raised for anything the user got wrong on the command line.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr double kEps = std::numeric_limits<double>::epsilon();

double parse_real(const std::string& text, const std::string& flag) {
  static const std::regex number(R"([+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)");
  if (!std::regex_match(text, number)) {
    throw UsageError(flag + ": expected a decimal number, got '" + text + "'");
  }
  // from_chars rejects a leading '+'.
  const char* first = text.data() + (text.front() == '+' ? 1 : 0);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw UsageError(flag + ": '" + text + "' is out of range");
  }
  return value;
}

int parse_count(const std::string& text, const std::string& flag, int min_value) {
  static const std::regex integer(R"(\+?\d+)");
  if (!std::regex_match(text, integer)) {
    throw UsageError(flag + ": expected a non-negative integer, got '" + text + "'");
  }
  const char* first = text.data() + (text.front() == '+' ? 1 : 0);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError(flag + ": '" + text + "' is out of range");
  }
  if (value < min_value) {
    throw UsageError(flag + ": must be at least " + std::to_string(min_value));
  }
  return value;
}

std::optional<double> optional_real(const std::string& text, const std::string& flag) {
  if (text.empty()) return std::nullopt;
  return parse_real(text, flag);
}

const std::vector<std::string> kMethods = {"closed", "oracle", "recurrence", "coeffs"};

// Flags shared by eval and table, kept as text until validated.
struct CommonArgs {
  std::string family;
  std::string alpha;
  std::string beta;
  std::string m;
  std::string n;
  std::string method = "closed";
  std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--family", a.family, "legendre|chebyshev-t|chebyshev-u|gegenbauer|jacobi|laguerre|hermite")
      ->required();
  cmd->add_option("--alpha", a.alpha, "alpha (gegenbauer, jacobi, laguerre)");
  cmd->add_option("--beta", a.beta, "beta (jacobi)");
  cmd->add_option("--m", a.m, "degree shift m >= 0")->required();
  cmd->add_option("--n", a.n, "degree n >= 0")->required();
  cmd->add_option("--method", a.method, "closed|oracle|recurrence|coeffs");
  cmd->add_option("--format", a.format, "csv|json");
}

struct Resolved {
  Family family;
  int m;
  int n;
  std::string method;
  bool json;
};

Resolved resolve(const CommonArgs& a) {
  const auto kind = parse_family_kind(a.family);
  if (!kind) throw UsageError("--family: unknown family '" + a.family + "'");
  const auto alpha = optional_real(a.alpha, "--alpha");
  const auto beta = optional_real(a.beta, "--beta");
  const bool wants_alpha = *kind == FamilyKind::gegenbauer || *kind == FamilyKind::jacobi ||
                           *kind == FamilyKind::laguerre;
  if (wants_alpha && !alpha) throw UsageError("--alpha is required for " + a.family);
  if (!wants_alpha && alpha) throw UsageError("--alpha is not a parameter of " + a.family);
  if (*kind == FamilyKind::jacobi && !beta) throw UsageError("--beta is required for jacobi");
  if (*kind != FamilyKind::jacobi && beta) throw UsageError("--beta is not a parameter of " + a.family);
  if (std::find(kMethods.begin(), kMethods.end(), a.method) == kMethods.end()) {
    throw UsageError("--method: unknown method '" + a.method + "'");
  }
  if (a.format != "csv" && a.format != "json") {
    throw UsageError("--format: expected csv or json, got '" + a.format + "'");
  }
  Family family = Family::legendre();
  try {
    family = Family::make(*kind, alpha, beta);
  } catch (const ParameterDomainError& e) {
    throw UsageError(std::string(wants_alpha ? "--alpha/--beta: " : "") + e.what());
  }
  const int m = parse_count(a.m, "--m", 0);
  const int n = parse_count(a.n, "--n", 0);
  if (m + n > kMaxDegree) {
    throw UsageError("--m/--n: n + m must not exceed " + std::to_string(kMaxDegree));
  }
  return {family, m, n, a.method, a.format == "json"};
}

double series_bound(const CoeffVector& c, double y) {
  double magnitude = 0.0, p = 1.0;
  for (double cj : c.coeffs) {
    magnitude += std::fabs(cj) * p;
    p *= std::fabs(y);
  }
  return (2.0 * (c.coeffs.size() + 2) * kEps + 1e-13) * magnitude;
}

// The oracle is evaluated in 113-bit arithmetic and rounded once.
double oracle_bound(double value) { return kEps * std::fabs(value); }

OutputRecord evaluate(const Resolved& r, double y) {
  const Family& f = r.family;
  if (r.method == "closed") {
    const CorrResult res = corr({f, r.m, r.n, y});
    return make_record(f, r.m, r.n, y, res.value, r.method, res.est_error);
  }
  if (r.method == "oracle") {
    const double v = corr_oracle(f, r.m, r.n, y);
    return make_record(f, r.m, r.n, y, v, r.method, oracle_bound(v));
  }
  if (r.method == "coeffs") {
    const CoeffVector c = coefficient_vector(f, r.m, r.n);
    return make_record(f, r.m, r.n, y, c(y), r.method, series_bound(c, y));
  }
  // recurrence: oracle seeds, then the difference equation.
  CorrTable seeds{f, y, {}};
  for (const auto& [sm, sn] : required_seeds(r.m, r.n)) {
    const double v = corr_oracle(f, sm, sn, y);
    seeds.set_seed(sm, sn, v, oracle_bound(v));
  }
  const CorrTable table = propagate_table(f, y, r.m, r.n, seeds);
  const auto it = table.values.find({r.m, r.n});
  if (it == table.values.end()) throw InternalConsistencyError("recurrence: entry not reached");
  return make_record(f, r.m, r.n, y, it->second.value, r.method, it->second.est_error);
}

int cmd_eval(const CommonArgs& a, const std::string& y_text, std::ostream& out) {
  const Resolved r = resolve(a);
  const double y = parse_real(y_text, "--y");
  const std::vector<OutputRecord> records = {evaluate(r, y)};
  out << (r.json ? to_json(records) : to_csv(records));
  return kExitOk;
}

struct TableArgs {
  std::string y_min, y_max, y_steps;
  bool coeffs = false;
};

int cmd_table(const CommonArgs& a, const TableArgs& t, std::ostream& out) {
  const Resolved r = resolve(a);
  if (t.coeffs) {
    CoefficientRow row;
    row.family = std::string(to_string(r.family.kind()));
    if (r.family.has_alpha()) row.alpha = r.family.alpha();
    if (r.family.has_beta()) row.beta = r.family.beta();
    row.m = r.m;
    row.n = r.n;
    row.method = r.method;
    if (r.method == "oracle") {
      row.coeffs = oracle_coefficients(r.family, r.m, r.n).coeffs;
    } else if (r.method == "closed" || r.method == "coeffs") {
      row.coeffs = coefficient_vector(r.family, r.m, r.n).coeffs;
    } else {
      throw UsageError("--method: recurrence does not produce coefficients");
    }
    out << (r.json ? to_json(row) : to_csv(row));
    return kExitOk;
  }
  if (t.y_min.empty() || t.y_max.empty() || t.y_steps.empty()) {
    throw UsageError("--y-min, --y-max and --y-steps are required without --coeffs");
  }
  const double lo = parse_real(t.y_min, "--y-min");
  const double hi = parse_real(t.y_max, "--y-max");
  const int steps = parse_count(t.y_steps, "--y-steps", 2);
  if (hi < lo) throw UsageError("--y-max must not be below --y-min");
  std::vector<OutputRecord> records;
  for (int i = 0; i < steps; ++i) {
    const double y = i == steps - 1 ? hi : lo + (hi - lo) * i / (steps - 1);
    records.push_back(evaluate(r, y));
  }
  out << (r.json ? to_json(records) : to_csv(records));
  return kExitOk;
}

struct VerifyArgs {
  std::string family;
  std::string tol;
  std::string seed;
  std::string suites;
};

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

int cmd_verify(const VerifyArgs& v, std::ostream& out) {
  VerifyOptions options;
  if (!v.family.empty()) {
    options.family = parse_family_kind(v.family);
    if (!options.family) throw UsageError("--family: unknown family '" + v.family + "'");
  }
  if (!v.tol.empty()) {
    options.tolerance = parse_real(v.tol, "--tol");
    if (!(*options.tolerance > 0)) throw UsageError("--tol: must be positive");
  }
  if (!v.seed.empty()) {
    static const std::regex digits(R"(\d+)");
    if (!std::regex_match(v.seed, digits)) throw UsageError("--seed: expected a non-negative integer");
    try {
      options.seed = std::stoull(v.seed);
    } catch (const std::out_of_range&) {
      throw UsageError("--seed: out of range");
    }
  }
  std::vector<std::string> names = v.suites.empty() ? suite_names() : split_commas(v.suites);
  for (const auto& name : names) {
    const auto& known = suite_names();
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw UsageError("--suites: unknown suite '" + name + "'");
    }
  }
  std::vector<std::string> failing;
  for (const auto& name : names) {
    const SuiteReport report = run_suite(name, options);
    out << format_report(report) << std::flush;
    if (!report.passed()) failing.push_back(name);
  }
  if (failing.empty()) {
    out << "verify: PASS (" << names.size() << " suites)\n";
    return kExitOk;
  }
  out << "verify: FAIL (failing suites:";
  for (const auto& name : failing) out << ' ' << name;
  out << ")\n";
  return kExitEvaluation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Correlation functions of classical orthogonal polynomials", "orthocorr"};
  app.require_subcommand(1);

  CommonArgs eval_args;
  std::string y_text;
  CLI::App* eval = app.add_subcommand("eval", "evaluate R_{m,n}(y) once");
  add_common(eval, eval_args);
  eval->add_option("--y", y_text, "shift y")->required();

  CommonArgs table_args;
  TableArgs table_range;
  CLI::App* table = app.add_subcommand("table", "tabulate R_{m,n} over a y grid");
  add_common(table, table_args);
  table->add_option("--y-min", table_range.y_min, "first y");
  table->add_option("--y-max", table_range.y_max, "last y");
  table->add_option("--y-steps", table_range.y_steps, "number of y values (>= 2)");
  table->add_flag("--coeffs", table_range.coeffs, "emit the coefficient vector instead");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--family", verify_args.family, "restrict to one family");
  verify->add_option("--tol", verify_args.tol, "override every suite tolerance");
  verify->add_option("--seed", verify_args.seed, "seed of the randomised draws");
  verify->add_option("--suites", verify_args.suites, "comma-separated subset of suites");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*eval) return cmd_eval(eval_args, y_text, out);
    if (*table) return cmd_table(table_args, table_range, out);
    return cmd_verify(verify_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "evaluation error: " << e.what() << "\n";
    return kExitEvaluation;
  }
}

}  // namespace orthocorr::cli
