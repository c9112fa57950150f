// Command-line front end: compute, check, suite, falsify, examples.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "opmeans/entropy.hpp"
#include "opmeans/means.hpp"
#include "opmeans/report_json.hpp"

namespace opmeans {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitConfigError = 2;

// A file path, or an inline JSON object when the text starts with '{'.
json load_json_operand(const std::string& operand) {
  const auto first = operand.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && operand[first] == '{') {
    try {
      return json::parse(operand);
    } catch (const json::exception& e) {
      throw ParseError(std::string("invalid inline JSON: ") + e.what());
    }
  }
  std::ifstream in(operand);
  if (!in) throw ParseError("cannot open '" + operand + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in '" + operand + "': " + e.what());
  }
}

SymMatrix load_sym(const std::string& operand) { return sym_matrix_from_json(load_json_operand(operand)); }

GeneralMatrix load_general(const std::string& operand) {
  return general_matrix_from_json(load_json_operand(operand));
}

std::vector<double> parse_t_grid(const std::string& text) {
  std::vector<double> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw ParameterError("--t-grid: '" + item + "' is not a number");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos || !std::isfinite(v)) {
      throw ParameterError("--t-grid: '" + item + "' is not a number");
    }
    grid.push_back(v);
  }
  if (grid.empty()) throw ParameterError("--t-grid must list at least one value");
  return grid;
}

// "n", "lo-hi", "lo:hi" or "lo,hi".
std::pair<int, int> parse_dims(const std::string& text) {
  const auto sep = text.find_first_of("-:,");
  try {
    std::size_t used = 0;
    if (sep == std::string::npos) {
      const int n = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {n, n};
    }
    const std::string lo_s = text.substr(0, sep);
    const std::string hi_s = text.substr(sep + 1);
    const int lo = std::stoi(lo_s, &used);
    if (used != lo_s.size()) throw std::invalid_argument(text);
    const int hi = std::stoi(hi_s, &used);
    if (used != hi_s.size()) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ParameterError("--dims: expected n or lo-hi, got '" + text + "'");
  }
}

std::uint64_t default_seed() {
  const char* env = std::getenv("OPMEANS_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const std::string s(env);
    const unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw ParameterError(std::string("OPMEANS_SEED is not an unsigned integer: ") + env);
  }
}

void emit(const json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ParameterError("cannot write '" + out_path + "'");
  out << text;
}

ClaimId require_claim(const std::string& name) {
  if (auto id = parse_claim(name)) return *id;
  throw ParameterError("unknown claim '" + name + "'");
}

struct Options {
  // shared
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::string t_grid;
  std::vector<std::string> norms;
  std::string dims;
  std::optional<double> cond_max;
  std::optional<int> trials;
  // compute
  std::string op;
  std::optional<double> t;
  // operands
  std::string a_path;
  std::string b_path;
  std::string c_path;
  std::string x_path;
  std::string claim;
};

std::vector<NormKind> parsed_norms(const Options& o) {
  std::vector<NormKind> out;
  for (const std::string& s : o.norms) out.push_back(NormKind::parse(s));
  return out;
}

int run_compute(const Options& o) {
  const SymMatrix a = load_sym(o.a_path);
  if (o.b_path.empty()) throw ParameterError("compute requires matrices A and B");
  const SymMatrix b = load_sym(o.b_path);
  if (a.dim() != b.dim()) throw DimensionError("A and B differ in dimension");

  const std::string& op = o.op;
  auto weight = [&](double fallback) { return o.t.value_or(fallback); };
  std::optional<double> t_used;
  SymMatrix result = SymMatrix::identity(1);
  if (op == "sharp") {
    t_used = weight(0.5);
    result = geometric_mean_t(a, b, *t_used);
  } else if (op == "natural") {
    t_used = weight(0.5);
    result = natural_t(a, b, *t_used);
  } else if (op == "arithmetic") {
    result = arithmetic_mean(a, b);
  } else if (op == "harmonic") {
    result = harmonic_mean(a, b);
  } else if (op == "heinz") {
    t_used = weight(0.5);
    result = heinz(a, b, *t_used);
  } else if (op == "m_hat") {
    result = m_hat(a, b);
  } else if (op == "tsallis") {
    t_used = weight(0.5);
    result = tsallis(a, b, *t_used);
  } else if (op == "quasi_tsallis") {
    t_used = weight(0.5);
    result = quasi_tsallis(a, b, *t_used);
  } else if (op == "s_hat") {
    result = quasi_relative_entropy(a, b);
  } else {
    throw ParameterError("unknown op '" + op + "'");
  }

  json j = to_json(result);
  j["op"] = op;
  j["t"] = t_used ? json(*t_used) : json(nullptr);
  j["dims"] = {result.dim(), result.dim()};
  emit(j, o.out);
  return kExitOk;
}

int run_check(const Options& o) {
  const ClaimId id = require_claim(o.claim);
  ClaimInputs in(load_sym(o.a_path), load_sym(o.b_path));
  if (!o.c_path.empty()) in.c = load_sym(o.c_path);
  if (!o.x_path.empty()) in.x = load_general(o.x_path);
  if (!o.t_grid.empty()) in.t_grid = parse_t_grid(o.t_grid);
  in.seed = o.seed.value_or(default_seed());
  in.norms = parsed_norms(o);
  for (const NormKind& k : in.norms) {
    if (k.type == NormKind::Type::kKyFan && k.k > in.a.dim()) {
      throw ParameterError("kyfan:k exceeds the matrix dimension");
    }
  }
  CheckOptions options;
  if (o.tol) options.rel_tol = *o.tol;
  const CheckReport r = check(id, in, options);
  emit(to_json(r), o.out);
  std::cerr << (r.passed ? "PASS " : "FAIL ") << info(id).name << "  margin " << r.margin_or_residual
            << "  (" << r.detail << ")\n";
  return r.passed ? kExitOk : kExitClaimFailure;
}

SuiteConfig suite_config(const Options& o) {
  SuiteConfig c;
  c.seed = o.seed.value_or(default_seed());
  if (o.trials) c.trials = *o.trials;
  if (o.tol) c.rel_tol = *o.tol;
  if (o.cond_max) c.cond_max = *o.cond_max;
  if (!o.dims.empty()) std::tie(c.dim_min, c.dim_max) = parse_dims(o.dims);
  if (!o.t_grid.empty()) c.t_grid = parse_t_grid(o.t_grid);
  c.norms = parsed_norms(o);
  c.validate();
  return c;
}

int run_suite_cmd(const Options& o) {
  const SuiteConfig config = suite_config(o);
  const SuiteReport report = run_suite(config);
  emit(to_json(report), o.out);

  std::ostream& log = std::cerr;
  int failed = 0;
  for (const ClaimAggregate& a : report.claims) {
    if (!a.passed) ++failed;
    log << (a.passed ? "PASS  " : "FAIL  ") << info(a.claim).name << "  trials " << a.trials
        << "  failures " << a.failures;
    if (a.worst_margin) log << "  worst " << *a.worst_margin << "  (" << a.worst_detail << ")";
    log << "\n";
  }
  int missing = 0;
  for (const FalsificationReport& f : report.falsifications) {
    if (!f.found) ++missing;
    log << (f.found ? "FOUND " : "NONE  ") << info(f.claim).name << "  trials " << f.trials_run
        << "  margin " << f.violation_margin << "\n";
  }
  for (const ExampleResult& e : report.examples) {
    log << (e.ok ? "OK    " : "DIFF  ") << e.name << "\n";
  }
  log << report.claims.size() - failed << "/" << report.claims.size() << " claims passed, "
      << report.falsifications.size() - missing << "/" << report.falsifications.size()
      << " counterexamples found, wall time " << report.wall_time_seconds << " s\n";
  return report.claims_passed() && report.falsifications_found() ? kExitOk : kExitClaimFailure;
}

int run_falsify_cmd(const Options& o) {
  const ClaimId id = require_claim(o.claim);
  SuiteConfig config = suite_config(o);
  config.falsify_trials = o.trials.value_or(1000);
  const FalsificationReport r = run_falsification(id, config);
  emit(to_json(r), o.out);
  std::cerr << (r.found ? "FOUND " : "NONE  ") << info(id).name << " after " << r.trials_run
            << " trials, margin " << r.violation_margin << "\n";
  return r.found ? kExitOk : kExitClaimFailure;
}

int run_examples_cmd(const Options& o) {
  const std::vector<ExampleResult> results = reproduce_reference_examples();
  json arr = json::array();
  bool all_ok = true;
  for (const ExampleResult& e : results) {
    arr.push_back(to_json(e));
    all_ok = all_ok && e.ok;
    std::cerr << (e.ok ? "OK    " : "DIFF  ") << e.name << "\n";
  }
  emit({{"examples", arr}}, o.out);
  return all_ok ? kExitOk : kExitClaimFailure;
}

}  // namespace
}  // namespace opmeans

int main(int argc, char** argv) {
  using namespace opmeans;
  CLI::App app{"Operator means, the natural operation and its entropies"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", o.out, "Output path (default: standard output)");
  };
  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", o.seed, "Master seed (default: $OPMEANS_SEED or 0)");
  };
  auto add_ensemble = [&](CLI::App* cmd) {
    add_seed(cmd);
    cmd->add_option("--trials", o.trials, "Number of seeded trials")->check(CLI::NonNegativeNumber);
    cmd->add_option("--dims", o.dims, "Dimension or range lo-hi (default 2-8)");
    cmd->add_option("--cond-max", o.cond_max, "Condition number cap (default 1e3)");
    cmd->add_option("--tol", o.tol, "Relative tolerance (default 1e-8)");
    cmd->add_option("--t-grid", o.t_grid, "Comma-separated weights (default 0,0.1,...,1)");
    cmd->add_option("--norm", o.norms, "spectral|trace|frobenius|kyfan:k (repeatable)");
  };

  CLI::App* compute = app.add_subcommand("compute", "Evaluate a mean or entropy on two matrices");
  compute->add_option("op", o.op, "sharp|natural|arithmetic|harmonic|heinz|m_hat|tsallis|quasi_tsallis|s_hat")
      ->required();
  compute->add_option("A", o.a_path, "Matrix A (path or inline JSON)")->required();
  compute->add_option("B", o.b_path, "Matrix B (path or inline JSON)")->required();
  compute->add_option("--t", o.t, "Weight (default 0.5)");
  add_common(compute);

  CLI::App* check_cmd = app.add_subcommand("check", "Check one claim on given matrices");
  check_cmd->add_option("claim", o.claim, "Claim id")->required();
  check_cmd->add_option("A", o.a_path, "Matrix A (path or inline JSON)")->required();
  check_cmd->add_option("B", o.b_path, "Matrix B (path or inline JSON)")->required();
  check_cmd->add_option("--c", o.c_path, "Matrix C with C >= A + B");
  check_cmd->add_option("--x", o.x_path, "Square matrix X for the transformer inequality");
  check_cmd->add_option("--tol", o.tol, "Relative tolerance (default 1e-8)");
  check_cmd->add_option("--t-grid", o.t_grid, "Comma-separated weights (default 0,0.1,...,1)");
  check_cmd->add_option("--norm", o.norms, "spectral|trace|frobenius|kyfan:k (repeatable)");
  add_seed(check_cmd);
  add_common(check_cmd);

  CLI::App* suite = app.add_subcommand("suite", "Run every claim, search and reference example");
  add_ensemble(suite);
  add_common(suite);

  CLI::App* falsify_cmd = app.add_subcommand("falsify", "Search for a counterexample");
  falsify_cmd->add_option("claim", o.claim, "Counterexample claim id")->required();
  add_ensemble(falsify_cmd);
  add_common(falsify_cmd);

  CLI::App* examples = app.add_subcommand("examples", "Recompute the reference examples");
  add_common(examples);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cout << json{{"error", {{"type", "UsageError"}, {"message", e.what()}}}}.dump(2) << "\n";
    std::cerr << e.what() << "\n";
    return kExitConfigError;
  }

  try {
    if (*compute) return run_compute(o);
    if (*check_cmd) return run_check(o);
    if (*suite) return run_suite_cmd(o);
    if (*falsify_cmd) return run_falsify_cmd(o);
    if (*examples) return run_examples_cmd(o);
  } catch (const std::exception& e) {
    std::cout << error_json(e).dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitConfigError;
}
