// extendkit: extend sampled functions, validate weights, run property suites.
//
// Exit codes: 0 success, 1 a property failed, 2 usage or input error.

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "extendkit/extension.hpp"
#include "extendkit/io.hpp"
#include "extendkit/suites.hpp"

namespace {

using namespace extendkit;

constexpr int kOk = 0;
constexpr int kPropertyFailed = 1;
constexpr int kUsage = 2;

struct ExtendArgs {
  std::string op;
  std::string extender;
  std::string set_path;
  std::string queries_path;
  std::string out_path = "-";
  std::string strategy = "pruned";
  std::optional<double> kappa;
  std::string metric;
};

Extender extender_named(const std::string& name) {
  if (name == "constant-half") {
    return Extender::custom("constant-half", [](double, double) { return 0.5; });
  }
  auto f = Extender::by_name(name);
  if (!f) throw InputError("unknown extender '" + name + "' (tietze, riesz)");
  return *f;
}

OperatorSpec build_spec(const ExtendArgs& a) {
  const auto kind = operator_by_name(a.op);
  if (!kind) {
    throw InputError("unknown operator '" + a.op + "' (hausdorff, omega, mho, theta, bohr, pasch)");
  }
  OperatorSpec spec{.kind = *kind};
  if (a.strategy == "brute") {
    spec.strategy = Strategy::brute;
  } else if (a.strategy != "pruned") {
    throw InputError("--strategy must be brute or pruned");
  }
  switch (*kind) {
    case OperatorKind::omega:
    case OperatorKind::theta:
      if (a.extender.empty()) throw InputError(a.op + " needs --extender tietze|riesz");
      spec.extender = extender_named(a.extender);
      break;
    case OperatorKind::mho: {
      if (a.extender.empty()) throw InputError("mho needs --extender dieudonne|tietze|riesz");
      auto g = DualWeight::by_name(a.extender);
      if (!g) throw InputError("unknown dual weight '" + a.extender + "'");
      spec.dual = *g;
      break;
    }
    default:
      if (!a.extender.empty()) throw InputError(a.op + " takes no --extender");
      break;
  }
  spec.kappa = a.kappa;
  return spec;
}

int cmd_extend(const ExtendArgs& a) {
  const OperatorSpec spec = build_spec(a);
  std::optional<Sample> sample;
  std::vector<Point> queries;
  const bool matrix = std::filesystem::path(a.set_path).extension() == ".json";
  if (matrix) {
    if (!a.metric.empty()) throw InputError("--metric does not apply to a distance-matrix set");
    MatrixSample m = read_matrix_json(a.set_path);
    sample = std::move(m.sample);
    queries = a.queries_path.empty() ? std::move(m.outside) : read_queries_csv(a.queries_path, 1);
  } else {
    std::optional<MetricKind> metric;
    if (a.metric == "euclidean") metric = MetricKind::euclidean;
    else if (a.metric == "real_line") metric = MetricKind::real_line;
    else if (!a.metric.empty()) throw InputError("--metric must be euclidean or real_line");
    sample = read_sample_csv(a.set_path, metric);
    if (a.queries_path.empty()) throw InputError("--queries is required for a CSV set");
    queries = read_queries_csv(a.queries_path, sample->set->dimension());
  }
  for (const Point& q : queries) sample->set->check_query(q);

  const Extension ext(*sample->phi, spec);
  for (const auto& w : ext.warnings()) std::cerr << "warning: " << w << '\n';
  const std::vector<double> values = ext.evaluate_many(queries);

  if (a.out_path == "-") {
    write_values_csv(std::cout, queries, values, sample->set->dimension());
  } else {
    std::ofstream out(a.out_path);
    if (!out) throw InputError("cannot write " + a.out_path);
    write_values_csv(out, queries, values, sample->set->dimension());
  }
  return kOk;
}

int cmd_validate_extender(const std::string& name, double tau, int grid, const std::string& out) {
  const Extender f = extender_named(name);
  const ExtenderReport report = validate_extender(f, tau, grid);
  const std::string text = to_json(report).dump(2);
  if (out.empty() || out == "-") {
    std::cout << text << '\n';
  } else {
    std::ofstream o(out);
    if (!o) throw InputError("cannot write " + out);
    o << text << '\n';
  }
  std::cerr << name << ": " << (report.passed() ? "pass" : "fail") << '\n';
  return report.passed() ? kOk : kPropertyFailed;
}

int cmd_validate_metric(const std::string& path, double tolerance) {
  const MatrixSample m = read_matrix_json(path);
  const MetricValidation v = m.sample.set->metric().validate(tolerance);
  const nlohmann::json j = {{"asymmetric_pairs", v.asymmetric_pairs},
                            {"nonzero_diagonal", v.nonzero_diagonal},
                            {"negative_entries", v.negative_entries},
                            {"triangle_violations", v.triangle_violations},
                            {"worst_triangle_excess", v.worst_triangle_excess},
                            {"ok", v.ok()}};
  std::cout << j.dump(2) << '\n';
  return v.ok() ? kOk : kPropertyFailed;
}

int cmd_suite(bool all, const std::string& only, const SuiteOptions& options) {
  std::vector<std::string> names;
  if (all) names = suite_names();
  else names.push_back(only);

  nlohmann::json out = nlohmann::json::array();
  bool ok = true;
  for (const auto& name : names) {
    for (const auto& r : run_suite(name, options)) {
      ok = ok && r.ok();
      nlohmann::json j = to_json(r);
      j["suite"] = name;
      out.push_back(std::move(j));
      std::cerr << name << ": " << r.property << " [" << r.subject << "] " << r.status()
                << " (worst " << r.worst_violation << ", tol " << r.tolerance << ")\n";
    }
  }
  if (options.out_dir.empty()) {
    std::cout << out.dump(2) << '\n';
  } else {
    std::filesystem::create_directories(options.out_dir);
    const auto path = std::filesystem::path(options.out_dir) / "reports.json";
    std::ofstream o(path);
    if (!o) throw InputError("cannot write " + path.string());
    o << out.dump(2) << '\n';
  }
  return ok ? kOk : kPropertyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extend functions sampled on a closed set to arbitrary points"};
  app.require_subcommand(1);

  ExtendArgs ea;
  auto* extend = app.add_subcommand("extend", "Evaluate an extension operator at query points");
  extend->add_option("--operator", ea.op, "hausdorff, omega, mho, theta, bohr or pasch")->required();
  extend->add_option("--extender", ea.extender,
                     "tietze or riesz (omega, theta); dieudonne, tietze or riesz (mho)");
  extend->add_option("--set", ea.set_path, "x1..xd,value CSV, or a distance-matrix JSON")
      ->required();
  extend->add_option("--queries", ea.queries_path, "x1..xd CSV");
  extend->add_option("--out", ea.out_path, "output CSV ('-' for stdout)");
  extend->add_option("--strategy", ea.strategy, "brute or pruned");
  extend->add_option("--kappa", ea.kappa, "pasch: use phi(a) + kappa d(a, p)");
  extend->add_option("--metric", ea.metric, "euclidean or real_line for CSV sets");

  std::string ve_name;
  double ve_tau = 0.01;
  int ve_grid = 64;
  std::string ve_out;
  auto* vext = app.add_subcommand("validate-extender", "Check a weight against the extender axioms");
  vext->add_option("name", ve_name, "tietze, riesz or constant-half")->required();
  vext->add_option("--tau", ve_tau, "lower edge of the checked region");
  vext->add_option("--grid", ve_grid, "grid points per axis");
  vext->add_option("--out", ve_out, "report JSON path (default stdout)");

  std::string vm_path;
  double vm_tol = 0.0;
  auto* vmet = app.add_subcommand("validate-metric", "Check a distance matrix against the metric axioms");
  vmet->add_option("--set", vm_path, "distance-matrix JSON")->required();
  vmet->add_option("--tolerance", vm_tol, "absolute slack on the triangle inequality");

  bool s_all = false;
  std::string s_only;
  std::string s_op;
  SuiteOptions s_opts;
  auto* suite = app.add_subcommand("suite", "Run property suites and counterexample demos");
  auto* all_flag = suite->add_flag("--all", s_all, "run every suite");
  auto* only_opt = suite->add_option("--only", s_only, "run one suite");
  all_flag->excludes(only_opt);
  suite->add_option("--op", s_op, "isometry operator filter");
  suite->add_option("--seed", s_opts.seed, "random seed");
  suite->add_option("--out", s_opts.out_dir, "directory for reports.json and demo CSVs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*extend) return cmd_extend(ea);
    if (*vext) return cmd_validate_extender(ve_name, ve_tau, ve_grid, ve_out);
    if (*vmet) return cmd_validate_metric(vm_path, vm_tol);
    if (*suite) {
      if (!s_all && s_only.empty()) throw InputError("suite needs --all or --only NAME");
      if (!s_op.empty()) s_opts.op = s_op;
      return cmd_suite(s_all, s_only, s_opts);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
