#include "extendkit/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

namespace extendkit {

namespace {

// Folds per-trial reports of one property into a single report.
PropertyReport merge(const std::vector<PropertyReport>& parts, std::uint64_t seed) {
  PropertyReport out = parts.front();
  out.seed = seed;
  out.trials = parts.size();
  out.samples = 0;
  std::size_t worst = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out.samples += parts[i].samples;
    if (parts[i].worst_violation - parts[i].tolerance >
        parts[worst].worst_violation - parts[worst].tolerance) {
      worst = i;
    }
  }
  out.worst_violation = parts[worst].worst_violation;
  out.tolerance = parts[worst].tolerance;
  out.witness = parts[worst].witness;
  out.witness["trial"] = worst;
  return out;
}

Box unit_box(std::size_t dim, double margin) {
  return {std::vector<double>(dim, -margin), std::vector<double>(dim, 1.0 + margin)};
}

std::vector<Point> queries_around(Rng& rng, std::size_t dim, std::size_t count, double margin) {
  return random_points(rng, unit_box(dim, margin), count);
}

OperatorSpec spec_of(OperatorKind kind, std::optional<Extender> f = {},
                     std::optional<DualWeight> g = {}, std::optional<double> kappa = {}) {
  return {.kind = kind, .extender = std::move(f), .dual = std::move(g), .kappa = kappa};
}

struct NamedSpec {
  std::string name;
  OperatorSpec spec;
  bool signed_ok;  // accepts functions of any sign
};

std::vector<NamedSpec> all_specs() {
  const Extender t = Extender::tietze();
  const Extender r = Extender::riesz();
  return {
      {"hausdorff", spec_of(OperatorKind::hausdorff), true},
      {"omega-tietze", spec_of(OperatorKind::omega, t), false},
      {"omega-riesz", spec_of(OperatorKind::omega, r), false},
      {"mho-dieudonne", spec_of(OperatorKind::mho, {}, DualWeight::dieudonne()), false},
      {"mho-reciprocal-riesz", spec_of(OperatorKind::mho, {}, DualWeight::reciprocal_of(r)), false},
      {"theta-riesz", spec_of(OperatorKind::theta, r), true},
      {"theta-tietze", spec_of(OperatorKind::theta, t), true},
      {"bohr", spec_of(OperatorKind::bohr), true},
      {"pasch", spec_of(OperatorKind::pasch), false},
      {"pasch-kappa", spec_of(OperatorKind::pasch, {}, {}, 2.0), true},
  };
}

BoundedFunction function_for(Rng& rng, const NamedSpec& s,
                             const std::shared_ptr<const PointCloudSet>& set) {
  // Strictly positive for the multiplicative operators so mho stays continuous.
  return s.signed_ok ? random_function(rng, set, -1.0, 1.0) : random_function(rng, set, 0.5, 1.5);
}

std::vector<PropertyReport> suite_identity(const SuiteOptions& o) {
  std::vector<PropertyReport> out;
  Rng rng(o.seed);
  const auto set = random_cloud(rng, 300, 2);
  for (const auto& s : all_specs()) {
    PropertyReport r = check_extension_identity(Extension(function_for(rng, s, set), s.spec));
    r.seed = o.seed;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<PropertyReport> suite_isometry(const SuiteOptions& o) {
  static const std::vector<std::string> ops = {"hausdorff", "omega-riesz", "omega-tietze", "bohr",
                                               "theta"};
  if (o.op && std::find(ops.begin(), ops.end(), *o.op) == ops.end()) {
    throw InputError("isometry --op must be one of hausdorff, omega-riesz, omega-tietze, bohr, theta");
  }
  std::vector<PropertyReport> out;
  for (const auto& name : ops) {
    if (o.op && *o.op != name) continue;
    if (name == "theta") {
      // The known counterexample pair on [-1, 1].
      const auto set = line_sample(-1.0, 1.0, 2001);
      const auto phi = BoundedFunction::from(set, [](const Point& a) { return (3.0 * a[0] + 1.0) / 4.0; });
      const auto psi = BoundedFunction::from(set, [](const Point& a) { return (3.0 * a[0] - 1.0) / 4.0; });
      const Extension ext(phi, spec_of(OperatorKind::theta, Extender::riesz()));
      const std::vector<Point> qs = {Point::scalar(3.0), Point::scalar(10.0), Point::scalar(100.0)};
      PropertyReport r = check_isometry(ext, psi, qs, Expectation::fails);
      double cf = 0.0;
      for (const Point& q : qs) {
        const double dev = std::fabs(ext(q) - ext.with_function(psi)(q));
        cf = std::max(cf, std::fabs(dev - q[0] / (q[0] + 1.0)));
      }
      r.closed_form_error = cf;
      r.closed_form_tolerance = 1e-9;
      r.seed = o.seed;
      out.push_back(std::move(r));
      continue;
    }
    NamedSpec s;
    if (name == "hausdorff") s = {name, spec_of(OperatorKind::hausdorff), true};
    if (name == "omega-riesz") s = {name, spec_of(OperatorKind::omega, Extender::riesz()), false};
    if (name == "omega-tietze") s = {name, spec_of(OperatorKind::omega, Extender::tietze()), false};
    if (name == "bohr") s = {name, spec_of(OperatorKind::bohr), true};
    Rng rng(o.seed);
    std::vector<PropertyReport> parts;
    for (int trial = 0; trial < 100; ++trial) {
      const auto set = random_cloud(rng, 200, 2);
      const double lo = s.signed_ok ? -1.0 : 0.0;
      const BoundedFunction phi = random_function(rng, set, lo, 1.0);
      const BoundedFunction psi = random_function(rng, set, lo, 1.0);
      const std::vector<Point> qs = queries_around(rng, 2, 50, 0.5);
      parts.push_back(check_isometry(Extension(phi, s.spec), psi, qs));
    }
    out.push_back(merge(parts, o.seed));
  }
  return out;
}

std::vector<PropertyReport> suite_two_lipschitz(const SuiteOptions& o) {
  std::vector<PropertyReport> out;
  for (const Extender& f : {Extender::riesz(), Extender::tietze()}) {
    Rng rng(o.seed);
    std::vector<PropertyReport> parts;
    for (int trial = 0; trial < 200; ++trial) {
      const auto set = random_cloud(rng, 100, 2);
      const BoundedFunction phi = random_function(rng, set, -1.0, 1.0);
      const BoundedFunction psi = random_function(rng, set, -1.0, 1.0);
      const std::vector<Point> qs = queries_around(rng, 2, 40, 0.5);
      parts.push_back(check_two_lipschitz_theta(f, phi, psi, qs));
    }
    out.push_back(merge(parts, o.seed));
  }
  return out;
}

std::vector<PropertyReport> suite_sublinear(const SuiteOptions& o) {
  std::vector<PropertyReport> out;
  Rng rng(o.seed);
  const auto set = random_cloud(rng, 500, 2);
  const std::vector<Point> qs = queries_around(rng, 2, 20, 0.5);
  out.push_back(check_monotone_sublinear(OperatorKind::omega, Extender::riesz(), set, 100, qs, o.seed));
  out.push_back(check_monotone_sublinear(OperatorKind::omega, Extender::tietze(), set, 100, qs, o.seed));
  out.push_back(check_monotone_sublinear(OperatorKind::bohr, std::nullopt, set, 100, qs, o.seed));
  return out;
}

std::vector<PropertyReport> suite_modulus(const SuiteOptions& o) {
  constexpr double tau = 0.1;
  constexpr double eps = 0.05;
  const auto set = line_sample(0.0, 1.0, 201);
  Rng rng(o.seed);
  const BoundedFunction phi = random_function(rng, set, 0.5, 1.5);
  const Box domain{{-1.0}, {2.0}};
  std::vector<PropertyReport> out;
  for (const auto& s : all_specs()) {
    if (s.name != "hausdorff" && s.name != "omega-tietze" && s.name != "omega-riesz" &&
        s.name != "bohr") {
      continue;
    }
    const GluingCheck g = check_gluing(Extension(phi, s.spec), tau, eps, domain, 2000, o.seed);
    PropertyReport r;
    r.property = "uniform-continuity-gluing";
    r.subject = s.name;
    r.seed = o.seed;
    r.samples = g.boundary.pairs + g.exterior.pairs;
    r.worst_violation = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < g.boundary.rows.size(); ++i) {
      r.worst_violation = std::min(
          r.worst_violation, std::max(g.boundary.rows[i].omega, g.exterior.rows[i].omega) - eps);
    }
    r.note = "worst_violation is the smallest excess of max(boundary, exterior) modulus over epsilon";
    nlohmann::json b = nlohmann::json::array();
    nlohmann::json e = nlohmann::json::array();
    for (const auto& row : g.boundary.rows) b.push_back({row.delta, row.omega});
    for (const auto& row : g.exterior.rows) e.push_back({row.delta, row.omega});
    r.witness = {{"tau", tau},
                 {"epsilon", eps},
                 {"delta", g.delta ? nlohmann::json(*g.delta) : nlohmann::json()},
                 {"boundary_modulus", b},
                 {"exterior_modulus", e},
                 {"exterior_lipschitz_estimate", g.exterior.lipschitz_estimate}};
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<PropertyReport> suite_bohr_lipschitz(const SuiteOptions& o) {
  std::vector<PropertyReport> out;
  Rng rng(o.seed);
  {
    const auto set = line_sample(0.0, 1.0, 1001);
    const BoundedFunction phi = random_function(rng, set, 0.0, 1.0);
    out.push_back(check_bohr_lipschitz(phi, 0.5, Box{{-2.0}, {3.0}}, 10000, o.seed));
  }
  {
    const auto set = random_cloud(rng, 400, 2);
    const BoundedFunction phi = random_function(rng, set, 0.0, 1.0);
    out.push_back(check_bohr_lipschitz(phi, 0.5, unit_box(2, 1.5), 10000, o.seed));
  }
  return out;
}

std::vector<PropertyReport> suite_pasch(const SuiteOptions& o) {
  Rng rng(o.seed);
  const auto set = random_cloud(rng, 300, 2);
  const BoundedFunction phi = random_function(rng, set, 0.0, 2.0);
  std::vector<PropertyReport> out;
  out.push_back(check_pasch_lipschitz(phi, unit_box(2, 1.0), 10000, o.seed));
  const std::vector<Point> qs = queries_around(rng, 2, 1000, 1.0);
  out.push_back(check_pasch_identity(phi, qs));
  out.back().seed = o.seed;
  return out;
}

std::vector<PropertyReport> suite_constants(const SuiteOptions& o) {
  std::vector<PropertyReport> out;
  for (const Extender& f : {Extender::tietze(), Extender::riesz()}) {
    Rng rng(o.seed);
    std::vector<PropertyReport> parts;
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t dim = 1 + trial % 3;
      const std::size_t n = std::uniform_int_distribution<std::size_t>(20, 400)(rng);
      const auto set = random_cloud(rng, n, dim);
      const std::vector<Point> qs = queries_around(rng, dim, 20, 2.0);
      parts.push_back(check_omega_constants(set, f, qs));
    }
    out.push_back(merge(parts, o.seed));
  }
  return out;
}

std::vector<PropertyReport> suite_reciprocal(const SuiteOptions& o) {
  std::vector<PropertyReport> out;
  for (const Extender& f : {Extender::riesz(), Extender::tietze()}) {
    Rng rng(o.seed);
    std::vector<PropertyReport> parts;
    for (int trial = 0; trial < 100; ++trial) {
      const auto set = random_cloud(rng, 200, 2);
      const BoundedFunction phi = random_function(rng, set, 0.5, 2.0);
      const std::vector<Point> qs = queries_around(rng, 2, 20, 1.0);
      parts.push_back(check_reciprocal_identity(phi, f, qs));
    }
    out.push_back(merge(parts, o.seed));
  }
  return out;
}

std::vector<PropertyReport> suite_lemma(const SuiteOptions& o) {
  std::vector<PropertyReport> out;
  Rng rng(o.seed);
  const auto set = line_sample(0.0, 1.0, 2001);
  const BoundedFunction phi = random_function(rng, set, 0.0, 1.0);
  for (const Extender& f : {Extender::tietze(), Extender::riesz()}) {
    out.push_back(check_lemma_bound(phi, f, 0.02, 2000, o.seed));
  }
  const auto cloud = random_cloud(rng, 800, 2);
  const BoundedFunction psi = random_function(rng, cloud, 0.0, 1.0);
  for (const Extender& f : {Extender::tietze(), Extender::riesz()}) {
    out.push_back(check_lemma_bound(psi, f, 0.05, 2000, o.seed));
  }
  return out;
}

std::vector<PropertyReport> suite_oracle(const SuiteOptions& o) {
  const auto specs = all_specs();
  std::vector<std::vector<PropertyReport>> parts(specs.size());
  Rng rng(o.seed);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t dim = 1 + trial % 3;
    const std::size_t n = std::uniform_int_distribution<std::size_t>(50, 3000)(rng);
    const auto set = trial % 2 ? clustered_cloud(rng, n, dim, 8, 0.03) : random_cloud(rng, n, dim);
    const std::vector<Point> qs = queries_around(rng, dim, 100, 0.5);
    for (std::size_t k = 0; k < specs.size(); ++k) {
      const Extension ext(function_for(rng, specs[k], set), specs[k].spec);
      parts[k].push_back(check_oracle_equivalence(ext, qs));
    }
  }
  std::vector<PropertyReport> out;
  for (auto& p : parts) out.push_back(merge(p, o.seed));
  return out;
}

std::vector<PropertyReport> suite_remarks(const SuiteOptions& o) {
  auto reports = remark_suite(o.out_dir);
  for (auto& r : reports) r.seed = o.seed;
  return reports;
}

using SuiteFn = std::function<std::vector<PropertyReport>(const SuiteOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"identity", suite_identity},
      {"isometry", suite_isometry},
      {"two_lipschitz", suite_two_lipschitz},
      {"sublinear", suite_sublinear},
      {"modulus", suite_modulus},
      {"bohr_lipschitz", suite_bohr_lipschitz},
      {"pasch", suite_pasch},
      {"constants", suite_constants},
      {"reciprocal", suite_reciprocal},
      {"lemma", suite_lemma},
      {"oracle", suite_oracle},
      {"remarks", suite_remarks},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

std::vector<PropertyReport> run_suite(const std::string& name, const SuiteOptions& options) {
  if (options.op && name != "isometry") throw InputError("--op only applies to the isometry suite");
  for (const auto& [n, fn] : registry()) {
    if (n == name) return fn(options);
  }
  throw InputError("unknown suite '" + name + "'");
}

}  // namespace extendkit
