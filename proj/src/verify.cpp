#include "extendkit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "extendkit/parallel.hpp"

namespace extendkit {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

nlohmann::json point_json(const Point& p) {
  return nlohmann::json(std::vector<double>(p.coords().begin(), p.coords().end()));
}

std::string subject_of(const OperatorSpec& spec) {
  std::string s = to_string(spec.kind);
  if (spec.extender) s += "/" + spec.extender->name();
  if (spec.dual) s += "/" + spec.dual->name();
  if (spec.kappa) s += "/kappa";
  return s;
}

std::vector<Point> points_of(const PointCloudSet& set) {
  std::vector<Point> pts;
  pts.reserve(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) pts.push_back(set.point(i));
  return pts;
}

void require_coordinates(const PointCloudSet& set, const char* what) {
  if (set.metric().kind() == MetricKind::distance_matrix) {
    throw InputError(std::string(what) + " samples new points and needs a coordinate metric");
  }
}

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return Rng(seq);
}

struct PointPair {
  Point x;
  Point p;
};

Point sample_exterior(Rng& rng, const PointCloudSet& set, const Box& domain, double tau) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Point x = random_point(rng, domain);
    if (set.nearest(x).rho >= tau) return x;
  }
  throw InputError("no point of the sampling box lies at distance >= tau from the set");
}

std::vector<PointPair> sample_pairs(const PointCloudSet& set, const ModulusRegion& region,
                                    std::size_t count, Rng& rng) {
  std::vector<PointPair> pairs;
  pairs.reserve(count);
  std::uniform_int_distribution<std::size_t> pick(0, set.size() - 1);
  while (pairs.size() < count) {
    switch (region.kind) {
      case ModulusRegion::Kind::boundary: {
        Point a = set.point(pick(rng));
        Point x = random_offset(rng, a, region.max_distance);
        pairs.push_back({std::move(a), std::move(x)});
        break;
      }
      case ModulusRegion::Kind::exterior: {
        Point x = sample_exterior(rng, set, region.domain, region.tau);
        Point p = random_offset(rng, x, region.max_distance);
        if (set.nearest(p).rho < region.tau) continue;
        pairs.push_back({std::move(x), std::move(p)});
        break;
      }
      case ModulusRegion::Kind::global: {
        Point x = random_point(rng, region.domain);
        Point p = random_offset(rng, x, region.max_distance);
        pairs.push_back({std::move(x), std::move(p)});
        break;
      }
    }
  }
  return pairs;
}

struct PairValues {
  std::vector<double> fx;
  std::vector<double> fp;
  std::vector<double> d;
};

PairValues evaluate_pairs(const Extension& ext, const std::vector<PointPair>& pairs) {
  PairValues v;
  v.fx.resize(pairs.size());
  v.fp.resize(pairs.size());
  v.d.resize(pairs.size());
  const MetricOracle& metric = ext.phi().set().metric();
  parallel_for(pairs.size(), [&](std::size_t i) {
    v.fx[i] = ext(pairs[i].x);
    v.fp[i] = ext(pairs[i].p);
    v.d[i] = metric.dist(pairs[i].x, pairs[i].p);
  });
  return v;
}

}  // namespace

bool PropertyReport::ok() const {
  if (!applicable) return true;
  if (expectation == Expectation::holds) return holds() && closed_form_ok();
  return !holds() && closed_form_ok();
}

std::string PropertyReport::status() const {
  if (!applicable) return "not-applicable";
  if (expectation == Expectation::holds) return ok() ? "pass" : "fail";
  return ok() ? "expected-fail-reproduced" : "expected-fail-missing";
}

nlohmann::json to_json(const PropertyReport& r) {
  nlohmann::json j;
  j["property"] = r.property;
  j["subject"] = r.subject;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["samples"] = r.samples;
  j["worst_violation"] = r.worst_violation;
  j["tolerance"] = r.tolerance;
  j["expectation"] = r.expectation == Expectation::holds ? "holds" : "fails";
  if (r.expectation == Expectation::fails) j["label"] = "known-counterexample";
  if (r.closed_form_error) {
    j["closed_form_error"] = *r.closed_form_error;
    j["closed_form_tolerance"] = r.closed_form_tolerance;
  }
  j["status"] = r.status();
  if (!r.note.empty()) j["note"] = r.note;
  j["witness"] = r.witness;
  return j;
}

PropertyReport check_extension_identity(const Extension& ext) {
  PropertyReport r;
  r.property = "extension-identity";
  r.subject = subject_of(ext.spec());
  if (!ext.is_extension()) {
    r.applicable = false;
    r.note = "the pasch forms are not required to reproduce phi on the sample";
    return r;
  }
  const BoundedFunction& phi = ext.phi();
  const std::vector<Point> pts = points_of(phi.set());
  const std::vector<double> vals = ext.evaluate_many(pts);
  r.samples = pts.size();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double v = std::fabs(vals[i] - phi[i]);
    if (v > r.worst_violation) {
      r.worst_violation = v;
      r.witness = {{"id", i}, {"phi", phi[i]}, {"value", vals[i]}};
    }
  }
  return r;
}

PropertyReport check_isometry(const Extension& ext, const BoundedFunction& psi,
                              std::span<const Point> queries, Expectation expect) {
  PropertyReport r;
  r.property = "isometry";
  r.subject = subject_of(ext.spec());
  r.expectation = expect;
  if (!ext.is_extension()) {
    r.applicable = false;
    r.note = "only defined for extension operators";
    return r;
  }
  const BoundedFunction& phi = ext.phi();
  const Extension other = ext.with_function(psi);
  const double norm = sup_distance(phi, psi);
  r.tolerance = 1e-9 * std::max({1.0, phi.sup_norm(), psi.sup_norm()});

  const std::vector<double> f = ext.evaluate_many(queries);
  const std::vector<double> g = other.evaluate_many(queries);
  double excess = kNegInf;
  double sup_seen = 0.0;
  nlohmann::json worst_query;
  for (std::size_t i = 0; i < queries.size(); ++i) {
    const double dev = std::fabs(f[i] - g[i]);
    sup_seen = std::max(sup_seen, dev);
    if (dev - norm > excess) {
      excess = dev - norm;
      worst_query = {{"query", point_json(queries[i])}, {"f", f[i]}, {"g", g[i]},
                     {"deviation", dev}};
    }
  }
  const std::vector<Point> on_a = points_of(phi.set());
  const std::vector<double> fa = ext.evaluate_many(on_a);
  const std::vector<double> ga = other.evaluate_many(on_a);
  for (std::size_t i = 0; i < on_a.size(); ++i) sup_seen = std::max(sup_seen, std::fabs(fa[i] - ga[i]));
  const double attain_gap = norm - sup_seen;

  r.samples = queries.size() + on_a.size();
  r.worst_violation = std::max(excess, attain_gap);
  r.witness = {{"norm", norm}, {"sup_seen", sup_seen}, {"attain_gap", attain_gap},
               {"worst_query", worst_query}};
  return r;
}

PropertyReport check_two_lipschitz_theta(const Extender& f, const BoundedFunction& phi,
                                         const BoundedFunction& psi,
                                         std::span<const Point> queries) {
  PropertyReport r;
  r.property = "two-lipschitz";
  r.subject = "theta/" + f.name();
  const Extension a(phi, {.kind = OperatorKind::theta, .extender = f});
  const Extension b = a.with_function(psi);
  const double norm = sup_distance(phi, psi);
  r.tolerance = 1e-9 * std::max({1.0, phi.sup_norm(), psi.sup_norm()});
  const std::vector<double> fa = a.evaluate_many(queries);
  const std::vector<double> fb = b.evaluate_many(queries);
  r.worst_violation = queries.empty() ? 0.0 : kNegInf;
  for (std::size_t i = 0; i < queries.size(); ++i) {
    const double dev = std::fabs(fa[i] - fb[i]);
    if (dev - 2.0 * norm > r.worst_violation) {
      r.worst_violation = dev - 2.0 * norm;
      r.witness = {{"query", point_json(queries[i])}, {"deviation", dev}, {"norm", norm}};
    }
  }
  r.samples = queries.size();
  return r;
}

PropertyReport check_monotone_sublinear(OperatorKind op, const std::optional<Extender>& f,
                                        std::shared_ptr<const PointCloudSet> set,
                                        std::size_t trials, std::span<const Point> queries,
                                        std::uint64_t seed) {
  if (op != OperatorKind::omega && op != OperatorKind::bohr) {
    throw InputError("monotone/sublinear checks apply to omega and bohr");
  }
  PropertyReport r;
  r.property = "isotone-sublinear";
  r.seed = seed;
  r.trials = trials;
  r.samples = trials * queries.size();
  r.tolerance = 1e-9;
  r.note = "violations divided by max(1, sup norms involved)";
  const OperatorSpec spec{.kind = op, .extender = f};
  r.subject = subject_of(spec);

  struct Worst {
    double value = kNegInf;
    std::string kind;
    std::size_t query = 0;
    double lambda = 0.0;
  };
  std::vector<Worst> per_trial(trials);
  parallel_for(trials, [&](std::size_t t) {
    Rng rng = trial_rng(seed, t);
    std::uniform_real_distribution<double> hi(0.5, 2.0);
    const BoundedFunction phi = random_function(rng, set, 0.0, hi(rng));
    const BoundedFunction psi = random_function(rng, set, 0.0, hi(rng));
    const double lambda = t == 0 ? 0.0 : std::uniform_real_distribution<double>(0.0, 10.0)(rng);
    const BoundedFunction sum = phi + psi;
    const BoundedFunction scaled = scale(phi, lambda);
    const Extension ephi(phi, spec);
    const Extension epsi = ephi.with_function(psi);
    const Extension esum = ephi.with_function(sum);
    const Extension escaled = ephi.with_function(scaled);
    const double norm = std::max({1.0, sum.sup_norm(), scaled.sup_norm()});
    Worst& w = per_trial[t];
    w.lambda = lambda;
    for (std::size_t i = 0; i < queries.size(); ++i) {
      const double a = ephi(queries[i]);
      const double b = epsi(queries[i]);
      const double s = esum(queries[i]);
      const double l = escaled(queries[i]);
      const std::pair<double, const char*> checks[] = {
          {(a - s) / norm, "isotone"},
          {(s - a - b) / norm, "subadditive"},
          {std::fabs(l - lambda * a) / norm, "homogeneous"},
      };
      for (const auto& [v, kind] : checks) {
        if (v > w.value) {
          w.value = v;
          w.kind = kind;
          w.query = i;
        }
      }
    }
  });
  r.worst_violation = queries.empty() ? 0.0 : kNegInf;
  for (std::size_t t = 0; t < trials; ++t) {
    if (per_trial[t].value > r.worst_violation) {
      r.worst_violation = per_trial[t].value;
      r.witness = {{"trial", t},
                   {"check", per_trial[t].kind},
                   {"query", point_json(queries[per_trial[t].query])},
                   {"lambda", per_trial[t].lambda}};
    }
  }
  return r;
}

ModulusTable empirical_modulus(const Extension& ext, const ModulusRegion& region,
                               std::size_t pair_count, std::uint64_t seed) {
  const PointCloudSet& set = ext.phi().set();
  require_coordinates(set, "empirical_modulus");
  if (!(region.max_distance > 0.0)) throw InputError("max_distance must be > 0");
  Rng rng(seed);
  const std::vector<PointPair> pairs = sample_pairs(set, region, pair_count, rng);
  const PairValues v = evaluate_pairs(ext, pairs);

  ModulusTable table;
  table.pairs = pairs.size();
  for (int k = 0; k < 12; ++k) table.rows.push_back({std::ldexp(region.max_distance, -k), 0.0});
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const double change = std::fabs(v.fx[i] - v.fp[i]);
    for (auto& row : table.rows) {
      if (v.d[i] <= row.delta) row.omega = std::max(row.omega, change);
    }
    if (v.d[i] > 0.0) table.lipschitz_estimate = std::max(table.lipschitz_estimate, change / v.d[i]);
  }
  table.normalize();
  return table;
}

GluingCheck check_gluing(const Extension& ext, double tau, double epsilon, const Box& domain,
                         std::size_t pair_count, std::uint64_t seed) {
  GluingCheck g;
  g.tau = tau;
  g.epsilon = epsilon;
  g.boundary = empirical_modulus(
      ext, {.kind = ModulusRegion::Kind::boundary, .tau = tau, .max_distance = tau}, pair_count,
      seed);
  g.exterior = empirical_modulus(ext,
                                 {.kind = ModulusRegion::Kind::exterior,
                                  .tau = tau,
                                  .max_distance = tau,
                                  .domain = domain},
                                 pair_count, seed + 1);
  for (std::size_t i = g.boundary.rows.size(); i-- > 0;) {
    if (g.boundary.rows[i].omega <= epsilon && g.exterior.rows[i].omega <= epsilon) {
      g.delta = g.boundary.rows[i].delta;
      break;
    }
  }
  return g;
}

PropertyReport check_bohr_lipschitz(const BoundedFunction& phi, double tau, const Box& domain,
                                    std::size_t pair_count, std::uint64_t seed) {
  require_coordinates(phi.set(), "check_bohr_lipschitz");
  if (!(tau > 0.0)) throw InputError("tau must be > 0");
  PropertyReport r;
  r.property = "bohr-lipschitz";
  r.subject = "bohr";
  r.seed = seed;
  r.tolerance = 1e-9;
  const Extension ext(phi, {.kind = OperatorKind::bohr});
  Rng rng(seed);
  const ModulusRegion region{.kind = ModulusRegion::Kind::exterior,
                             .tau = tau,
                             .max_distance = tau / 3.0,
                             .domain = domain};
  const std::vector<PointPair> pairs = sample_pairs(phi.set(), region, pair_count, rng);
  const PairValues v = evaluate_pairs(ext, pairs);
  const double constant = 4.0 / tau * (phi.max() - phi.min());
  r.samples = pairs.size();
  r.worst_violation = pairs.empty() ? 0.0 : kNegInf;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const double excess = std::fabs(v.fx[i] - v.fp[i]) - constant * v.d[i];
    if (excess > r.worst_violation) {
      r.worst_violation = excess;
      r.witness = {{"x", point_json(pairs[i].x)}, {"p", point_json(pairs[i].p)},
                   {"fx", v.fx[i]}, {"fp", v.fp[i]}, {"d", v.d[i]}, {"constant", constant}};
    }
  }
  return r;
}

PropertyReport check_pasch_lipschitz(const BoundedFunction& phi, const Box& domain,
                                     std::size_t pair_count, std::uint64_t seed) {
  require_coordinates(phi.set(), "check_pasch_lipschitz");
  PropertyReport r;
  r.property = "pasch-lipschitz";
  r.subject = "pasch";
  r.seed = seed;
  r.tolerance = 1e-9;
  const Extension ext(phi, {.kind = OperatorKind::pasch});
  Rng rng(seed);
  std::vector<PointPair> pairs;
  pairs.reserve(pair_count);
  for (std::size_t i = 0; i < pair_count; ++i) {
    Point x = random_point(rng, domain);
    Point p = random_point(rng, domain);
    pairs.push_back({std::move(x), std::move(p)});
  }
  const PairValues v = evaluate_pairs(ext, pairs);
  const double kappa = phi.max();
  r.samples = pairs.size();
  r.worst_violation = pairs.empty() ? 0.0 : kNegInf;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const double excess = std::fabs(v.fx[i] - v.fp[i]) - (kappa + 1.0) * v.d[i];
    if (excess > r.worst_violation) {
      r.worst_violation = excess;
      r.witness = {{"x", point_json(pairs[i].x)}, {"p", point_json(pairs[i].p)},
                   {"fx", v.fx[i]}, {"fp", v.fp[i]}, {"d", v.d[i]}, {"kappa", kappa}};
    }
  }
  return r;
}

PropertyReport check_pasch_identity(const BoundedFunction& phi, std::span<const Point> queries) {
  PropertyReport r;
  r.property = "pasch-hausdorff-identity";
  r.subject = "pasch";
  r.tolerance = 1e-12;
  std::vector<double> rel(queries.size(), kNegInf);
  parallel_for(queries.size(), [&](std::size_t i) {
    const EvalResult h = evaluate_hausdorff(phi, queries[i]);
    if (h.rho < kMembershipRadius) return;
    const double f = pasch_eval(phi, queries[i]);
    const double scale = std::max({1.0, std::fabs(h.value), phi.sup_norm()});
    rel[i] = std::fabs(h.value - (f / h.rho - 1.0)) / scale;
  });
  r.worst_violation = 0.0;
  for (std::size_t i = 0; i < queries.size(); ++i) {
    if (rel[i] == kNegInf) continue;
    ++r.samples;
    if (rel[i] > r.worst_violation) {
      r.worst_violation = rel[i];
      r.witness = {{"query", point_json(queries[i])}};
    }
  }
  return r;
}

PropertyReport check_omega_constants(std::shared_ptr<const PointCloudSet> set, const Extender& f,
                                     std::span<const Point> queries) {
  PropertyReport r;
  r.property = "omega-on-constants";
  r.subject = "omega/" + f.name();
  r.tolerance = 1e-12;
  const BoundedFunction one = BoundedFunction::constant(std::move(set), 1.0);
  std::vector<double> rel(queries.size(), kNegInf);
  parallel_for(queries.size(), [&](std::size_t i) {
    const EvalResult e = evaluate_omega(one, f, queries[i]);
    if (e.rho < kMembershipRadius) return;
    const double expected = f.evaluate(e.rho, e.rho).value;
    rel[i] = std::fabs(e.value - expected) / expected;
  });
  for (std::size_t i = 0; i < queries.size(); ++i) {
    if (rel[i] == kNegInf) continue;
    ++r.samples;
    if (rel[i] > r.worst_violation) {
      r.worst_violation = rel[i];
      r.witness = {{"query", point_json(queries[i])}};
    }
  }
  return r;
}

PropertyReport check_reciprocal_identity(const BoundedFunction& phi, const Extender& f,
                                         std::span<const Point> queries) {
  PropertyReport r;
  r.property = "reciprocal-identity";
  r.subject = "mho/1/" + f.name();
  r.tolerance = 1e-12;
  const BoundedFunction inv = reciprocal(phi);
  const DualWeight g = DualWeight::reciprocal_of(f);
  std::vector<double> rel(queries.size());
  parallel_for(queries.size(), [&](std::size_t i) {
    const double m = mho_eval(phi, g, queries[i]);
    const double o = omega_eval(inv, f, queries[i]);
    rel[i] = std::fabs(m * o - 1.0);
  });
  r.samples = queries.size();
  for (std::size_t i = 0; i < queries.size(); ++i) {
    if (rel[i] > r.worst_violation) {
      r.worst_violation = rel[i];
      r.witness = {{"query", point_json(queries[i])}};
    }
  }
  return r;
}

PropertyReport check_lemma_bound(const BoundedFunction& phi, const Extender& f, double tau,
                                 std::size_t samples, std::uint64_t seed) {
  const PointCloudSet& set = phi.set();
  require_coordinates(set, "check_lemma_bound");
  if (!(tau > 0.0)) throw InputError("tau must be > 0");
  PropertyReport r;
  r.property = "boundary-two-sided-bound";
  r.subject = "omega/" + f.name();
  r.seed = seed;
  r.tolerance = 1e-9;
  const Extension ext(phi, {.kind = OperatorKind::omega, .extender = f});

  // Oscillation of phi over pairs closer than 2 tau.
  const std::size_t n = set.size();
  std::vector<double> osc(n, 0.0);
  parallel_for(n, [&](std::size_t i) {
    std::vector<double> d(n);
    set.distances(set.point(i), d);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (d[j] < 2.0 * tau) osc[i] = std::max(osc[i], std::fabs(phi[i] - phi[j]));
    }
  });
  const double eps = *std::max_element(osc.begin(), osc.end()) * (1.0 + 1e-9) + 1e-12;
  const double lambda = std::max(phi.max(), 2.0 * eps);
  const double ratio = eps / lambda;

  std::optional<double> r_radius;
  for (int k = 0; k <= 200 && !r_radius; ++k) {
    const double t = std::ldexp(tau, -k);
    if (f.weight(tau, t).value < ratio) r_radius = t;
  }
  std::optional<double> delta;
  for (int k = 0; r_radius && k <= 200 && !delta; ++k) {
    const double t = std::ldexp(*r_radius, -k);
    if (f.weight(t, t).value > 1.0 - ratio) delta = t;
  }
  r.witness = {{"tau", tau}, {"epsilon", eps}, {"lambda", lambda}};
  if (!delta) {
    r.worst_violation = std::numeric_limits<double>::infinity();
    r.note = "no admissible radius found for this weight";
    return r;
  }
  r.witness["r"] = *r_radius;
  r.witness["delta"] = *delta;

  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  struct Sample {
    std::size_t id;
    Point x;
  };
  std::vector<Sample> pts;
  pts.reserve(samples);
  for (std::size_t attempts = 0; pts.size() < samples && attempts < 100 * samples + 100; ++attempts) {
    const std::size_t id = pick(rng);
    const Point p = set.point(id);
    Point x = random_offset(rng, p, *delta);
    if (!(set.distance(id, x) < *delta)) continue;
    if (set.nearest(x).rho < kMembershipRadius) continue;
    pts.push_back({id, std::move(x)});
  }
  std::vector<double> vals(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) { vals[i] = ext(pts[i].x); });
  r.samples = pts.size();
  r.worst_violation = pts.empty() ? 0.0 : kNegInf;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double fp = phi[pts[i].id];
    const double lower = (fp - 2.0 * eps) - vals[i];
    const double upper = vals[i] - (fp + eps);
    const double v = std::max(lower, upper);
    if (v > r.worst_violation) {
      r.worst_violation = v;
      r.witness["worst"] = {{"p", pts[i].id}, {"x", point_json(pts[i].x)}, {"phi_p", fp},
                            {"value", vals[i]}};
    }
  }
  return r;
}

PropertyReport check_oracle_equivalence(const Extension& ext, std::span<const Point> queries) {
  PropertyReport r;
  r.property = "pruned-equals-brute";
  r.subject = subject_of(ext.spec());
  const Extension brute = ext.with_strategy(Strategy::brute);
  const Extension pruned = ext.with_strategy(Strategy::pruned);
  const std::vector<double> b = brute.evaluate_many(queries);
  const std::vector<double> p = pruned.evaluate_many(queries);
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < queries.size(); ++i) {
    if (b[i] == p[i]) continue;
    ++mismatches;
    const double gap = std::fabs(b[i] - p[i]);
    if (gap > r.worst_violation) {
      r.worst_violation = gap;
      r.witness["worst"] = {{"query", point_json(queries[i])}, {"brute", b[i]}, {"pruned", p[i]}};
    }
  }
  r.samples = queries.size();
  r.witness["mismatches"] = mismatches;
  return r;
}

}  // namespace extendkit
