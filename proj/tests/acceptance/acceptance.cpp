// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "extendkit/extension.hpp"
#include "extendkit/verify.hpp"
#include "oracle.hpp"

using namespace extendkit;

namespace {

// Pinned tolerances.
constexpr double kClosedFormTol = 1e-9;
constexpr double kRelTol = 1e-12;
constexpr double kSlack = 1e-9;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, const char* name, double budget_s, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o = body();
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::string timing = std::to_string(secs) + "s";
  if (budget_s > 0.0) {
    timing += " (budget " + std::to_string(budget_s) + "s)";
    if (secs >= budget_s) o.pass = false;
  }
  if (!o.pass) ++failures;
  std::printf("AC%-2d %s  %s: %s [%s]\n", id, o.pass ? "PASS" : "FAIL", name, o.detail.c_str(),
              timing.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Box cube(std::size_t dim, double lo, double hi) {
  return {std::vector<double>(dim, lo), std::vector<double>(dim, hi)};
}

Outcome psi_nonlinearity() {
  const auto a = line_sample(-1.0, 0.0, 1001);
  const auto phi = BoundedFunction::from(a, [](const Point& x) { return x[0]; });
  const double v1 = hausdorff_eval(phi, Point::scalar(2.0));
  const double v2 = hausdorff_eval(scale(phi, 2.0), Point::scalar(2.0));
  const bool ok = std::fabs(v1 + 0.5) <= kClosedFormTol && std::fabs(v2 + 1.5) <= kClosedFormTol;
  return {ok, fmt("Psi[phi](2)=%.17g Psi[2phi](2)=%.17g 2*Psi[phi](2)=%.17g", v1, v2, 2.0 * v1)};
}

Outcome theta_non_isometry() {
  const auto a = line_sample(-1.0, 1.0, 2001);
  const auto phi = BoundedFunction::from(a, [](const Point& x) { return (3.0 * x[0] + 1.0) / 4.0; });
  const auto psi = BoundedFunction::from(a, [](const Point& x) { return (3.0 * x[0] - 1.0) / 4.0; });
  const double norm = sup_distance(phi, psi);
  bool ok = std::fabs(norm - 0.5) <= kClosedFormTol;
  std::string detail = fmt("||phi-psi||=%.17g", norm);
  for (double p : {3.0, 10.0, 100.0}) {
    const Point q = Point::scalar(p);
    const double dev = std::fabs(theta_eval(phi, Extender::riesz(), q) - theta_eval(psi, Extender::riesz(), q));
    const double want = p / (p + 1.0);
    ok = ok && std::fabs(dev - want) <= kClosedFormTol && dev > norm;
    detail += fmt(" p=%g dev=%.17g want=%.17g", p, dev, want);
  }
  return {ok, detail};
}

Outcome omega_constants() {
  Rng rng(kDefaultSeed);
  double worst = 0.0;
  std::size_t n = 0;
  for (int c = 0; c < 100; ++c) {
    const std::size_t dim = 1 + c % 3;
    const auto cloud = random_cloud(rng, 200, dim);
    const auto one = BoundedFunction::constant(cloud, 1.0);
    for (const Point& q : random_points(rng, cube(dim, -2.0, 3.0), 20)) {
      const EvalResult r = evaluate_omega(one, Extender::tietze(), q);
      if (r.rho < kMembershipRadius) continue;
      // Reference (1 + rho^2)^(-1/rho) in long double.
      worst = std::max(worst, oracle::rel_error(r.value, oracle::tietze(r.rho, r.rho)));
      ++n;
    }
  }
  return {worst <= kRelTol, fmt("%g queries, worst relative error %.3g (tol %g)", double(n), worst, kRelTol)};
}

Outcome reciprocal_identity() {
  Rng rng(kDefaultSeed + 1);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t dim = 1 + t % 3;
    const auto cloud = random_cloud(rng, 150, dim);
    const auto phi = random_function(rng, cloud, 0.5, 2.0);
    const auto inv = reciprocal(phi);
    const auto g = DualWeight::reciprocal_of(Extender::riesz());
    for (const Point& q : random_points(rng, cube(dim, -1.0, 2.0), 20)) {
      const double prod = mho_eval(phi, g, q) * omega_eval(inv, Extender::riesz(), q);
      worst = std::max(worst, std::fabs(prod - 1.0));
    }
  }
  return {worst <= kRelTol, fmt("100 functions, worst |Mho*Omega - 1| %.3g (tol %g)", worst, kRelTol)};
}

Outcome isometry_suites() {
  Rng rng(kDefaultSeed + 2);
  struct Case {
    const char* name;
    OperatorSpec spec;
    double lo;
  };
  const Case cases[] = {
      {"hausdorff", {.kind = OperatorKind::hausdorff}, -1.0},
      {"omega-riesz", {.kind = OperatorKind::omega, .extender = Extender::riesz()}, 0.0},
      {"omega-tietze", {.kind = OperatorKind::omega, .extender = Extender::tietze()}, 0.0},
      {"bohr", {.kind = OperatorKind::bohr}, -1.0},
  };
  bool ok = true;
  std::string detail;
  for (const Case& c : cases) {
    double worst = -1e300;
    int passed = 0;
    for (int t = 0; t < 100; ++t) {
      const auto cloud = random_cloud(rng, 150, 2);
      const auto phi = random_function(rng, cloud, c.lo, 1.0);
      const auto psi = random_function(rng, cloud, c.lo, 1.0);
      const auto qs = random_points(rng, cube(2, -0.5, 1.5), 50);
      const PropertyReport r = check_isometry(Extension(phi, c.spec), psi, qs);
      worst = std::max(worst, r.worst_violation);
      passed += r.holds() ? 1 : 0;
    }
    ok = ok && passed == 100;
    detail += std::string(c.name) + fmt(" %g/100 worst %.3g; ", passed, worst);
  }
  return {ok, detail};
}

Outcome theta_two_lipschitz() {
  Rng rng(kDefaultSeed + 3);
  double worst = -1e300;
  for (int t = 0; t < 200; ++t) {
    const auto cloud = random_cloud(rng, 100, 2);
    const auto phi = random_function(rng, cloud, -1.0, 1.0);
    const auto psi = random_function(rng, cloud, -1.0, 1.0);
    const double bound = 2.0 * sup_distance(phi, psi);
    const auto f = t % 2 ? Extender::tietze() : Extender::riesz();
    for (const Point& q : random_points(rng, cube(2, -0.5, 1.5), 20)) {
      const double dev = std::fabs(theta_eval(phi, f, q) - theta_eval(psi, f, q));
      worst = std::max(worst, dev - bound);
    }
  }
  return {worst <= kSlack, fmt("200 pairs, worst dev - 2||phi-psi|| = %.3g (slack %g)", worst, kSlack)};
}

// Point of the exterior region {x : d(x, [0,1]) >= tau} on the line.
double exterior_point(Rng& rng, double tau) {
  std::uniform_real_distribution<double> side(0.0, 1.0);
  std::uniform_real_distribution<double> reach(tau, 3.0);
  return side(rng) < 0.5 ? -reach(rng) : 1.0 + reach(rng);
}

Outcome bohr_lipschitz() {
  Rng rng(kDefaultSeed + 4);
  const double tau = 0.5;
  const auto a = line_sample(0.0, 1.0, 1001);
  const auto phi = random_function(rng, a, 0.0, 1.0);
  std::uniform_real_distribution<double> step(-tau / 3.0, tau / 3.0);
  double worst = -1e300;
  int pairs = 0;
  while (pairs < 10000) {
    const double x = exterior_point(rng, tau);
    const double p = x + step(rng);
    if (a->nearest(Point::scalar(p)).rho < tau) continue;
    const double d = std::fabs(x - p);
    const double diff = std::fabs(bohr_eval(phi, Point::scalar(x)) - bohr_eval(phi, Point::scalar(p)));
    worst = std::max(worst, diff - (4.0 / tau) * d);
    ++pairs;
  }
  return {worst <= kSlack, fmt("%g pairs, worst |dPhi| - (4/tau) d = %.3g (slack %g)", pairs, worst, kSlack)};
}

Outcome pasch_lipschitz() {
  Rng rng(kDefaultSeed + 5);
  const auto cloud = random_cloud(rng, 300, 2);
  const auto phi = random_function(rng, cloud, 0.0, 2.0);
  const double kappa = phi.max();
  const Box box = cube(2, -1.0, 2.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = -1e300;
  for (int i = 0; i < 10000; ++i) {
    const Point x = random_point(rng, box);
    const Point p = random_offset(rng, x, 0.5 * u(rng));
    const double d = cloud->metric().dist(x, p);
    worst = std::max(worst, std::fabs(pasch_eval(phi, x) - pasch_eval(phi, p)) - (kappa + 1.0) * d);
  }
  const auto qs = random_points(rng, box, 1000);
  const PropertyReport id = check_pasch_identity(phi, qs);
  const bool ok = worst <= kSlack && id.holds() && id.tolerance <= kRelTol;
  return {ok, fmt("10000 pairs, worst excess %.3g; Psi = f/rho - 1 worst relative %.3g (tol %g)", worst,
                  id.worst_violation, id.tolerance)};
}

Outcome failure_demos() {
  bool ok = true;
  std::string detail;
  int seen = 0;
  for (const PropertyReport& r : remark_suite()) {
    if (r.subject != "omega/riesz" && r.subject != "mho/dieudonne") continue;
    ++seen;
    ok = ok && r.status() == "expected-fail-reproduced" && r.closed_form_ok();
    detail += r.subject + " " + r.status() + fmt(" closed-form error %.3g; ", r.closed_form_error.value_or(-1.0));
  }
  // Direct evaluation of both closed forms.
  const auto line = line_sample(-1000.0, 0.0, 1000001, IndexPolicy::never);
  const auto neg = BoundedFunction::constant(line, -1.0);
  const double w = evaluate_omega(neg, Extender::riesz(), Point::scalar(1.0), Strategy::brute,
                                  SignPolicy::allow_signed).value;
  const auto a = line_sample(-1.0, 0.0, 1001);
  const auto g = BoundedFunction::from(a, [](const Point& x) { return 1.0 + x[0]; });
  const double m = mho_eval(g, DualWeight::dieudonne(), Point::scalar(0.5));
  ok = ok && seen == 2 && std::fabs(w + 1.0 / 1001.0) <= kClosedFormTol && m == 0.0;
  detail += fmt("Omega_R[-1](1)=%.17g Mho_D[1+a](0.5)=%.17g", w, m);
  return {ok, detail};
}

Outcome oracle_equivalence() {
  Rng rng(kDefaultSeed + 6);
  const std::vector<OperatorSpec> specs = {
      {.kind = OperatorKind::hausdorff},
      {.kind = OperatorKind::omega, .extender = Extender::tietze()},
      {.kind = OperatorKind::omega, .extender = Extender::riesz()},
      {.kind = OperatorKind::mho, .dual = DualWeight::dieudonne()},
      {.kind = OperatorKind::theta, .extender = Extender::riesz()},
      {.kind = OperatorKind::theta, .extender = Extender::tietze()},
      {.kind = OperatorKind::bohr},
      {.kind = OperatorKind::pasch},
      {.kind = OperatorKind::pasch, .kappa = 2.0},
  };
  std::size_t mismatches = 0;
  std::size_t checked = 0;
  for (int c = 0; c < 50; ++c) {
    // Sizes from 100 to 10^4 points.
    const auto n = static_cast<std::size_t>(std::lround(100.0 * std::pow(100.0, c / 49.0)));
    const std::size_t dim = 1 + c % 3;
    const auto cloud = c % 2 ? clustered_cloud(rng, n, dim, 8, 0.02) : random_cloud(rng, n, dim);
    const auto s = random_function(rng, cloud, -1.0, 1.0);
    const auto p = random_function(rng, cloud, 0.0, 1.0);
    const auto qs = random_points(rng, cube(dim, -0.5, 1.5), 20);
    for (const OperatorSpec& spec : specs) {
      const bool signed_ok = spec.kind == OperatorKind::hausdorff || spec.kind == OperatorKind::theta ||
                             spec.kind == OperatorKind::bohr || spec.kappa;
      const PropertyReport r = check_oracle_equivalence(Extension(signed_ok ? s : p, spec), qs);
      mismatches += r.witness.value("mismatches", std::size_t{0});
      checked += r.samples;
    }
  }

  // Speed, informative only.
  const auto cloud = clustered_cloud(rng, 10000, 2, 10, 0.02);
  const auto phi = random_function(rng, cloud, 0.0, 1.0);
  const auto qs = random_points(rng, cube(2, 0.0, 1.0), 1000);
  auto time = [&](Strategy st) {
    const Extension ext(phi, {.kind = OperatorKind::omega, .extender = Extender::riesz(), .strategy = st});
    const auto t0 = Clock::now();
    volatile double sink = 0.0;
    for (const Point& q : qs) sink = sink + ext(q);
    return std::chrono::duration<double>(Clock::now() - t0).count();
  };
  const double brute = time(Strategy::brute);
  const double pruned = time(Strategy::pruned);
  return {mismatches == 0,
          fmt("%g evaluations compared, %g mismatches; ", double(checked), double(mismatches)) +
              fmt("speed (informative): brute %.3fs pruned %.3fs speedup %.1fx", brute, pruned, brute / pruned) +
              (brute >= 2.0 * pruned ? " (>= 2x)" : " (below 2x)")};
}

Outcome extender_validator() {
  const auto r = validate_extender(Extender::riesz(), 0.01, 64);
  const auto t = validate_extender(Extender::tietze(), 0.01, 64);
  const auto h = validate_extender(Extender::custom("half", [](double, double) { return 0.5; }), 0.01, 64);
  const bool ok = r.passed() && t.passed() && !h.passed() && !h.axiom_limits;
  return {ok, std::string("riesz ") + (r.passed() ? "pass" : "fail") + ", tietze " + (t.passed() ? "pass" : "fail") +
                  ", constant-1/2 " + (h.passed() ? "pass" : "fail") + fmt(" (diagonal residual %g)", h.diagonal_residual)};
}

}  // namespace

int main() {
  report(1, "Psi nonlinearity", 0.1, psi_nonlinearity);
  report(2, "Theta non-isometry", 0.1, theta_non_isometry);
  report(3, "Omega_T on constants", 1.0, omega_constants);
  report(4, "reciprocal identity", 1.0, reciprocal_identity);
  report(5, "isometry suites", 5.0, isometry_suites);
  report(6, "Theta 2-Lipschitz", 0.0, theta_two_lipschitz);
  report(7, "Bohr Lipschitz estimate", 0.0, bohr_lipschitz);
  report(8, "Pasch Lipschitz and identity", 0.0, pasch_lipschitz);
  report(9, "failure demos", 0.0, failure_demos);
  report(10, "oracle equivalence", 0.0, oracle_equivalence);
  report(11, "extender validator", 2.0, extender_validator);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
