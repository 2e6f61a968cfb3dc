// Counterexample demos: each reproduces a known failure and pins the
// failing value to its closed form.

#include <cmath>
#include <filesystem>
#include <fstream>

#include "extendkit/io.hpp"
#include "extendkit/verify.hpp"

namespace extendkit {

namespace {

void dump(const std::string& out_dir, const std::string& file,
          const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
  if (out_dir.empty()) return;
  std::filesystem::create_directories(out_dir);
  std::ofstream out(std::filesystem::path(out_dir) / file);
  if (!out) throw InputError("cannot write " + file + " in " + out_dir);
  write_csv(out, header, rows);
}

std::vector<double> curve_grid() {
  std::vector<double> xs = linspace(0.0, 5.0, 101);
  xs.erase(xs.begin());
  return xs;
}

// Psi[2 phi](2) = -1.5 while 2 Psi[phi](2) = -1.
PropertyReport psi_nonlinear(const std::string& out_dir) {
  const auto set = line_sample(-1.0, 0.0, 1001);
  const auto phi = BoundedFunction::from(set, [](const Point& a) { return a[0]; });
  const auto phi2 = scale(phi, 2.0);
  const Point p = Point::scalar(2.0);
  const double v1 = hausdorff_eval(phi, p);
  const double v2 = hausdorff_eval(phi2, p);

  PropertyReport r;
  r.property = "homogeneity";
  r.subject = "hausdorff";
  r.expectation = Expectation::fails;
  r.samples = 1;
  r.tolerance = 1e-9;
  r.worst_violation = std::fabs(v2 - 2.0 * v1);
  r.closed_form_error = std::max(std::fabs(v1 - -0.5), std::fabs(v2 - -1.5));
  r.closed_form_tolerance = 1e-9;
  r.witness = {{"p", 2.0}, {"psi_phi", v1}, {"psi_2phi", v2}, {"expected", {-0.5, -1.5}}};

  std::vector<std::vector<double>> rows;
  for (double x : curve_grid()) {
    const Point q = Point::scalar(x);
    const double a = hausdorff_eval(phi, q);
    rows.push_back({x, a, hausdorff_eval(phi2, q), 2.0 * a});
  }
  dump(out_dir, "psi_nonlinear.csv", {"x", "psi_phi", "psi_2phi", "two_psi_phi"}, rows);
  return r;
}

// |Theta_R[phi](p) - Theta_R[psi](p)| = p / (p + 1) with ||phi - psi|| = 1/2.
PropertyReport theta_non_isometry(const std::string& out_dir) {
  const auto set = line_sample(-1.0, 1.0, 2001);
  const auto phi = BoundedFunction::from(set, [](const Point& a) { return (3.0 * a[0] + 1.0) / 4.0; });
  const auto psi = BoundedFunction::from(set, [](const Point& a) { return (3.0 * a[0] - 1.0) / 4.0; });
  const Extender riesz = Extender::riesz();
  const double norm = sup_distance(phi, psi);

  PropertyReport r;
  r.property = "isometry";
  r.subject = "theta/riesz";
  r.expectation = Expectation::fails;
  r.tolerance = 1e-9;
  r.closed_form_tolerance = 1e-9;
  r.worst_violation = -norm;
  double cf = 0.0;
  nlohmann::json at = nlohmann::json::array();
  for (double p : {3.0, 10.0, 100.0}) {
    const Point q = Point::scalar(p);
    const double dev = std::fabs(theta_eval(phi, riesz, q) - theta_eval(psi, riesz, q));
    r.worst_violation = std::max(r.worst_violation, dev - norm);
    cf = std::max(cf, std::fabs(dev - p / (p + 1.0)));
    at.push_back({{"p", p}, {"deviation", dev}, {"expected", p / (p + 1.0)}});
    ++r.samples;
  }
  r.closed_form_error = cf;
  r.witness = {{"norm", norm}, {"queries", at}};

  std::vector<std::vector<double>> rows;
  for (double x : linspace(1.05, 20.0, 380)) {
    const Point q = Point::scalar(x);
    const double a = theta_eval(phi, riesz, q);
    const double b = theta_eval(psi, riesz, q);
    rows.push_back({x, a, b, std::fabs(a - b), x / (x + 1.0)});
  }
  dump(out_dir, "theta_non_isometry.csv", {"x", "theta_phi", "theta_psi", "deviation", "closed_form"},
       rows);
  return r;
}

// Omega_R[-1_A] on A = [-M, 0]: the value at x is -x / (x + M), which tends
// to 0 rather than -1 as x -> 0.
PropertyReport omega_negative(const std::string& out_dir) {
  constexpr double M = 1000.0;
  const auto set = line_sample(-M, 0.0, 1000001, IndexPolicy::never);
  const auto phi = BoundedFunction::constant(set, -1.0);
  const Extender riesz = Extender::riesz();
  const auto value = [&](double x) {
    return evaluate_omega(phi, riesz, Point::scalar(x), Strategy::brute, SignPolicy::allow_signed)
        .value;
  };
  const double at1 = value(1.0);
  const double near0 = value(1e-3);

  PropertyReport r;
  r.property = "continuity-at-sample";
  r.subject = "omega/riesz";
  r.expectation = Expectation::fails;
  r.samples = 2;
  r.tolerance = 1e-9;
  r.worst_violation = std::fabs(near0 - phi[set->nearest(Point::scalar(0.0)).id]);
  r.closed_form_error = std::fabs(at1 - -1.0 / (1.0 + M));
  r.closed_form_tolerance = 1e-9;
  r.witness = {{"M", M}, {"value_at_1", at1}, {"expected_at_1", -1.0 / (1.0 + M)},
               {"value_at_0.001", near0}, {"phi_at_0", -1.0}};

  std::vector<std::vector<double>> rows;
  for (double x : curve_grid()) rows.push_back({x, value(x), -x / (x + M)});
  dump(out_dir, "omega_negative.csv", {"x", "omega", "closed_form"}, rows);
  return r;
}

// Mho_D[1 + a] on A = [-1, 0] vanishes off A because phi(-1) = 0, while
// phi(0) = 1.
PropertyReport mho_zero(const std::string& out_dir) {
  const auto set = line_sample(-1.0, 0.0, 1001);
  const auto phi = BoundedFunction::from(set, [](const Point& a) { return 1.0 + a[0]; });
  const DualWeight d = DualWeight::dieudonne();
  const double at_half = mho_eval(phi, d, Point::scalar(0.5));
  const double near0 = mho_eval(phi, d, Point::scalar(1e-6));

  PropertyReport r;
  r.property = "continuity-at-sample";
  r.subject = "mho/dieudonne";
  r.expectation = Expectation::fails;
  r.samples = 2;
  r.tolerance = 1e-9;
  r.worst_violation = std::fabs(near0 - phi[set->nearest(Point::scalar(0.0)).id]);
  r.closed_form_error = std::fabs(at_half);
  r.closed_form_tolerance = 0.0;
  r.witness = {{"value_at_0.5", at_half}, {"value_at_1e-6", near0}, {"phi_at_0", 1.0}};

  std::vector<std::vector<double>> rows;
  for (double x : curve_grid()) rows.push_back({x, mho_eval(phi, d, Point::scalar(x))});
  dump(out_dir, "mho_zero.csv", {"x", "mho"}, rows);
  return r;
}

}  // namespace

std::vector<PropertyReport> remark_suite(const std::string& out_dir) {
  return {psi_nonlinear(out_dir), theta_non_isometry(out_dir), omega_negative(out_dir),
          mho_zero(out_dir)};
}

}  // namespace extendkit
