#include "extendkit/extenders.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "extendkit/kernels.hpp"
#include "extendkit/point.hpp"

namespace extendkit {
namespace {

constexpr double kMinNormal = std::numeric_limits<double>::min();

void check_domain(double s, double t) {
  if (!(std::isfinite(s) && std::isfinite(t) && t > 0.0 && s >= t)) {
    throw InputError("weight argument outside s >= t > 0: s=" + std::to_string(s) +
                     " t=" + std::to_string(t));
  }
}

}  // namespace

Extender Extender::tietze() {
  Extender f;
  f.kind_ = ExtenderKind::tietze;
  f.name_ = "tietze";
  return f;
}

Extender Extender::riesz() {
  Extender f;
  f.kind_ = ExtenderKind::riesz;
  f.name_ = "riesz";
  return f;
}

Extender Extender::custom(std::string name, Rule rule) {
  Extender f;
  f.kind_ = ExtenderKind::custom;
  f.name_ = std::move(name);
  f.rule_ = std::move(rule);
  return f;
}

std::optional<Extender> Extender::by_name(std::string_view name) {
  if (name == "tietze") return tietze();
  if (name == "riesz") return riesz();
  return std::nullopt;
}

WeightValue Extender::weight(double s, double t) const {
  switch (kind_) {
    case ExtenderKind::riesz:
      return {kernels::riesz_weight(s, t)};
    case ExtenderKind::tietze: {
      // (1 + s^2)^(1/t) overflows long before its reciprocal stops being
      // representable, so stay in log space.
      const double v = std::exp(-std::log1p(s * s) / t);
      if (v < kMinNormal) return {kMinNormal, true};
      return {v};
    }
    case ExtenderKind::custom:
      return {rule_(s, t)};
  }
  return {0.0};
}

WeightValue Extender::evaluate(double s, double t) const {
  check_domain(s, t);
  return weight(s, t);
}

DualWeight DualWeight::dieudonne() { return DualWeight{}; }

DualWeight DualWeight::reciprocal_of(Extender f) {
  DualWeight g;
  g.kind_ = DualKind::reciprocal;
  g.base_ = std::move(f);
  return g;
}

std::optional<DualWeight> DualWeight::by_name(std::string_view name) {
  if (name == "dieudonne") return dieudonne();
  if (auto f = Extender::by_name(name)) return reciprocal_of(*f);
  return std::nullopt;
}

std::string DualWeight::name() const {
  if (kind_ == DualKind::dieudonne) return "dieudonne";
  return "reciprocal-" + base_->name();
}

double DualWeight::weight(double s, double t) const {
  if (kind_ == DualKind::dieudonne) return kernels::dieudonne_weight(s, t);
  return 1.0 / base_->weight(s, t).value;
}

double DualWeight::evaluate(double s, double t) const {
  check_domain(s, t);
  return weight(s, t);
}

ExtenderReport validate_extender(const Extender& f, double tau, int grid_n) {
  ExtenderReport r;
  r.extender = f.name();
  r.tau = tau;
  r.grid_n = grid_n;
  if (!(tau > 0.0 && tau < r.grid_upper) || grid_n < 16) {
    throw InputError("validate_extender needs 0 < tau < 1e4 and grid_n >= 16");
  }
  constexpr int kHalvings = 20;
  constexpr double kRoundingSlack = 4 * std::numeric_limits<double>::epsilon();

  // Limits along t -> 0.
  for (int k = 0; k <= kHalvings; ++k) {
    const double t = std::ldexp(tau, -k);
    r.diagonal_t.push_back(t);
    r.diagonal_values.push_back(f.weight(t, t).value);
  }
  r.diagonal_residual = std::fabs(1.0 - r.diagonal_values.back());
  r.diagonal_monotone = true;
  for (std::size_t k = 1; k < r.diagonal_values.size(); ++k) {
    if (std::fabs(1.0 - r.diagonal_values[k]) >
        std::fabs(1.0 - r.diagonal_values[k - 1]) + kRoundingSlack) {
      r.diagonal_monotone = false;
    }
  }
  bool vanishing_ok = true;
  for (double s : {tau, 1.0, 10.0}) {
    VanishingCheck v{s, {}, 0.0, true};
    for (double t : r.diagonal_t) {
      if (t <= s) v.values.push_back(f.weight(s, t).value);
    }
    v.residual = v.values.empty() ? 1.0 : v.values.back();
    for (std::size_t k = 1; k < v.values.size(); ++k) {
      if (v.values[k] > v.values[k - 1] * (1.0 + kRoundingSlack)) v.monotone = false;
    }
    vanishing_ok = vanishing_ok && v.monotone && std::fabs(v.residual) <= r.limit_tolerance;
    r.vanishing.push_back(std::move(v));
  }
  r.axiom_limits =
      r.diagonal_monotone && r.diagonal_residual <= r.limit_tolerance && vanishing_ok;

  // Log-spaced grid over [tau, grid_upper].
  std::vector<double> grid(static_cast<std::size_t>(grid_n));
  const double log_span = std::log(r.grid_upper / tau);
  for (int i = 0; i < grid_n; ++i) {
    grid[static_cast<std::size_t>(i)] = tau * std::exp(log_span * i / (grid_n - 1));
  }
  grid.back() = r.grid_upper;

  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double t = grid[j];
    double previous = 0.0;
    for (std::size_t i = j; i < grid.size(); ++i) {
      const WeightValue w = f.weight(grid[i], t);
      ++r.grid_points;
      if (w.clamped) ++r.clamped;
      if (!(w.value > 0.0 && w.value <= 1.0) || !std::isfinite(w.value)) ++r.range_violations;
      if (i > j && w.value > previous * (1.0 + kRoundingSlack)) ++r.monotonicity_violations;
      previous = w.value;
    }
  }
  r.axiom_monotone = r.monotonicity_violations == 0 && r.range_violations == 0;

  // Perturbations of each grid point by delta in s, t or both, kept inside
  // s >= t >= tau.
  for (double delta : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
    double omega = 0.0;
    double lipschitz = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
      for (std::size_t i = j; i < grid.size(); ++i) {
        const double s = grid[i];
        const double t = grid[j];
        const double base = f.weight(s, t).value;
        const double moves[][2] = {{delta, 0.0},    {0.0, delta},  {delta, delta},
                                   {-delta, 0.0},   {0.0, -delta}, {-delta, -delta}};
        for (const auto& m : moves) {
          const double s2 = s + m[0];
          const double t2 = t + m[1];
          if (!(s2 >= t2 && t2 >= tau)) continue;
          const double change = std::fabs(f.weight(s2, t2).value - base);
          omega = std::max(omega, change);
          lipschitz = std::max(lipschitz, change / delta);
          ++r.modulus.pairs;
        }
      }
    }
    r.modulus.rows.push_back({delta, omega});
    r.modulus.lipschitz_estimate = std::max(r.modulus.lipschitz_estimate, lipschitz);
  }
  // Rows were produced from coarse to fine; check the decay before the
  // monotone normalization.
  bool shrinking = true;
  for (std::size_t k = 1; k < r.modulus.rows.size(); ++k) {
    if (r.modulus.rows[k].omega > r.modulus.rows[k - 1].omega + kRoundingSlack) shrinking = false;
  }
  const double finest = r.modulus.rows.back().omega;
  r.modulus.normalize();
  r.axiom_continuity = shrinking && finest <= r.limit_tolerance;
  return r;
}

}  // namespace extendkit
