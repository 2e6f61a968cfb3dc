#pragma once

// Weight functions on the cone {(s, t) : s >= t > 0}, where s plays the role
// of d(a, p) and t that of d(p, A).
//
// An Extender F takes values in (0, 1], tends to 1 along the diagonal and to
// 0 at fixed s as t -> 0, is nonincreasing in s, and is uniformly continuous
// on every region s >= t >= tau. A DualWeight G takes values in [1, inf).

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "extendkit/modulus.hpp"

namespace extendkit {

enum class ExtenderKind { tietze, riesz, custom };

struct WeightValue {
  double value;
  // The exact value underflowed and was raised to the smallest positive
  // normal double.
  bool clamped = false;
};

class Extender {
 public:
  using Rule = std::function<double(double s, double t)>;

  // (1 + s^2)^(-1/t), evaluated as exp(-log1p(s^2) / t).
  static Extender tietze();
  // t / s; equals 1 on the diagonal.
  static Extender riesz();
  // User weight. Never used for pruned scans since its monotonicity is not
  // known analytically.
  static Extender custom(std::string name, Rule rule);
  static std::optional<Extender> by_name(std::string_view name);

  ExtenderKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  bool monotone_in_s() const { return kind_ != ExtenderKind::custom; }

  // Throws InputError outside s >= t > 0.
  WeightValue evaluate(double s, double t) const;
  // Unchecked; for scans where s = d(a, p) >= d(p, A) = t > 0 by construction.
  WeightValue weight(double s, double t) const;

 private:
  ExtenderKind kind_ = ExtenderKind::riesz;
  std::string name_;
  Rule rule_;
};

inline double eval_extender(const Extender& f, double s, double t) {
  return f.evaluate(s, t).value;
}

enum class DualKind { dieudonne, reciprocal };

class DualWeight {
 public:
  // s / t.
  static DualWeight dieudonne();
  // 1 / F(s, t).
  static DualWeight reciprocal_of(Extender f);
  // "dieudonne", or an extender name meaning its reciprocal.
  static std::optional<DualWeight> by_name(std::string_view name);

  DualKind kind() const { return kind_; }
  std::string name() const;
  const Extender* base() const { return base_ ? &*base_ : nullptr; }
  // Only the Dieudonne weight is used for pruned scans.
  bool increasing_in_s() const { return kind_ == DualKind::dieudonne; }

  double evaluate(double s, double t) const;
  double weight(double s, double t) const;

 private:
  DualKind kind_ = DualKind::dieudonne;
  std::optional<Extender> base_;
};

inline double eval_dual(const DualWeight& g, double s, double t) { return g.evaluate(s, t); }

struct VanishingCheck {
  double s;
  std::vector<double> values;  // F(s, t_k) along the halving sequence
  double residual;             // F(s, t_min)
  bool monotone;
};

struct ExtenderReport {
  std::string extender;
  double tau = 0.0;
  int grid_n = 0;
  double grid_upper = 1e4;
  double limit_tolerance = 1e-3;

  // Limits as t -> 0, sampled at t_k = tau * 2^-k, k = 0..20.
  std::vector<double> diagonal_t;
  std::vector<double> diagonal_values;
  double diagonal_residual = 0.0;  // |1 - F(t_min, t_min)|
  bool diagonal_monotone = false;
  std::vector<VanishingCheck> vanishing;
  bool axiom_limits = false;

  // Monotonicity in s and range (0, 1] on a log-spaced grid over
  // [tau, grid_upper]^2 restricted to s >= t.
  std::size_t grid_points = 0;
  std::size_t monotonicity_violations = 0;
  std::size_t range_violations = 0;
  std::size_t clamped = 0;
  bool axiom_monotone = false;

  // Empirical modulus on s >= t >= tau.
  ModulusTable modulus;
  bool axiom_continuity = false;

  bool passed() const { return axiom_limits && axiom_monotone && axiom_continuity; }
};

// Sampled check of the three extender properties. Failures are reported,
// never thrown. Requires tau > 0, tau < grid_upper and grid_n >= 16.
ExtenderReport validate_extender(const Extender& f, double tau, int grid_n);

}  // namespace extendkit
