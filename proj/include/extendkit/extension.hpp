#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "extendkit/operators.hpp"

namespace extendkit {

enum class OperatorKind { hausdorff, omega, mho, theta, bohr, pasch };

const char* to_string(OperatorKind kind);
std::optional<OperatorKind> operator_by_name(std::string_view name);

struct OperatorSpec {
  OperatorKind kind = OperatorKind::hausdorff;
  std::optional<Extender> extender;  // omega, theta
  std::optional<DualWeight> dual;    // mho
  // pasch only: unset selects phi(a) * d(p, A) + d(a, p); set selects the
  // inf-convolution phi(a) + kappa * d(a, p).
  std::optional<double> kappa;
  Strategy strategy = Strategy::pruned;
};

// A function on A bound to an operator; answers queries at any point.
// Immutable and safe to evaluate concurrently.
class Extension {
 public:
  // Throws InputError for invalid operator/weight combinations and for
  // negative functions under omega or mho.
  Extension(BoundedFunction phi, OperatorSpec spec);

  const BoundedFunction& phi() const { return phi_; }
  const OperatorSpec& spec() const { return spec_; }
  // False for the Pasch forms, which do not reproduce phi on A.
  bool is_extension() const { return spec_.kind != OperatorKind::pasch; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  EvalResult evaluate(const Point& p) const;
  double operator()(const Point& p) const { return evaluate(p).value; }
  // Results in query order; `threads` = 0 uses the thread budget.
  std::vector<double> evaluate_many(std::span<const Point> queries, unsigned threads = 0) const;

  Extension with_function(BoundedFunction phi) const { return Extension(std::move(phi), spec_); }
  Extension with_strategy(Strategy s) const;

 private:
  BoundedFunction phi_;
  OperatorSpec spec_;
  std::optional<BoundedFunction> pos_;
  std::optional<BoundedFunction> neg_;
  std::vector<std::string> warnings_;
};

}  // namespace extendkit
