#include "extendkit/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "extendkit/kernels.hpp"

namespace extendkit {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Margin on the stopping test of sup scans whose weight goes through
// transcendental functions, which are monotone only up to rounding.
constexpr double kBoundSlack = 1e-12;

std::vector<double>& distance_buffer(std::size_t n) {
  thread_local std::vector<double> buffer;
  buffer.resize(n);
  return buffer;
}

// Distances from p to every sample point, plus rho and the nearest id.
struct LinearScan {
  std::vector<double>* dist;
  double rho;
  std::size_t nearest;
};

LinearScan linear_scan(const PointCloudSet& set, const Point& p) {
  auto& d = distance_buffer(set.size());
  set.distances(p, d);
  const auto best = kernels::active().argmin(d.data(), d.size());
  return {&d, best.value, best.index};
}

std::optional<EvalResult> membership(const BoundedFunction& phi, const Point& p, double rho,
                                     std::size_t nearest) {
  if (rho >= kMembershipRadius) return std::nullopt;
  EvalResult r;
  r.value = phi[nearest];
  r.branch = phi.set().coincides(nearest, p) ? Branch::exact_member : Branch::near_member;
  r.rho = rho;
  r.nearest = nearest;
  return r;
}

EvalResult exterior(double value, double rho, std::size_t nearest, std::size_t scanned,
                    std::size_t clamped = 0) {
  return {value, Branch::exterior, rho, nearest, scanned, clamped};
}

// Branch and bound over the set's index for min_a term(phi(a), d(a, p)),
// starting from the term at the nearest point. A subtree is skipped when
// term(min phi below it, box distance) cannot improve on the best so far;
// term is nondecreasing in both arguments, and correctly rounded arithmetic
// keeps it so, which makes the result equal to the full scan.
template <class Term>
double tree_min(const BoundedFunction& phi, const Point& p, const NearestResult& near,
                Term term, std::size_t& scanned) {
  const auto& bounds = phi.node_bounds();
  const double* values = phi.values().data();
  double best = term(values[near.id], near.rho);
  phi.set().index()->search(
      p.coords(), [&](std::size_t node, double d) { return term(bounds.lo[node], d) >= best; },
      [&](std::size_t id, double d) {
        best = std::fmin(best, term(values[id], d));
        ++scanned;
      });
  return best;
}

void require_nonnegative(const BoundedFunction& phi, const char* op) {
  if (phi.min() < 0.0) {
    throw InputError(std::string(op) +
                     " requires a nonnegative function (min is " + std::to_string(phi.min()) +
                     "); the weighted sup/inf construction does not extend negative values "
                     "continuously");
  }
}

}  // namespace

const char* to_string(Strategy s) { return s == Strategy::brute ? "brute" : "pruned"; }

const char* to_string(Branch b) {
  switch (b) {
    case Branch::exact_member: return "exact-member";
    case Branch::near_member: return "near-member";
    case Branch::exterior: return "exterior";
  }
  return "unknown";
}

EvalResult evaluate_hausdorff(const BoundedFunction& phi, const Point& p, Strategy strategy) {
  const PointCloudSet& set = phi.set();
  const double* values = phi.values().data();
  if (strategy == Strategy::brute || !set.has_index()) {
    const LinearScan scan = linear_scan(set, p);
    if (auto m = membership(phi, p, scan.rho, scan.nearest)) return *m;
    const double v =
        kernels::active().hausdorff_min(values, scan.dist->data(), set.size(), scan.rho);
    return exterior(v, scan.rho, scan.nearest, set.size());
  }
  const NearestResult near = set.nearest(p);
  if (auto m = membership(phi, p, near.rho, near.id)) return *m;
  const double rho = near.rho;
  std::size_t scanned = 0;
  const double v = tree_min(
      phi, p, near, [rho](double v, double d) { return kernels::hausdorff_term(v, d, rho); },
      scanned);
  return exterior(v, rho, near.id, scanned);
}

EvalResult evaluate_omega(const BoundedFunction& phi, const Extender& f, const Point& p,
                          Strategy strategy, SignPolicy sign) {
  if (sign == SignPolicy::require_nonnegative) {
    require_nonnegative(phi, "omega");
  } else if (phi.min() < 0.0) {
    strategy = Strategy::brute;  // the pruning bound assumes phi >= 0
  }
  if (!f.monotone_in_s()) strategy = Strategy::brute;

  const PointCloudSet& set = phi.set();
  const double* values = phi.values().data();
  if (strategy == Strategy::brute || !set.has_index()) {
    const LinearScan scan = linear_scan(set, p);
    if (auto m = membership(phi, p, scan.rho, scan.nearest)) return *m;
    const double* d = scan.dist->data();
    if (f.kind() == ExtenderKind::riesz) {
      const double v = kernels::active().riesz_max(values, d, set.size(), scan.rho);
      return exterior(v, scan.rho, scan.nearest, set.size());
    }
    double best = -kInf;
    std::size_t clamped = 0;
    for (std::size_t i = 0; i < set.size(); ++i) {
      const WeightValue w = f.weight(d[i], scan.rho);
      clamped += w.clamped;
      best = std::fmax(best, values[i] * w.value);
    }
    return exterior(best, scan.rho, scan.nearest, set.size(), clamped);
  }

  const NearestResult near = set.nearest(p);
  if (auto m = membership(phi, p, near.rho, near.id)) return *m;
  const double rho = near.rho;
  const auto& bounds = phi.node_bounds();
  double best = values[near.id] * f.weight(rho, rho).value;
  std::size_t scanned = 0;
  std::size_t clamped = 0;
  // F is nonincreasing in s, so max phi below a node times F at the box
  // distance bounds every term inside it.
  set.index()->search(
      p.coords(),
      [&](std::size_t node, double d) {
        return bounds.hi[node] * f.weight(std::max(d, rho), rho).value * (1.0 + kBoundSlack) <=
               best;
      },
      [&](std::size_t id, double d) {
        const WeightValue w = f.weight(d, rho);
        clamped += w.clamped;
        best = std::fmax(best, values[id] * w.value);
        ++scanned;
      });
  return exterior(best, rho, near.id, scanned, clamped);
}

EvalResult evaluate_mho(const BoundedFunction& phi, const DualWeight& g, const Point& p,
                        Strategy strategy) {
  require_nonnegative(phi, "mho");
  if (!g.increasing_in_s()) strategy = Strategy::brute;
  const PointCloudSet& set = phi.set();
  const double* values = phi.values().data();
  if (strategy == Strategy::brute || !set.has_index()) {
    const LinearScan scan = linear_scan(set, p);
    if (auto m = membership(phi, p, scan.rho, scan.nearest)) return *m;
    const double* d = scan.dist->data();
    if (g.kind() == DualKind::dieudonne) {
      const double v = kernels::active().dieudonne_min(values, d, set.size(), scan.rho);
      return exterior(v, scan.rho, scan.nearest, set.size());
    }
    double best = kInf;
    for (std::size_t i = 0; i < set.size(); ++i) {
      best = std::fmin(best, values[i] * g.weight(d[i], scan.rho));
    }
    return exterior(best, scan.rho, scan.nearest, set.size());
  }

  const NearestResult near = set.nearest(p);
  if (auto m = membership(phi, p, near.rho, near.id)) return *m;
  const double rho = near.rho;
  std::size_t scanned = 0;
  const double v = tree_min(
      phi, p, near,
      [rho](double v, double d) { return v * kernels::dieudonne_weight(std::max(d, rho), rho); },
      scanned);
  return exterior(v, rho, near.id, scanned);
}

EvalResult evaluate_theta_parts(const BoundedFunction& pos, const BoundedFunction& neg,
                                const Extender& f, const Point& p, Strategy strategy) {
  const EvalResult up = evaluate_omega(pos, f, p, strategy);
  const EvalResult down = evaluate_omega(neg, f, p, strategy);
  EvalResult r = up;
  r.value = up.value - down.value;
  r.scanned = up.scanned + down.scanned;
  r.clamped = up.clamped + down.clamped;
  return r;
}

EvalResult evaluate_theta(const BoundedFunction& phi, const Extender& f, const Point& p,
                          Strategy strategy) {
  return evaluate_theta_parts(pos_part(phi), neg_part(phi), f, p, strategy);
}

EvalResult evaluate_pasch(const BoundedFunction& phi, const Point& p, Strategy strategy) {
  require_nonnegative(phi, "pasch");
  const PointCloudSet& set = phi.set();
  const double* values = phi.values().data();
  EvalResult r;
  if (strategy == Strategy::brute || !set.has_index()) {
    const LinearScan scan = linear_scan(set, p);
    r.value = kernels::active().pasch_min(values, scan.dist->data(), set.size(), scan.rho);
    r.rho = scan.rho;
    r.nearest = scan.nearest;
    r.scanned = set.size();
  } else {
    const NearestResult near = set.nearest(p);
    r.rho = near.rho;
    r.nearest = near.id;
    const double rho = near.rho;
    r.value = tree_min(
        phi, p, near, [rho](double v, double d) { return kernels::pasch_term(v, d, rho); },
        r.scanned);
  }
  if (r.rho < kMembershipRadius) {
    r.branch = set.coincides(r.nearest, p) ? Branch::exact_member : Branch::near_member;
  }
  return r;
}

EvalResult evaluate_inf_convolution(const BoundedFunction& phi, double kappa, const Point& p,
                                    Strategy strategy) {
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) {
    throw InputError("inf-convolution slope kappa must be finite and >= 0");
  }
  const PointCloudSet& set = phi.set();
  const double* values = phi.values().data();
  EvalResult r;
  if (strategy == Strategy::brute || !set.has_index()) {
    const LinearScan scan = linear_scan(set, p);
    r.value =
        kernels::active().inf_convolution_min(values, scan.dist->data(), set.size(), kappa);
    r.rho = scan.rho;
    r.nearest = scan.nearest;
    r.scanned = set.size();
  } else {
    const NearestResult near = set.nearest(p);
    r.rho = near.rho;
    r.nearest = near.id;
    r.value = tree_min(
        phi, p, near,
        [kappa](double v, double d) { return kernels::inf_convolution_term(v, d, kappa); },
        r.scanned);
  }
  if (r.rho < kMembershipRadius) {
    r.branch = set.coincides(r.nearest, p) ? Branch::exact_member : Branch::near_member;
  }
  return r;
}

}  // namespace extendkit
