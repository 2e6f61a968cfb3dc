#include <algorithm>
#include <numeric>
#include <string>

#include "extendkit/kernels.hpp"
#include "extendkit/operators.hpp"

namespace extendkit {

double EtaStep::operator()(double t) const {
  if (t <= rho) return floor;
  // Last breakpoint strictly below t.
  const auto it = std::lower_bound(breakpoints.begin(), breakpoints.end(), t);
  const auto i = static_cast<std::size_t>(it - breakpoints.begin());
  return plateaus[i - 1];
}

// Runs of equal plateau values are merged before weighting, so a constant
// function integrates to exactly its value: c * ((2 rho - rho) / rho) = c.
double eta_window_average(std::span<const double> breakpoints, std::span<const double> plateaus,
                          double rho) {
  const double end = 2.0 * rho;
  double sum = 0.0;
  double run_value = plateaus[0];
  double run_start = rho;
  for (std::size_t i = 1; i < breakpoints.size() && breakpoints[i] < end; ++i) {
    if (plateaus[i] == run_value) continue;
    sum += run_value * ((breakpoints[i] - run_start) / rho);
    run_value = plateaus[i];
    run_start = breakpoints[i];
  }
  sum += run_value * ((end - run_start) / rho);
  return sum;
}

namespace {

EtaStep build_eta(const BoundedFunction& phi, std::span<const double> dist) {
  const std::size_t n = dist.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return dist[a] < dist[b] || (dist[a] == dist[b] && a < b);
  });
  EtaStep eta;
  eta.rho = dist[order[0]];
  eta.floor = phi.min();
  eta.breakpoints.reserve(n);
  eta.plateaus.reserve(n);
  eta.ids = order;
  double running = phi[order[0]];
  for (std::size_t id : order) {
    running = std::max(running, phi[id]);
    eta.breakpoints.push_back(dist[id]);
    eta.plateaus.push_back(running);
  }
  return eta;
}

}  // namespace

EtaStep bohr_eta(const BoundedFunction& phi, const Point& x) {
  const PointCloudSet& set = phi.set();
  std::vector<double> dist(set.size());
  set.distances(x, dist);
  EtaStep eta = build_eta(phi, dist);
  if (eta.rho < kMembershipRadius) {
    throw InputError("bohr_eta needs a point outside the sample (rho = " +
                     std::to_string(eta.rho) + ")");
  }
  return eta;
}

EvalResult evaluate_bohr(const BoundedFunction& phi, const Point& p, Strategy strategy) {
  const PointCloudSet& set = phi.set();
  EvalResult r;
  if (strategy == Strategy::brute || !set.has_index()) {
    std::vector<double> dist(set.size());
    set.distances(p, dist);
    const EtaStep eta = build_eta(phi, dist);
    r.rho = eta.rho;
    r.nearest = eta.ids[0];
    if (r.rho < kMembershipRadius) {
      r.value = phi[r.nearest];
      r.branch = set.coincides(r.nearest, p) ? Branch::exact_member : Branch::near_member;
      return r;
    }
    r.value = eta_window_average(eta.breakpoints, eta.plateaus, eta.rho);
    r.scanned = set.size();
    return r;
  }

  const NearestResult near = set.nearest(p);
  r.rho = near.rho;
  r.nearest = near.id;
  if (r.rho < kMembershipRadius) {
    r.value = phi[r.nearest];
    r.branch = set.coincides(r.nearest, p) ? Branch::exact_member : Branch::near_member;
    return r;
  }
  // Only points closer than 2 rho shape the step function on the window.
  const double end = 2.0 * r.rho;
  std::vector<Neighbor> close;
  set.index()->search(
      p.coords(), [&](std::size_t, double d) { return d >= end; },
      [&](std::size_t id, double d) {
        if (d < end) close.push_back({d, id});
      });
  std::sort(close.begin(), close.end(), [](const Neighbor& a, const Neighbor& b) {
    return a.dist < b.dist || (a.dist == b.dist && a.id < b.id);
  });
  std::vector<double> breakpoints;
  std::vector<double> plateaus;
  double running = phi[close.front().id];
  for (const Neighbor& n : close) {
    running = std::max(running, phi[n.id]);
    breakpoints.push_back(n.dist);
    plateaus.push_back(running);
  }
  r.scanned = close.size();
  r.value = eta_window_average(breakpoints, plateaus, r.rho);
  return r;
}

}  // namespace extendkit
