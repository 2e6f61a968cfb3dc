#pragma once

#include <algorithm>
#include <vector>

namespace extendkit {

struct ModulusPoint {
  double delta;
  double omega;
};

// Empirical modulus of continuity: omega(delta) is the largest observed
// change over sampled pairs at distance <= delta. Rows are sorted by delta
// and omega is nondecreasing.
struct ModulusTable {
  std::vector<ModulusPoint> rows;
  std::size_t pairs = 0;
  // Largest |f(x) - f(p)| / d(x, p) over the sampled pairs.
  double lipschitz_estimate = 0.0;

  // Sorts rows by delta and applies a running max so omega is monotone.
  void normalize() {
    std::sort(rows.begin(), rows.end(),
              [](const ModulusPoint& a, const ModulusPoint& b) { return a.delta < b.delta; });
    double running = 0.0;
    for (auto& r : rows) {
      running = std::max(running, r.omega);
      r.omega = running;
    }
  }
};

}  // namespace extendkit
