#pragma once

// Reference implementations used only by the tests. They work on plain
// coordinate vectors with long double arithmetic and share no code with the
// library's scans, so agreement is evidence rather than tautology.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "extendkit/bounded_function.hpp"

namespace oracle {

using Coords = std::vector<long double>;

struct Data {
  std::vector<Coords> pts;
  std::vector<long double> phi;
};

inline Coords coords(const extendkit::Point& p) {
  return Coords(p.coords().begin(), p.coords().end());
}

inline Data data(const extendkit::BoundedFunction& f) {
  Data d;
  for (std::size_t i = 0; i < f.size(); ++i) {
    d.pts.push_back(coords(f.set().point(i)));
    d.phi.push_back(f[i]);
  }
  return d;
}

inline long double dist(const Coords& a, const Coords& b) {
  long double s = 0.0L;
  for (std::size_t k = 0; k < a.size(); ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
  return std::sqrt(s);
}

inline std::vector<long double> dists(const Data& d, const Coords& p) {
  std::vector<long double> out;
  for (const auto& a : d.pts) out.push_back(dist(a, p));
  return out;
}

inline long double rho(const Data& d, const Coords& p) {
  const auto ds = dists(d, p);
  return *std::min_element(ds.begin(), ds.end());
}

inline long double hausdorff(const Data& d, const Coords& p) {
  const auto ds = dists(d, p);
  const long double r = *std::min_element(ds.begin(), ds.end());
  long double best = std::numeric_limits<long double>::infinity();
  for (std::size_t i = 0; i < ds.size(); ++i) best = std::min(best, d.phi[i] + ds[i] / r - 1.0L);
  return best;
}

using Weight = std::function<long double(long double s, long double t)>;

inline long double tietze(long double s, long double t) { return std::pow(1.0L + s * s, -1.0L / t); }
inline long double riesz(long double s, long double t) { return t / s; }
inline long double dieudonne(long double s, long double t) { return s / t; }

inline long double omega(const Data& d, const Weight& f, const Coords& p) {
  const auto ds = dists(d, p);
  const long double r = *std::min_element(ds.begin(), ds.end());
  long double best = -std::numeric_limits<long double>::infinity();
  for (std::size_t i = 0; i < ds.size(); ++i) best = std::max(best, d.phi[i] * f(ds[i], r));
  return best;
}

inline long double mho(const Data& d, const Weight& g, const Coords& p) {
  const auto ds = dists(d, p);
  const long double r = *std::min_element(ds.begin(), ds.end());
  long double best = std::numeric_limits<long double>::infinity();
  for (std::size_t i = 0; i < ds.size(); ++i) best = std::min(best, d.phi[i] * g(ds[i], r));
  return best;
}

inline long double theta(const Data& d, const Weight& f, const Coords& p) {
  Data pos = d;
  Data neg = d;
  for (std::size_t i = 0; i < d.phi.size(); ++i) {
    pos.phi[i] = std::max(d.phi[i], 0.0L);
    neg.phi[i] = std::max(-d.phi[i], 0.0L);
  }
  return omega(pos, f, p) - omega(neg, f, p);
}

// eta(t) = max of phi over points strictly closer than t, integrated over
// [rho, 2 rho] segment by segment, sampling eta at each segment midpoint.
inline long double bohr(const Data& d, const Coords& p) {
  const auto ds = dists(d, p);
  const long double r = *std::min_element(ds.begin(), ds.end());
  std::vector<long double> cuts = {r, 2.0L * r};
  for (long double x : ds) {
    if (x > r && x < 2.0L * r) cuts.push_back(x);
  }
  std::sort(cuts.begin(), cuts.end());
  long double total = 0.0L;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const long double mid = (cuts[k] + cuts[k + 1]) / 2.0L;
    long double eta = -std::numeric_limits<long double>::infinity();
    for (std::size_t i = 0; i < ds.size(); ++i) {
      if (ds[i] < mid) eta = std::max(eta, d.phi[i]);
    }
    total += eta * (cuts[k + 1] - cuts[k]);
  }
  return total / r;
}

inline long double pasch(const Data& d, const Coords& p) {
  const auto ds = dists(d, p);
  const long double r = *std::min_element(ds.begin(), ds.end());
  long double best = std::numeric_limits<long double>::infinity();
  for (std::size_t i = 0; i < ds.size(); ++i) best = std::min(best, d.phi[i] * r + ds[i]);
  return best;
}

inline long double inf_convolution(const Data& d, long double kappa, const Coords& p) {
  const auto ds = dists(d, p);
  long double best = std::numeric_limits<long double>::infinity();
  for (std::size_t i = 0; i < ds.size(); ++i) best = std::min(best, d.phi[i] + kappa * ds[i]);
  return best;
}

inline double rel_error(long double got, long double want) {
  return static_cast<double>(std::fabs(got - want) / std::max(1.0L, std::fabs(want)));
}

}  // namespace oracle
