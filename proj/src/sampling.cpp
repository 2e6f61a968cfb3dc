#include "extendkit/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace extendkit {

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  std::vector<double> v(count);
  if (count == 0) return v;
  if (count == 1) {
    v[0] = lo;
    return v;
  }
  const double steps = static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) v[i] = lo + (hi - lo) * (static_cast<double>(i) / steps);
  v.front() = lo;
  v.back() = hi;
  return v;
}

std::shared_ptr<const PointCloudSet> line_sample(double lo, double hi, std::size_t count,
                                                 IndexPolicy policy) {
  std::vector<Point> pts;
  pts.reserve(count);
  for (double x : linspace(lo, hi, count)) pts.push_back(Point::scalar(x));
  return PointCloudSet::create(std::move(pts), MetricOracle::real_line(), policy);
}

Point random_point(Rng& rng, const Box& box) {
  std::vector<double> c(box.dimension());
  for (std::size_t k = 0; k < c.size(); ++k) {
    c[k] = std::uniform_real_distribution<double>(box.lo[k], box.hi[k])(rng);
  }
  return Point(std::move(c));
}

std::vector<Point> random_points(Rng& rng, const Box& box, std::size_t count) {
  std::vector<Point> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) pts.push_back(random_point(rng, box));
  return pts;
}

Point random_offset(Rng& rng, const Point& center, double radius) {
  const std::size_t dim = center.dimension();
  std::normal_distribution<double> gauss;
  std::vector<double> dir(dim);
  double norm = 0.0;
  do {
    norm = 0.0;
    for (double& c : dir) {
      c = gauss(rng);
      norm += c * c;
    }
  } while (norm == 0.0);
  norm = std::sqrt(norm);
  const double r = radius * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  std::vector<double> c(dim);
  for (std::size_t k = 0; k < dim; ++k) c[k] = center[k] + r * dir[k] / norm;
  return Point(std::move(c));
}

namespace {

MetricOracle metric_for(std::size_t dim) {
  return dim == 1 ? MetricOracle::real_line() : MetricOracle::euclidean();
}

}  // namespace

std::shared_ptr<const PointCloudSet> random_cloud(Rng& rng, std::size_t count, std::size_t dim,
                                                  IndexPolicy policy) {
  const Box unit{std::vector<double>(dim, 0.0), std::vector<double>(dim, 1.0)};
  return PointCloudSet::create(random_points(rng, unit, count), metric_for(dim), policy);
}

std::shared_ptr<const PointCloudSet> clustered_cloud(Rng& rng, std::size_t count,
                                                     std::size_t dim, std::size_t clusters,
                                                     double spread, IndexPolicy policy) {
  const Box unit{std::vector<double>(dim, 0.0), std::vector<double>(dim, 1.0)};
  const std::vector<Point> centres = random_points(rng, unit, clusters);
  std::normal_distribution<double> gauss(0.0, spread);
  std::uniform_int_distribution<std::size_t> pick(0, clusters - 1);
  std::vector<Point> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Point& c = centres[pick(rng)];
    std::vector<double> x(dim);
    for (std::size_t k = 0; k < dim; ++k) x[k] = c[k] + gauss(rng);
    pts.emplace_back(std::move(x));
  }
  return PointCloudSet::create(std::move(pts), metric_for(dim), policy);
}

Box bounding_box(const PointCloudSet& set, double margin) {
  Box box{std::vector<double>(set.dimension()), std::vector<double>(set.dimension())};
  for (std::size_t k = 0; k < set.dimension(); ++k) {
    const auto col = set.column(k);
    const auto [lo, hi] = std::minmax_element(col.begin(), col.end());
    box.lo[k] = *lo - margin;
    box.hi[k] = *hi + margin;
  }
  return box;
}

std::function<double(const Point&)> random_piecewise_linear(Rng& rng, std::size_t dim) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::uniform_int_distribution<int> hinge_count(2, 6);
  struct Hinge {
    std::vector<double> w;
    double b;
    double c;
  };
  std::vector<double> affine(dim);
  for (double& a : affine) a = coef(rng);
  std::vector<Hinge> hinges(static_cast<std::size_t>(hinge_count(rng)));
  for (auto& h : hinges) {
    h.w.resize(dim);
    for (double& w : h.w) w = coef(rng);
    h.b = coef(rng);
    h.c = 2.0 * coef(rng);
  }
  return [affine, hinges](const Point& p) {
    double v = 0.0;
    for (std::size_t k = 0; k < affine.size(); ++k) v += affine[k] * p[k];
    for (const auto& h : hinges) {
      double z = -h.b;
      for (std::size_t k = 0; k < h.w.size(); ++k) z += h.w[k] * p[k];
      v += h.c * std::max(0.0, z);
    }
    return v;
  };
}

BoundedFunction random_function(Rng& rng, std::shared_ptr<const PointCloudSet> set, double lo,
                                double hi) {
  const auto f = random_piecewise_linear(rng, set->dimension());
  std::vector<double> v(set->size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(set->point(i));
  const auto [mn, mx] = std::minmax_element(v.begin(), v.end());
  const double vmin = *mn;
  const double span = *mx - vmin;
  for (double& x : v) {
    const double u = span > 0.0 ? (x - vmin) / span : 0.5;
    x = std::clamp(lo + (hi - lo) * u, std::min(lo, hi), std::max(lo, hi));
  }
  return BoundedFunction(std::move(set), std::move(v));
}

}  // namespace extendkit
