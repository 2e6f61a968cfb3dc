#include "extendkit/bounded_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace extendkit {

BoundedFunction::BoundedFunction(std::shared_ptr<const PointCloudSet> set, std::vector<double> values)
    : set_(std::move(set)), values_(std::move(values)) {
  if (!set_) throw InputError("function needs a point set");
  if (values_.size() != set_->size()) {
    throw InputError("function has " + std::to_string(values_.size()) + " values for " +
                     std::to_string(set_->size()) + " points");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw InputError("function values must be finite");
  }
  const auto [lo, hi] = std::minmax_element(values_.begin(), values_.end());
  min_ = *lo;
  max_ = *hi;
}

const KdTree::ValueBounds& BoundedFunction::node_bounds() const {
  std::call_once(bounds_->once, [&] { bounds_->bounds = set_->index()->value_bounds(values_); });
  return bounds_->bounds;
}

BoundedFunction BoundedFunction::constant(std::shared_ptr<const PointCloudSet> set, double c) {
  const std::size_t n = set ? set->size() : 0;
  return BoundedFunction(std::move(set), std::vector<double>(n, c));
}

BoundedFunction BoundedFunction::from(std::shared_ptr<const PointCloudSet> set,
                                      const std::function<double(const Point&)>& f) {
  std::vector<double> v(set->size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(set->point(i));
  return BoundedFunction(std::move(set), std::move(v));
}

namespace {

void require_same_set(const BoundedFunction& phi, const BoundedFunction& psi) {
  if (phi.set_ptr() != psi.set_ptr()) {
    throw InputError("functions are attached to different point sets");
  }
}

template <class Op>
BoundedFunction pointwise(const BoundedFunction& phi, Op op) {
  std::vector<double> out(phi.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(phi[i]);
  return BoundedFunction(phi.set_ptr(), std::move(out));
}

template <class Op>
BoundedFunction pointwise(const BoundedFunction& phi, const BoundedFunction& psi, Op op) {
  require_same_set(phi, psi);
  std::vector<double> out(phi.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(phi[i], psi[i]);
  return BoundedFunction(phi.set_ptr(), std::move(out));
}

}  // namespace

double sup_distance(const BoundedFunction& phi, const BoundedFunction& psi) {
  require_same_set(phi, psi);
  double worst = 0.0;
  for (std::size_t i = 0; i < phi.size(); ++i) worst = std::max(worst, std::fabs(phi[i] - psi[i]));
  return worst;
}

BoundedFunction operator+(const BoundedFunction& phi, const BoundedFunction& psi) {
  return pointwise(phi, psi, [](double a, double b) { return a + b; });
}

BoundedFunction operator-(const BoundedFunction& phi, const BoundedFunction& psi) {
  return pointwise(phi, psi, [](double a, double b) { return a - b; });
}

BoundedFunction scale(const BoundedFunction& phi, double lambda) {
  return pointwise(phi, [lambda](double a) { return lambda * a; });
}

BoundedFunction shift(const BoundedFunction& phi, double mu) {
  return pointwise(phi, [mu](double a) { return a + mu; });
}

BoundedFunction join(const BoundedFunction& phi, const BoundedFunction& psi) {
  return pointwise(phi, psi, [](double a, double b) { return std::max(a, b); });
}

BoundedFunction meet(const BoundedFunction& phi, const BoundedFunction& psi) {
  return pointwise(phi, psi, [](double a, double b) { return std::min(a, b); });
}

// Both parts are +0.0 where they vanish, so phi = pos - neg and
// |phi| = pos + neg hold exactly.
BoundedFunction pos_part(const BoundedFunction& phi) {
  return pointwise(phi, [](double a) { return a > 0.0 ? a : 0.0; });
}

BoundedFunction neg_part(const BoundedFunction& phi) {
  return pointwise(phi, [](double a) { return a < 0.0 ? -a : 0.0; });
}

BoundedFunction abs(const BoundedFunction& phi) {
  return pointwise(phi, [](double a) { return std::fabs(a); });
}

BoundedFunction reciprocal(const BoundedFunction& phi) {
  if (!(phi.min() > 0.0)) throw InputError("reciprocal needs a strictly positive function");
  return pointwise(phi, [](double a) { return 1.0 / a; });
}

}  // namespace extendkit
