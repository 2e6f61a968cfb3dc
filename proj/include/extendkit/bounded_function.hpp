#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "extendkit/point_cloud.hpp"

namespace extendkit {

// A bounded real function on a sampled set: one finite value per point.
// Min and max are cached at construction for the pruned scans.
class BoundedFunction {
 public:
  BoundedFunction(std::shared_ptr<const PointCloudSet> set, std::vector<double> values);

  static BoundedFunction constant(std::shared_ptr<const PointCloudSet> set, double c);
  static BoundedFunction from(std::shared_ptr<const PointCloudSet> set,
                              const std::function<double(const Point&)>& f);

  const PointCloudSet& set() const { return *set_; }
  const std::shared_ptr<const PointCloudSet>& set_ptr() const { return set_; }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t id) const { return values_[id]; }
  std::size_t size() const { return values_.size(); }

  double min() const { return min_; }
  double max() const { return max_; }
  double sup_norm() const { return std::max(max_, -min_); }
  bool nonnegative() const { return min_ >= 0.0; }

  // Extrema of phi per node of the set's index, built on first use.
  // Requires set().has_index().
  const KdTree::ValueBounds& node_bounds() const;

 private:
  std::shared_ptr<const PointCloudSet> set_;
  std::vector<double> values_;
  double min_ = 0.0;
  double max_ = 0.0;

  struct BoundsCache {
    std::once_flag once;
    KdTree::ValueBounds bounds;
  };
  std::shared_ptr<BoundsCache> bounds_ = std::make_shared<BoundsCache>();
};

inline double sup_norm(const BoundedFunction& phi) { return phi.sup_norm(); }
// max |phi - psi|, without materializing the difference.
double sup_distance(const BoundedFunction& phi, const BoundedFunction& psi);

// Pointwise lattice and vector operations. Binary operations throw
// InputError when the operands live on different sets.
BoundedFunction operator+(const BoundedFunction& phi, const BoundedFunction& psi);
BoundedFunction operator-(const BoundedFunction& phi, const BoundedFunction& psi);
BoundedFunction scale(const BoundedFunction& phi, double lambda);
BoundedFunction shift(const BoundedFunction& phi, double mu);
BoundedFunction join(const BoundedFunction& phi, const BoundedFunction& psi);
BoundedFunction meet(const BoundedFunction& phi, const BoundedFunction& psi);
BoundedFunction pos_part(const BoundedFunction& phi);
BoundedFunction neg_part(const BoundedFunction& phi);
BoundedFunction abs(const BoundedFunction& phi);
// 1/phi; requires phi > 0.
BoundedFunction reciprocal(const BoundedFunction& phi);

}  // namespace extendkit
