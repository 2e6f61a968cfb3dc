#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "extendkit/kd_tree.hpp"
#include "extendkit/metric.hpp"
#include "extendkit/point.hpp"

namespace extendkit {

enum class IndexPolicy { automatic, always, never };

// Sets smaller than this are scanned linearly under IndexPolicy::automatic.
inline constexpr std::size_t kIndexThreshold = 256;

struct NearestResult {
  double rho;
  std::size_t id;
};

class PointCloudSet;

// Points of a set in nondecreasing (distance, id) order from a query.
class NeighborStream {
 public:
  std::optional<Neighbor> next();
  std::size_t points_visited() const;

 private:
  friend class PointCloudSet;
  NeighborStream() = default;

  std::vector<double> query_;  // owned; the traversal views it
  std::vector<Neighbor> sorted_;
  std::size_t cursor_ = 0;
  std::optional<KdTree::Traversal> traversal_;
};

// Finite sample of a closed set A. Immutable once built; shared between
// the functions attached to it.
class PointCloudSet {
 public:
  static std::shared_ptr<const PointCloudSet> create(std::vector<Point> points,
                                                     MetricOracle metric,
                                                     IndexPolicy policy = IndexPolicy::automatic);

  std::size_t size() const { return size_; }
  std::size_t dimension() const { return dim_; }
  const MetricOracle& metric() const { return metric_; }
  bool has_index() const { return index_.has_value(); }
  const KdTree* index() const { return index_ ? &*index_ : nullptr; }

  Point point(std::size_t id) const;
  // Exact coordinate equality between point `id` and q.
  bool coincides(std::size_t id, const Point& q) const;
  // Column k of the structure-of-arrays coordinate storage.
  std::span<const double> column(std::size_t k) const;

  double distance(std::size_t id, const Point& q) const;
  // out[id] = distance(id, q) for every point, through the active kernel.
  void distances(const Point& q, std::span<double> out) const;

  // d(q, A) and the nearest point; ties go to the smallest id. Uses the
  // index when present.
  NearestResult nearest(const Point& q) const;
  NearestResult nearest_linear(const Point& q) const;

  NeighborStream neighbors(const Point& q) const;

  // Throws InputError when q cannot be measured against this set.
  void check_query(const Point& q) const;

 private:
  PointCloudSet() = default;

  std::size_t size_ = 0;
  std::size_t dim_ = 0;
  MetricOracle metric_;
  std::vector<std::vector<double>> columns_;
  std::vector<const double*> column_ptrs_;
  std::vector<std::size_t> matrix_rows_;
  std::optional<KdTree> index_;
};

inline NearestResult dist_to_set(const PointCloudSet& set, const Point& p) {
  return set.nearest(p);
}

}  // namespace extendkit
