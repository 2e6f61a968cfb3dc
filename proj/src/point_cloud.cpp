#include "extendkit/point_cloud.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "extendkit/kernels.hpp"

namespace extendkit {

std::optional<Neighbor> NeighborStream::next() {
  if (traversal_) {
    Neighbor n{};
    if (traversal_->next(n)) return n;
    return std::nullopt;
  }
  if (cursor_ < sorted_.size()) return sorted_[cursor_++];
  return std::nullopt;
}

std::size_t NeighborStream::points_visited() const {
  return traversal_ ? traversal_->points_visited() : sorted_.size();
}

std::shared_ptr<const PointCloudSet> PointCloudSet::create(std::vector<Point> points,
                                                           MetricOracle metric,
                                                           IndexPolicy policy) {
  if (points.empty()) throw InputError("point set must be nonempty");
  const std::size_t dim = points.front().dimension();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].dimension() != dim) {
      throw InputError("point " + std::to_string(i) + " has dimension " +
                       std::to_string(points[i].dimension()) + ", expected " +
                       std::to_string(dim));
    }
  }
  if (metric.kind() == MetricKind::real_line && dim != 1) {
    throw InputError("real-line metric needs 1-D points");
  }

  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto ca = points[a].coords();
    const auto cb = points[b].coords();
    return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (points[order[i]] == points[order[i - 1]]) {
      throw InputError("duplicate points " + std::to_string(std::min(order[i], order[i - 1])) +
                       " and " + std::to_string(std::max(order[i], order[i - 1])));
    }
  }

  std::shared_ptr<PointCloudSet> set(new PointCloudSet());
  set->size_ = points.size();
  set->dim_ = dim;
  set->metric_ = std::move(metric);
  set->columns_.assign(dim, std::vector<double>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t k = 0; k < dim; ++k) set->columns_[k][i] = points[i][k];
  }
  for (const auto& c : set->columns_) set->column_ptrs_.push_back(c.data());

  if (set->metric_.kind() == MetricKind::distance_matrix) {
    for (const Point& p : points) set->matrix_rows_.push_back(set->metric_.index_of(p));
    return set;
  }

  const bool want_index = policy == IndexPolicy::always ||
                          (policy == IndexPolicy::automatic && points.size() >= kIndexThreshold);
  if (want_index) {
    std::vector<double> row_major;
    row_major.reserve(points.size() * dim);
    for (const Point& p : points) row_major.insert(row_major.end(), p.coords().begin(), p.coords().end());
    set->index_.emplace(row_major, dim, set->metric_.kind());
  }
  return set;
}

Point PointCloudSet::point(std::size_t id) const {
  std::vector<double> c(dim_);
  for (std::size_t k = 0; k < dim_; ++k) c[k] = columns_[k][id];
  return Point(std::move(c));
}

bool PointCloudSet::coincides(std::size_t id, const Point& q) const {
  if (q.dimension() != dim_) return false;
  for (std::size_t k = 0; k < dim_; ++k) {
    if (columns_[k][id] != q[k]) return false;
  }
  return true;
}

std::span<const double> PointCloudSet::column(std::size_t k) const { return columns_[k]; }

void PointCloudSet::check_query(const Point& q) const {
  if (metric_.kind() == MetricKind::distance_matrix) {
    metric_.index_of(q);
    return;
  }
  if (q.dimension() != dim_) {
    throw InputError("query has dimension " + std::to_string(q.dimension()) + ", set has " +
                     std::to_string(dim_));
  }
}

double PointCloudSet::distance(std::size_t id, const Point& q) const {
  switch (metric_.kind()) {
    case MetricKind::euclidean: {
      double sum = 0.0;
      for (std::size_t k = 0; k < dim_; ++k) {
        const double diff = q[k] - columns_[k][id];
        sum += diff * diff;
      }
      return std::sqrt(sum);
    }
    case MetricKind::real_line:
      return detail::line_distance(columns_[0][id], q[0]);
    case MetricKind::distance_matrix:
      return metric_.matrix_at(matrix_rows_[id], metric_.index_of(q));
  }
  return 0.0;
}

void PointCloudSet::distances(const Point& q, std::span<double> out) const {
  check_query(q);
  const auto& kt = kernels::active();
  switch (metric_.kind()) {
    case MetricKind::euclidean:
      kt.euclidean_distances(column_ptrs_.data(), dim_, size_, q.coords().data(), out.data());
      break;
    case MetricKind::real_line:
      kt.line_distances(columns_[0].data(), size_, q[0], out.data());
      break;
    case MetricKind::distance_matrix: {
      const auto row = metric_.matrix_row(metric_.index_of(q));
      for (std::size_t i = 0; i < size_; ++i) out[i] = row[matrix_rows_[i]];
      break;
    }
  }
}

NearestResult PointCloudSet::nearest_linear(const Point& q) const {
  std::vector<double> d(size_);
  distances(q, d);
  const auto best = kernels::active().argmin(d.data(), d.size());
  return {best.value, best.index};
}

NearestResult PointCloudSet::nearest(const Point& q) const {
  if (!index_) return nearest_linear(q);
  check_query(q);
  KdTree::Traversal t(*index_, q.coords());
  Neighbor n{};
  t.next(n);
  return {n.dist, n.id};
}

NeighborStream PointCloudSet::neighbors(const Point& q) const {
  check_query(q);
  NeighborStream s;
  if (index_) {
    s.query_.assign(q.coords().begin(), q.coords().end());
    s.traversal_.emplace(*index_, std::span<const double>(s.query_));
    return s;
  }
  std::vector<double> d(size_);
  distances(q, d);
  s.sorted_.resize(size_);
  for (std::size_t i = 0; i < size_; ++i) s.sorted_[i] = {d[i], i};
  std::sort(s.sorted_.begin(), s.sorted_.end(), [](const Neighbor& a, const Neighbor& b) {
    return a.dist < b.dist || (a.dist == b.dist && a.id < b.id);
  });
  return s;
}

}  // namespace extendkit
