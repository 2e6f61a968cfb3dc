#include "extendkit/metric.hpp"

#include <string>

namespace extendkit {

const char* to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::euclidean: return "euclidean";
    case MetricKind::real_line: return "real-line";
    case MetricKind::distance_matrix: return "distance-matrix";
  }
  return "unknown";
}

MetricOracle MetricOracle::euclidean() { return MetricOracle{}; }

MetricOracle MetricOracle::real_line() {
  MetricOracle m;
  m.kind_ = MetricKind::real_line;
  return m;
}

MetricOracle MetricOracle::distance_matrix(std::size_t n, std::vector<double> matrix) {
  if (n == 0) throw InputError("distance matrix must have n >= 1");
  if (matrix.size() != n * n) {
    throw InputError("distance matrix has " + std::to_string(matrix.size()) +
                     " entries, expected n*n = " + std::to_string(n * n));
  }
  for (double v : matrix) {
    if (!std::isfinite(v)) throw InputError("distance matrix entries must be finite");
  }
  MetricOracle m;
  m.kind_ = MetricKind::distance_matrix;
  m.n_ = n;
  m.matrix_ = std::make_shared<const std::vector<double>>(std::move(matrix));
  return m;
}

std::size_t MetricOracle::index_of(const Point& p) const {
  if (p.dimension() != 1) throw InputError("matrix-space points are 1-D row indices");
  const double v = p[0];
  if (v < 0 || v != std::floor(v) || v >= static_cast<double>(n_)) {
    throw InputError("matrix index " + std::to_string(v) + " out of range [0, " +
                     std::to_string(n_) + ")");
  }
  return static_cast<std::size_t>(v);
}

double MetricOracle::dist(const Point& p, const Point& q) const {
  switch (kind_) {
    case MetricKind::euclidean:
      if (p.dimension() != q.dimension()) {
        throw InputError("dimension mismatch: " + std::to_string(p.dimension()) + " vs " +
                         std::to_string(q.dimension()));
      }
      return detail::euclidean_distance(p.coords(), q.coords());
    case MetricKind::real_line:
      if (p.dimension() != 1 || q.dimension() != 1) {
        throw InputError("real-line metric needs 1-D points");
      }
      return detail::line_distance(p[0], q[0]);
    case MetricKind::distance_matrix:
      return matrix_at(index_of(p), index_of(q));
  }
  return 0.0;
}

MetricValidation MetricOracle::validate(double tolerance) const {
  MetricValidation v;
  if (kind_ != MetricKind::distance_matrix) return v;
  for (std::size_t i = 0; i < n_; ++i) {
    if (matrix_at(i, i) != 0.0) ++v.nonzero_diagonal;
    for (std::size_t j = 0; j < n_; ++j) {
      if (matrix_at(i, j) < 0.0) ++v.negative_entries;
      if (j > i && matrix_at(i, j) != matrix_at(j, i)) ++v.asymmetric_pairs;
    }
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = 0; k < n_; ++k) {
        const double excess = matrix_at(i, k) - (matrix_at(i, j) + matrix_at(j, k));
        if (excess > tolerance) {
          ++v.triangle_violations;
          if (excess > v.worst_triangle_excess) v.worst_triangle_excess = excess;
        }
      }
    }
  }
  return v;
}

}  // namespace extendkit
