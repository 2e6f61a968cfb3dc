#pragma once

#include <cmath>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "extendkit/point.hpp"

namespace extendkit {

enum class MetricKind { euclidean, real_line, distance_matrix };

const char* to_string(MetricKind kind);

// Result of the opt-in validation of an explicit distance matrix.
struct MetricValidation {
  std::size_t asymmetric_pairs = 0;
  std::size_t nonzero_diagonal = 0;
  std::size_t negative_entries = 0;
  std::size_t triangle_violations = 0;
  double worst_triangle_excess = 0.0;

  bool ok() const {
    return asymmetric_pairs == 0 && nonzero_diagonal == 0 && negative_entries == 0 &&
           triangle_violations == 0;
  }
};

class MetricOracle {
 public:
  static MetricOracle euclidean();
  static MetricOracle real_line();
  // Row-major n x n matrix. Entries must be finite; the metric axioms are
  // only checked by validate().
  static MetricOracle distance_matrix(std::size_t n, std::vector<double> matrix);

  MetricKind kind() const { return kind_; }
  std::size_t matrix_size() const { return n_; }
  double matrix_at(std::size_t i, std::size_t j) const { return (*matrix_)[i * n_ + j]; }
  std::span<const double> matrix_row(std::size_t i) const {
    return std::span<const double>(*matrix_).subspan(i * n_, n_);
  }

  // Row index carried by a point of the matrix space; throws when the point
  // is not an in-range integer.
  std::size_t index_of(const Point& p) const;

  double dist(const Point& p, const Point& q) const;

  // Symmetry, zero diagonal and every triangle inequality (O(n^3)), with
  // absolute slack `tolerance` on the triangle check. Coordinate metrics
  // always validate.
  MetricValidation validate(double tolerance = 0.0) const;

 private:
  MetricKind kind_ = MetricKind::euclidean;
  std::size_t n_ = 0;
  std::shared_ptr<const std::vector<double>> matrix_;
};

inline double dist(const MetricOracle& metric, const Point& p, const Point& q) {
  return metric.dist(p, q);
}

namespace detail {

// Shared by the scalar reference kernel, the SIMD kernels and the index so
// that every path produces bit-identical distances.
inline double euclidean_distance(std::span<const double> x, std::span<const double> q) {
  double sum = 0.0;
  for (std::size_t k = 0; k < q.size(); ++k) {
    const double diff = q[k] - x[k];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

inline double line_distance(double x, double q) { return std::fabs(q - x); }

}  // namespace detail
}  // namespace extendkit
