// AVX2 variants. Compiled with -mavx2 only; selected at runtime.

#include <immintrin.h>

#include <cmath>
#include <limits>

#include "extendkit/kernels.hpp"

namespace extendkit::kernels {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kLanes = 4;

double horizontal_min(__m256d v) {
  alignas(32) double lanes[kLanes];
  _mm256_store_pd(lanes, v);
  return std::fmin(std::fmin(lanes[0], lanes[1]), std::fmin(lanes[2], lanes[3]));
}

double horizontal_max(__m256d v) {
  alignas(32) double lanes[kLanes];
  _mm256_store_pd(lanes, v);
  return std::fmax(std::fmax(lanes[0], lanes[1]), std::fmax(lanes[2], lanes[3]));
}

void euclidean_distances(const double* const* columns, std::size_t dim, std::size_t n,
                         const double* q, double* out) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    __m256d sum = _mm256_setzero_pd();
    for (std::size_t k = 0; k < dim; ++k) {
      const __m256d diff = _mm256_sub_pd(_mm256_set1_pd(q[k]), _mm256_loadu_pd(columns[k] + i));
      sum = _mm256_add_pd(sum, _mm256_mul_pd(diff, diff));
    }
    _mm256_storeu_pd(out + i, _mm256_sqrt_pd(sum));
  }
  for (; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
      const double diff = q[k] - columns[k][i];
      sum += diff * diff;
    }
    out[i] = std::sqrt(sum);
  }
}

void line_distances(const double* xs, std::size_t n, double q, double* out) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  const __m256d qv = _mm256_set1_pd(q);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d diff = _mm256_sub_pd(qv, _mm256_loadu_pd(xs + i));
    _mm256_storeu_pd(out + i, _mm256_andnot_pd(sign, diff));
  }
  for (; i < n; ++i) out[i] = std::fabs(q - xs[i]);
}

ArgMin argmin(const double* values, std::size_t n) {
  __m256d best = _mm256_set1_pd(kInf);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) best = _mm256_min_pd(best, _mm256_loadu_pd(values + i));
  double value = horizontal_min(best);
  for (; i < n; ++i) value = std::fmin(value, values[i]);
  for (std::size_t j = 0; j < n; ++j) {
    if (values[j] == value) return {value, j};
  }
  return {kInf, 0};
}

double hausdorff_min(const double* phi, const double* dist, std::size_t n, double rho) {
  const __m256d rv = _mm256_set1_pd(rho);
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d best = _mm256_set1_pd(kInf);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d ratio = _mm256_div_pd(_mm256_loadu_pd(dist + i), rv);
    const __m256d term = _mm256_sub_pd(_mm256_add_pd(_mm256_loadu_pd(phi + i), ratio), one);
    best = _mm256_min_pd(best, term);
  }
  double value = horizontal_min(best);
  for (; i < n; ++i) value = std::fmin(value, hausdorff_term(phi[i], dist[i], rho));
  return value;
}

double riesz_max(const double* phi, const double* dist, std::size_t n, double rho) {
  const __m256d rv = _mm256_set1_pd(rho);
  __m256d best = _mm256_set1_pd(-kInf);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d weight = _mm256_div_pd(rv, _mm256_loadu_pd(dist + i));
    best = _mm256_max_pd(best, _mm256_mul_pd(_mm256_loadu_pd(phi + i), weight));
  }
  double value = horizontal_max(best);
  for (; i < n; ++i) value = std::fmax(value, phi[i] * riesz_weight(dist[i], rho));
  return value;
}

double dieudonne_min(const double* phi, const double* dist, std::size_t n, double rho) {
  const __m256d rv = _mm256_set1_pd(rho);
  __m256d best = _mm256_set1_pd(kInf);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d weight = _mm256_div_pd(_mm256_loadu_pd(dist + i), rv);
    best = _mm256_min_pd(best, _mm256_mul_pd(_mm256_loadu_pd(phi + i), weight));
  }
  double value = horizontal_min(best);
  for (; i < n; ++i) value = std::fmin(value, phi[i] * dieudonne_weight(dist[i], rho));
  return value;
}

double pasch_min(const double* phi, const double* dist, std::size_t n, double rho) {
  const __m256d rv = _mm256_set1_pd(rho);
  __m256d best = _mm256_set1_pd(kInf);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d term =
        _mm256_add_pd(_mm256_mul_pd(_mm256_loadu_pd(phi + i), rv), _mm256_loadu_pd(dist + i));
    best = _mm256_min_pd(best, term);
  }
  double value = horizontal_min(best);
  for (; i < n; ++i) value = std::fmin(value, pasch_term(phi[i], dist[i], rho));
  return value;
}

double inf_convolution_min(const double* phi, const double* dist, std::size_t n, double kappa) {
  const __m256d kv = _mm256_set1_pd(kappa);
  __m256d best = _mm256_set1_pd(kInf);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d term =
        _mm256_add_pd(_mm256_loadu_pd(phi + i), _mm256_mul_pd(kv, _mm256_loadu_pd(dist + i)));
    best = _mm256_min_pd(best, term);
  }
  double value = horizontal_min(best);
  for (; i < n; ++i) value = std::fmin(value, inf_convolution_term(phi[i], dist[i], kappa));
  return value;
}

}  // namespace

const KernelTable* avx2_table() {
  static const KernelTable table{Isa::avx2,    euclidean_distances, line_distances,
                                 argmin,       hausdorff_min,       riesz_max,
                                 dieudonne_min, pasch_min,          inf_convolution_min};
  return &table;
}

}  // namespace extendkit::kernels
