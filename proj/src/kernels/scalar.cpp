#include <cmath>
#include <limits>

#include "extendkit/kernels.hpp"

namespace extendkit::kernels {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void euclidean_distances(const double* const* columns, std::size_t dim, std::size_t n,
                         const double* q, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
      const double diff = q[k] - columns[k][i];
      sum += diff * diff;
    }
    out[i] = std::sqrt(sum);
  }
}

void line_distances(const double* xs, std::size_t n, double q, double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::fabs(q - xs[i]);
}

ArgMin argmin(const double* values, std::size_t n) {
  ArgMin best{kInf, 0};
  for (std::size_t i = 0; i < n; ++i) {
    if (values[i] < best.value) best = {values[i], i};
  }
  return best;
}

double hausdorff_min(const double* phi, const double* dist, std::size_t n, double rho) {
  double best = kInf;
  for (std::size_t i = 0; i < n; ++i) best = std::fmin(best, hausdorff_term(phi[i], dist[i], rho));
  return best;
}

double riesz_max(const double* phi, const double* dist, std::size_t n, double rho) {
  double best = -kInf;
  for (std::size_t i = 0; i < n; ++i) best = std::fmax(best, phi[i] * riesz_weight(dist[i], rho));
  return best;
}

double dieudonne_min(const double* phi, const double* dist, std::size_t n, double rho) {
  double best = kInf;
  for (std::size_t i = 0; i < n; ++i) {
    best = std::fmin(best, phi[i] * dieudonne_weight(dist[i], rho));
  }
  return best;
}

double pasch_min(const double* phi, const double* dist, std::size_t n, double rho) {
  double best = kInf;
  for (std::size_t i = 0; i < n; ++i) best = std::fmin(best, pasch_term(phi[i], dist[i], rho));
  return best;
}

double inf_convolution_min(const double* phi, const double* dist, std::size_t n, double kappa) {
  double best = kInf;
  for (std::size_t i = 0; i < n; ++i) {
    best = std::fmin(best, inf_convolution_term(phi[i], dist[i], kappa));
  }
  return best;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{Isa::scalar,  euclidean_distances, line_distances,
                                 argmin,       hausdorff_min,       riesz_max,
                                 dieudonne_min, pasch_min,          inf_convolution_min};
  return table;
}

}  // namespace extendkit::kernels
