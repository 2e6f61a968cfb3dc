#pragma once

// Data-parallel inner loops of the brute-force scans.
//
// Every kernel exists as a scalar reference and, where the target allows, a
// SIMD variant. Variants perform the same IEEE operations in the same order
// per element (no FMA contraction, min/max reductions only), so all variants
// return bit-identical results. The active variant is picked at startup from
// the CPU features and may be forced with EXTENDKIT_ISA=scalar.

#include <cstddef>

namespace extendkit::kernels {

enum class Isa { scalar, avx2 };

const char* to_string(Isa isa);

struct ArgMin {
  double value;
  std::size_t index;  // first index attaining value
};

struct KernelTable {
  Isa isa;
  // out[i] = sqrt(sum_k (q[k] - columns[k][i])^2)
  void (*euclidean_distances)(const double* const* columns, std::size_t dim, std::size_t n,
                              const double* q, double* out);
  // out[i] = |q - xs[i]|
  void (*line_distances)(const double* xs, std::size_t n, double q, double* out);
  ArgMin (*argmin)(const double* values, std::size_t n);
  // min_i (phi[i] + dist[i] / rho) - 1
  double (*hausdorff_min)(const double* phi, const double* dist, std::size_t n, double rho);
  // max_i phi[i] * (rho / dist[i])
  double (*riesz_max)(const double* phi, const double* dist, std::size_t n, double rho);
  // min_i phi[i] * (dist[i] / rho)
  double (*dieudonne_min)(const double* phi, const double* dist, std::size_t n, double rho);
  // min_i phi[i] * rho + dist[i]
  double (*pasch_min)(const double* phi, const double* dist, std::size_t n, double rho);
  // min_i phi[i] + kappa * dist[i]
  double (*inf_convolution_min)(const double* phi, const double* dist, std::size_t n,
                                double kappa);
};

const KernelTable& scalar_table();
// nullptr when the variant was not compiled in.
const KernelTable* avx2_table();

bool isa_supported(Isa isa);
Isa detected_isa();

const KernelTable& active();
Isa active_isa();
// Throws InputError when the CPU (or build) lacks the requested variant.
void set_active_isa(Isa isa);

// Per-element terms. The pruned scans in the operators use these directly,
// so they agree bit-for-bit with the reductions above.
inline double hausdorff_term(double phi, double dist, double rho) {
  return (phi + dist / rho) - 1.0;
}
inline double riesz_weight(double s, double t) { return t / s; }
inline double dieudonne_weight(double s, double t) { return s / t; }
inline double pasch_term(double phi, double dist, double rho) { return phi * rho + dist; }
inline double inf_convolution_term(double phi, double dist, double kappa) {
  return phi + kappa * dist;
}

}  // namespace extendkit::kernels
