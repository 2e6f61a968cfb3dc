#pragma once

// Extension operators over a finite sample A of a closed set.
//
// With rho = d(p, A), for p outside A:
//   hausdorff  Psi[phi](p)   = min_a phi(a) + d(a,p)/rho - 1
//   omega      Omega_F[phi](p) = max_a phi(a) * F(d(a,p), rho)        (phi >= 0)
//   mho        Mho_G[phi](p)   = min_a phi(a) * G(d(a,p), rho)        (phi >= 0)
//   theta      Theta_F[phi]    = Omega_F[phi+] - Omega_F[phi-]
//   bohr       Phi[phi](p)     = (1/rho) * integral over [rho, 2 rho] of eta_p
//   pasch      f(p)            = min_a phi(a) * rho + d(a,p)          (phi >= 0)
//   inf-convolution f_k(p)     = min_a phi(a) + kappa * d(a,p)
//
// Every operator except the two Pasch forms returns phi at points of A.
// Each has a brute-force scan (SIMD kernels where the weight allows) and a
// pruned scan: branch and bound over the set's kd-tree, skipping any
// subtree whose box distance and extrema of phi show it cannot improve the
// optimum. Sets without an index fall back to the brute-force scan. Both
// return bit-identical values.

#include <cstddef>
#include <vector>

#include "extendkit/bounded_function.hpp"
#include "extendkit/extenders.hpp"

namespace extendkit {

enum class Strategy { brute, pruned };

enum class Branch {
  exact_member,  // query coordinates equal a sample point
  near_member,   // rho below kMembershipRadius without exact equality
  exterior,
};

// Queries closer than this to A are treated as points of A.
inline constexpr double kMembershipRadius = 1e-12;

const char* to_string(Strategy s);
const char* to_string(Branch b);

struct EvalResult {
  double value = 0.0;
  Branch branch = Branch::exterior;
  double rho = 0.0;
  std::size_t nearest = 0;
  std::size_t scanned = 0;  // candidate points whose term was evaluated
  std::size_t clamped = 0;  // weights raised from underflow
};

// Omega normally rejects negative functions. allow_signed evaluates the raw
// formula anyway (brute force only); it exists to exhibit why the
// restriction is needed.
enum class SignPolicy { require_nonnegative, allow_signed };

EvalResult evaluate_hausdorff(const BoundedFunction& phi, const Point& p,
                              Strategy strategy = Strategy::pruned);
EvalResult evaluate_omega(const BoundedFunction& phi, const Extender& f, const Point& p,
                          Strategy strategy = Strategy::pruned,
                          SignPolicy sign = SignPolicy::require_nonnegative);
EvalResult evaluate_mho(const BoundedFunction& phi, const DualWeight& g, const Point& p,
                        Strategy strategy = Strategy::pruned);
EvalResult evaluate_theta(const BoundedFunction& phi, const Extender& f, const Point& p,
                          Strategy strategy = Strategy::pruned);
// Same as above with the positive and negative parts precomputed.
EvalResult evaluate_theta_parts(const BoundedFunction& pos, const BoundedFunction& neg,
                                const Extender& f, const Point& p, Strategy strategy);
EvalResult evaluate_bohr(const BoundedFunction& phi, const Point& p,
                         Strategy strategy = Strategy::pruned);
EvalResult evaluate_pasch(const BoundedFunction& phi, const Point& p,
                          Strategy strategy = Strategy::pruned);
EvalResult evaluate_inf_convolution(const BoundedFunction& phi, double kappa, const Point& p,
                                    Strategy strategy = Strategy::pruned);

inline double hausdorff_eval(const BoundedFunction& phi, const Point& p,
                             Strategy s = Strategy::pruned) {
  return evaluate_hausdorff(phi, p, s).value;
}
inline double omega_eval(const BoundedFunction& phi, const Extender& f, const Point& p,
                         Strategy s = Strategy::pruned) {
  return evaluate_omega(phi, f, p, s).value;
}
inline double mho_eval(const BoundedFunction& phi, const DualWeight& g, const Point& p,
                       Strategy s = Strategy::pruned) {
  return evaluate_mho(phi, g, p, s).value;
}
inline double theta_eval(const BoundedFunction& phi, const Extender& f, const Point& p,
                         Strategy s = Strategy::pruned) {
  return evaluate_theta(phi, f, p, s).value;
}
inline double bohr_eval(const BoundedFunction& phi, const Point& p,
                        Strategy s = Strategy::pruned) {
  return evaluate_bohr(phi, p, s).value;
}
inline double pasch_eval(const BoundedFunction& phi, const Point& p,
                         Strategy s = Strategy::pruned) {
  return evaluate_pasch(phi, p, s).value;
}
inline double pasch_eval(const BoundedFunction& phi, double kappa, const Point& p,
                         Strategy s = Strategy::pruned) {
  return evaluate_inf_convolution(phi, kappa, p, s).value;
}

// Step function t -> sup of phi over the points of A strictly closer than t
// to x, for t > rho; min phi for t <= rho. Plateau i holds on
// (breakpoints[i], breakpoints[i+1]], the last one on (breakpoints.back(), inf).
struct EtaStep {
  double rho = 0.0;
  double floor = 0.0;
  std::vector<double> breakpoints;  // sorted distances, breakpoints[0] == rho
  std::vector<double> plateaus;     // running maxima of phi, nondecreasing
  std::vector<std::size_t> ids;     // sample point entering at each breakpoint

  double operator()(double t) const;
};

// Rejects x within kMembershipRadius of A.
EtaStep bohr_eta(const BoundedFunction& phi, const Point& x);

// Exact (1/rho) * integral of the step function over [rho, 2 rho], given the
// first breakpoints (those below 2 rho suffice) and their plateaus.
double eta_window_average(std::span<const double> breakpoints, std::span<const double> plateaus,
                          double rho);

}  // namespace extendkit
