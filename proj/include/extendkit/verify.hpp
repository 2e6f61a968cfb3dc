#pragma once

// Sampled checks of operator-level properties, plus the counterexample
// demos. Every check is deterministic given its seed.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "extendkit/extension.hpp"
#include "extendkit/modulus.hpp"
#include "extendkit/sampling.hpp"

namespace extendkit {

enum class Expectation { holds, fails };

struct PropertyReport {
  std::string property;
  std::string subject;  // operator / weight under test
  std::uint64_t seed = kDefaultSeed;
  std::size_t trials = 0;
  std::size_t samples = 0;
  // Signed: the largest observed excess over the exact statement; the
  // property holds when it does not exceed `tolerance`.
  double worst_violation = 0.0;
  double tolerance = 0.0;
  bool applicable = true;
  Expectation expectation = Expectation::holds;
  // Known counterexamples also pin the failing value to a closed form.
  std::optional<double> closed_form_error;
  double closed_form_tolerance = 0.0;
  std::string note;
  nlohmann::json witness = nlohmann::json::object();

  bool holds() const { return applicable && worst_violation <= tolerance; }
  bool closed_form_ok() const {
    return !closed_form_error || *closed_form_error <= closed_form_tolerance;
  }
  // True when the outcome matches the expectation.
  bool ok() const;
  // pass, fail, not-applicable, expected-fail-reproduced, expected-fail-missing
  std::string status() const;
};

nlohmann::json to_json(const PropertyReport& r);

// Evaluates at every point of A; the worst |f(a) - phi(a)| must be 0.
PropertyReport check_extension_identity(const Extension& ext);

// |f - g| <= ||phi - psi|| at every query, and the sup over the queries and
// A reaches ||phi - psi||. `ext` carries phi; psi must live on the same set.
PropertyReport check_isometry(const Extension& ext, const BoundedFunction& psi,
                              std::span<const Point> queries,
                              Expectation expect = Expectation::holds);

// |Theta[phi] - Theta[psi]| <= 2 ||phi - psi|| at every query.
PropertyReport check_two_lipschitz_theta(const Extender& f, const BoundedFunction& phi,
                                         const BoundedFunction& psi,
                                         std::span<const Point> queries);

// Isotone, subadditive and positively homogeneous on random nonnegative
// functions over `set`. op is omega (with `f`) or bohr. Violations are
// divided by max(1, norms involved) before comparison with 1e-9.
PropertyReport check_monotone_sublinear(OperatorKind op, const std::optional<Extender>& f,
                                        std::shared_ptr<const PointCloudSet> set,
                                        std::size_t trials, std::span<const Point> queries,
                                        std::uint64_t seed = kDefaultSeed);

struct ModulusRegion {
  enum class Kind { boundary, exterior, global };
  Kind kind = Kind::global;
  double tau = 0.0;           // exterior: both ends at distance >= tau from A
  double max_distance = 1.0;  // pair distances never exceed this
  Box domain;                 // where exterior and global pairs start
};

// Sampled modulus of continuity of `ext` over pairs drawn from `region`,
// tabulated at max_distance * 2^-k, k = 0..11. Coordinate metrics only.
ModulusTable empirical_modulus(const Extension& ext, const ModulusRegion& region,
                               std::size_t pair_count, std::uint64_t seed = kDefaultSeed);

struct GluingCheck {
  double tau = 0.0;
  double epsilon = 0.0;
  ModulusTable boundary;  // pairs (a, x), a in A, d <= tau
  ModulusTable exterior;  // pairs outside the tau-neighbourhood of A
  // Largest tabulated delta at which both moduli stay within epsilon.
  std::optional<double> delta;
  bool holds() const { return delta.has_value(); }
};

GluingCheck check_gluing(const Extension& ext, double tau, double epsilon, const Box& domain,
                         std::size_t pair_count, std::uint64_t seed = kDefaultSeed);

// |Phi(x) - Phi(p)| <= (4 / tau) * (max phi - min phi) * d(x, p) for pairs
// with d <= tau / 3 and both ends at distance >= tau from A.
PropertyReport check_bohr_lipschitz(const BoundedFunction& phi, double tau, const Box& domain,
                                    std::size_t pair_count,
                                    std::uint64_t seed = kDefaultSeed);

// |f(x) - f(p)| <= (kappa + 1) d(x, p) with kappa = sup phi, for the
// product form f = min_a phi(a) * d(., A) + d(a, .).
PropertyReport check_pasch_lipschitz(const BoundedFunction& phi, const Box& domain,
                                     std::size_t pair_count,
                                     std::uint64_t seed = kDefaultSeed);

// hausdorff(x) == pasch(x) / d(x, A) - 1, relative to max(1, |hausdorff|, ||phi||).
PropertyReport check_pasch_identity(const BoundedFunction& phi, std::span<const Point> queries);

// Omega_F[1](x) == F(rho, rho), relative 1e-12.
PropertyReport check_omega_constants(std::shared_ptr<const PointCloudSet> set, const Extender& f,
                                     std::span<const Point> queries);

// Mho_{1/F}[phi] * Omega_F[1/phi] == 1 for phi > 0, relative 1e-12.
PropertyReport check_reciprocal_identity(const BoundedFunction& phi, const Extender& f,
                                         std::span<const Point> queries);

// Near each boundary point p, phi(p) - 2 eps <= Omega_F[phi](x) <= phi(p) + eps
// for x within delta of p, where eps bounds the oscillation of phi over
// pairs closer than 2 tau and delta is derived from F, tau and eps.
PropertyReport check_lemma_bound(const BoundedFunction& phi, const Extender& f, double tau,
                                 std::size_t samples, std::uint64_t seed = kDefaultSeed);

// Pruned and brute-force evaluation agree exactly at every query.
PropertyReport check_oracle_equivalence(const Extension& ext, std::span<const Point> queries);

// The four counterexample demos. When out_dir is nonempty each writes a
// CSV curve there.
std::vector<PropertyReport> remark_suite(const std::string& out_dir = {});

}  // namespace extendkit
