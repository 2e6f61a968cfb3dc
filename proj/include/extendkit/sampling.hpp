#pragma once

// Random and structured inputs for property checks. Everything is driven by
// an explicit seeded engine so runs are reproducible.

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <vector>

#include "extendkit/bounded_function.hpp"

namespace extendkit {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 0x7152;

struct Box {
  std::vector<double> lo;
  std::vector<double> hi;
  std::size_t dimension() const { return lo.size(); }
};

// count evenly spaced values from lo to hi, endpoints included exactly.
std::vector<double> linspace(double lo, double hi, std::size_t count);

// Uniform sample of [lo, hi] on the real line.
std::shared_ptr<const PointCloudSet> line_sample(double lo, double hi, std::size_t count,
                                                 IndexPolicy policy = IndexPolicy::automatic);

std::vector<Point> random_points(Rng& rng, const Box& box, std::size_t count);
Point random_point(Rng& rng, const Box& box);
// Point at distance at most `radius` from `center` (uniform direction,
// uniform radius). 1-D points move left or right.
Point random_offset(Rng& rng, const Point& center, double radius);

// Uniform cloud in the unit cube; dim == 1 uses the real-line metric.
std::shared_ptr<const PointCloudSet> random_cloud(Rng& rng, std::size_t count, std::size_t dim,
                                                  IndexPolicy policy = IndexPolicy::automatic);
// Gaussian clusters with centres in the unit cube.
std::shared_ptr<const PointCloudSet> clustered_cloud(Rng& rng, std::size_t count,
                                                     std::size_t dim, std::size_t clusters,
                                                     double spread,
                                                     IndexPolicy policy = IndexPolicy::automatic);

Box bounding_box(const PointCloudSet& set, double margin);

// Continuous piecewise-linear function of the coordinates (a sum of random
// hinges plus an affine part).
std::function<double(const Point&)> random_piecewise_linear(Rng& rng, std::size_t dim);

// A random piecewise-linear function sampled on `set`, affinely mapped so
// its values span exactly [lo, hi].
BoundedFunction random_function(Rng& rng, std::shared_ptr<const PointCloudSet> set, double lo,
                                double hi);

}  // namespace extendkit
