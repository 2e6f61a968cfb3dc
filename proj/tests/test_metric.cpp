#include <doctest.h>

#include <cmath>
#include <limits>

#include "extendkit/bounded_function.hpp"
#include "extendkit/sampling.hpp"
#include "oracle.hpp"

using namespace extendkit;

namespace {

std::shared_ptr<const PointCloudSet> line_set(std::vector<double> xs,
                                              IndexPolicy policy = IndexPolicy::automatic) {
  std::vector<Point> pts;
  for (double x : xs) pts.push_back(Point::scalar(x));
  return PointCloudSet::create(std::move(pts), MetricOracle::real_line(), policy);
}

// Integer lattice: many exact distance ties.
std::shared_ptr<const PointCloudSet> lattice(int side, IndexPolicy policy) {
  std::vector<Point> pts;
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) pts.push_back(Point({double(i), double(j)}));
  }
  return PointCloudSet::create(std::move(pts), MetricOracle::euclidean(), policy);
}

}  // namespace

TEST_CASE("points reject non-finite and empty coordinates") {
  CHECK_THROWS_AS(Point(std::vector<double>{}), InputError);
  CHECK_THROWS_AS(Point({1.0, std::nan("")}), InputError);
  CHECK_THROWS_AS(Point::scalar(std::numeric_limits<double>::infinity()), InputError);
  CHECK(Point::scalar(2.0).dimension() == 1);
}

TEST_CASE("dist examples") {
  const auto e = MetricOracle::euclidean();
  CHECK(e.dist(Point({0.0, 0.0}), Point({3.0, 4.0})) == 5.0);
  CHECK(MetricOracle::real_line().dist(Point::scalar(2.0), Point::scalar(-1.0)) == 3.0);
  const Point p({0.25, -7.5, 3.0});
  CHECK(e.dist(p, p) == 0.0);
  CHECK(MetricOracle::real_line().dist(Point::scalar(0.1), Point::scalar(0.1)) == 0.0);
  const auto m = MetricOracle::distance_matrix(2, {0.0, 4.0, 4.0, 0.0});
  CHECK(m.dist(Point::scalar(0.0), Point::scalar(1.0)) == 4.0);
  CHECK(m.dist(Point::scalar(1.0), Point::scalar(1.0)) == 0.0);
}

TEST_CASE("dist errors") {
  CHECK_THROWS_AS(MetricOracle::euclidean().dist(Point({0.0, 0.0}), Point({1.0})), InputError);
  CHECK_THROWS_AS(MetricOracle::real_line().dist(Point({0.0, 0.0}), Point({1.0, 1.0})),
                  InputError);
  const auto m = MetricOracle::distance_matrix(2, {0.0, 1.0, 1.0, 0.0});
  CHECK_THROWS_AS(m.dist(Point::scalar(0.0), Point::scalar(2.0)), InputError);
  CHECK_THROWS_AS(m.dist(Point::scalar(0.5), Point::scalar(1.0)), InputError);
  CHECK_THROWS_AS(MetricOracle::distance_matrix(2, {0.0, 1.0, 1.0}), InputError);
}

TEST_CASE("matrix validation counts axiom failures") {
  CHECK(MetricOracle::distance_matrix(3, {0, 1, 2, 1, 0, 1, 2, 1, 0}).validate().ok());
  const auto bad = MetricOracle::distance_matrix(3, {0, 1, 5, 1, 0, 1, 5, 2, 0});
  const auto v = bad.validate();
  CHECK(v.asymmetric_pairs == 1);
  CHECK(v.triangle_violations > 0);
  CHECK(v.worst_triangle_excess == doctest::Approx(3.0));
  CHECK_FALSE(MetricOracle::distance_matrix(2, {1, 1, 1, 0}).validate().ok());
  CHECK(MetricOracle::euclidean().validate().ok());
}

TEST_CASE("sets reject empty, duplicate and mixed input") {
  CHECK_THROWS_AS(PointCloudSet::create({}, MetricOracle::euclidean()), InputError);
  CHECK_THROWS_AS(line_set({0.0, 1.0, 0.0}), InputError);
  CHECK_THROWS_AS(PointCloudSet::create({Point({0.0, 1.0}), Point({1.0})},
                                        MetricOracle::euclidean()),
                  InputError);
  CHECK_THROWS_AS(PointCloudSet::create({Point({0.0, 1.0})}, MetricOracle::real_line()),
                  InputError);
  CHECK_THROWS_AS(line_set({0.0})->nearest(Point({1.0, 2.0})), InputError);
}

TEST_CASE("dist_to_set examples") {
  const auto a = line_set({0.0, 1.0});
  auto r = dist_to_set(*a, Point::scalar(0.5));
  CHECK(r.rho == 0.5);
  CHECK(r.id == 0);
  r = dist_to_set(*a, Point::scalar(1.0));
  CHECK(r.rho == 0.0);
  CHECK(r.id == 1);

  std::vector<double> xs;
  for (int i = 0; i < 1000; ++i) xs.push_back(-1.0 + i / 999.0);
  xs.back() = 0.0;
  for (auto policy : {IndexPolicy::never, IndexPolicy::always}) {
    const auto big = line_set(xs, policy);
    r = dist_to_set(*big, Point::scalar(2.0));
    CHECK(r.rho == 2.0);
    CHECK(r.id == 999);
  }
}

TEST_CASE("matrix sets measure by row index") {
  const auto m = MetricOracle::distance_matrix(3, {0, 2, 3, 2, 0, 4, 3, 4, 0});
  const auto set = PointCloudSet::create({Point::scalar(0.0), Point::scalar(1.0)}, m);
  CHECK_FALSE(set->has_index());
  const auto r = set->nearest(Point::scalar(2.0));
  CHECK(r.rho == 3.0);
  CHECK(r.id == 0);
  std::vector<double> d(2);
  set->distances(Point::scalar(2.0), d);
  CHECK(d == std::vector<double>{3.0, 4.0});
}

TEST_CASE("index nearest equals linear nearest") {
  Rng rng(11);
  for (std::size_t dim = 1; dim <= 4; ++dim) {
    for (std::size_t n : {300u, 2000u}) {
      const auto set = random_cloud(rng, n, dim, IndexPolicy::always);
      REQUIRE(set->has_index());
      const Box box{std::vector<double>(dim, -0.5), std::vector<double>(dim, 1.5)};
      for (const Point& q : random_points(rng, box, 200)) {
        const auto a = set->nearest(q);
        const auto b = set->nearest_linear(q);
        CHECK(a.rho == b.rho);
        CHECK(a.id == b.id);
      }
    }
  }
  // Ties resolve to the smallest id on both paths.
  const auto grid = lattice(30, IndexPolicy::always);
  for (const Point& q : {Point({10.5, 10.5}), Point({0.5, 0.5}), Point({-1.0, 5.0}),
                         Point({14.5, 29.5})}) {
    const auto a = grid->nearest(q);
    const auto b = grid->nearest_linear(q);
    CHECK(a.rho == b.rho);
    CHECK(a.id == b.id);
  }
}

TEST_CASE("neighbor streams are in (distance, id) order and complete") {
  Rng rng(5);
  for (auto policy : {IndexPolicy::never, IndexPolicy::always}) {
    const auto set = lattice(20, policy);
    const Point q({7.5, 3.0});
    auto stream = set->neighbors(q);
    std::vector<Neighbor> got;
    while (auto n = stream.next()) got.push_back(*n);
    REQUIRE(got.size() == set->size());
    std::vector<Neighbor> want;
    for (std::size_t i = 0; i < set->size(); ++i) want.push_back({set->distance(i, q), i});
    std::sort(want.begin(), want.end(), [](const Neighbor& a, const Neighbor& b) {
      return a.dist < b.dist || (a.dist == b.dist && a.id < b.id);
    });
    for (std::size_t i = 0; i < want.size(); ++i) {
      CHECK(got[i].dist == want[i].dist);
      CHECK(got[i].id == want[i].id);
    }
  }
}

TEST_CASE("distances agree with the oracle metric") {
  Rng rng(3);
  const auto set = random_cloud(rng, 100, 3);
  std::vector<double> d(set->size());
  const Point q({0.3, -0.2, 1.7});
  set->distances(q, d);
  for (std::size_t i = 0; i < set->size(); ++i) {
    CHECK(d[i] == set->distance(i, q));
    CHECK(oracle::rel_error(d[i], oracle::dist(oracle::coords(set->point(i)), oracle::coords(q))) <
          1e-15);
  }
}

TEST_CASE("ball localization") {
  // For p in A and d(p, x) < tau, the points of A within 2 tau of p
  // already realise d(x, A).
  Rng rng(17);
  for (std::size_t dim : {1u, 2u}) {
    const auto set = random_cloud(rng, 400, dim);
    std::uniform_int_distribution<std::size_t> pick(0, set->size() - 1);
    std::uniform_real_distribution<double> taus(1e-3, 0.2);
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t pid = pick(rng);
      const Point p = set->point(pid);
      const double tau = taus(rng);
      const Point x = random_offset(rng, p, tau);
      if (!(set->distance(pid, x) < tau)) continue;
      double local = std::numeric_limits<double>::infinity();
      for (std::size_t a = 0; a < set->size(); ++a) {
        if (set->distance(a, p) < 2.0 * tau) local = std::min(local, set->distance(a, x));
      }
      CHECK(local == set->nearest(x).rho);
    }
  }
}

TEST_CASE("bounded functions validate input") {
  const auto a = line_set({0.0, 1.0});
  CHECK_THROWS_AS(BoundedFunction(a, {1.0}), InputError);
  CHECK_THROWS_AS(BoundedFunction(a, {1.0, std::nan("")}), InputError);
  const auto b = line_set({0.0, 1.0});
  CHECK_THROWS_AS(BoundedFunction(a, {1.0, 2.0}) + BoundedFunction(b, {1.0, 2.0}), InputError);
  CHECK_THROWS_AS(reciprocal(BoundedFunction(a, {0.0, 2.0})), InputError);
}

TEST_CASE("lattice examples") {
  const auto a = line_set({0.0, 1.0});
  const BoundedFunction phi(a, {-1.0, 2.0});
  CHECK(pos_part(phi).values()[0] == 0.0);
  CHECK(pos_part(phi).values()[1] == 2.0);
  CHECK(neg_part(phi).values()[0] == 1.0);
  CHECK(neg_part(phi).values()[1] == 0.0);
  CHECK(sup_norm(phi) == 2.0);
  CHECK(sup_norm(BoundedFunction::constant(a, 0.0)) == 0.0);

  const BoundedFunction f(a, {1.0, 3.0});
  const BoundedFunction g(a, {2.0, 2.0});
  CHECK(join(f, g).values()[0] == 2.0);
  CHECK(join(f, g).values()[1] == 3.0);
  CHECK(meet(f, g).values()[0] == 1.0);
  CHECK(meet(f, g).values()[1] == 2.0);
}

TEST_CASE("signed parts of the counterexample function") {
  const auto set = line_sample(-1.0, 1.0, 2001);
  const auto phi = BoundedFunction::from(set, [](const Point& a) { return (3.0 * a[0] + 1.0) / 4.0; });
  const auto psi = BoundedFunction::from(set, [](const Point& a) { return (3.0 * a[0] - 1.0) / 4.0; });
  const auto pos = pos_part(phi);
  const auto neg = neg_part(phi);
  for (std::size_t i = 0; i < set->size(); ++i) {
    const double v = (3.0 * set->point(i)[0] + 1.0) / 4.0;
    CHECK(pos[i] == std::max(v, 0.0));
    CHECK(neg[i] == std::max(-v, 0.0));
  }
  CHECK(sup_distance(phi, psi) == 0.5);
  CHECK(sup_norm(phi - psi) == 0.5);
}

TEST_CASE("lattice identities are exact") {
  Rng rng(23);
  const auto set = random_cloud(rng, 500, 2);
  for (int t = 0; t < 20; ++t) {
    const auto phi = random_function(rng, set, -3.0, 2.0);
    const auto pos = pos_part(phi);
    const auto neg = neg_part(phi);
    const auto sum = pos - neg;
    const auto mag = pos + neg;
    const auto a = abs(phi);
    for (std::size_t i = 0; i < set->size(); ++i) {
      CHECK(sum[i] == phi[i]);
      CHECK(mag[i] == a[i]);
      CHECK(pos[i] * neg[i] == 0.0);
    }
  }
}

TEST_CASE("sup and inf move by at most the sup distance") {
  Rng rng(29);
  const auto set = random_cloud(rng, 200, 2);
  for (int t = 0; t < 200; ++t) {
    const auto g = random_function(rng, set, -2.0, 2.0);
    const auto h = random_function(rng, set, -1.0, 3.0);
    const double d = sup_distance(g, h);
    CHECK(std::fabs(g.min() - h.min()) <= d);
    CHECK(std::fabs(g.max() - h.max()) <= d);
  }
}
