#include <doctest.h>

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "extendkit/kernels.hpp"
#include "extendkit/point.hpp"

using namespace extendkit;
using namespace extendkit::kernels;

namespace {

bool same_bits(double a, double b) { return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b); }

std::vector<const KernelTable*> tables() {
  std::vector<const KernelTable*> t = {&scalar_table()};
  if (isa_supported(Isa::avx2)) t.push_back(avx2_table());
  return t;
}

}  // namespace

TEST_CASE("scalar kernels compute the documented formulas") {
  const KernelTable& k = scalar_table();
  const double xs[] = {0.0, 3.0, -1.0};
  double out[3];
  k.line_distances(xs, 3, 1.0, out);
  CHECK(out[0] == 1.0);
  CHECK(out[1] == 2.0);
  CHECK(out[2] == 2.0);
  const double c0[] = {0.0, 3.0};
  const double c1[] = {0.0, 4.0};
  const double* cols[] = {c0, c1};
  const double q[] = {0.0, 0.0};
  k.euclidean_distances(cols, 2, 2, q, out);
  CHECK(out[0] == 0.0);
  CHECK(out[1] == 5.0);

  const double phi[] = {1.0, 2.0, 0.5};
  const double dist[] = {1.0, 2.0, 4.0};
  CHECK(k.hausdorff_min(phi, dist, 3, 1.0) == 1.0);   // min(1+1, 2+2, 0.5+4) - 1
  CHECK(k.riesz_max(phi, dist, 3, 1.0) == 1.0);       // max(1, 1, 0.125)
  CHECK(k.dieudonne_min(phi, dist, 3, 1.0) == 1.0);   // min(1, 4, 2)
  CHECK(k.pasch_min(phi, dist, 3, 1.0) == 2.0);       // min(2, 4, 4.5)
  CHECK(k.inf_convolution_min(phi, dist, 3, 0.5) == 1.5);

  const double ties[] = {3.0, 1.0, 2.0, 1.0};
  const ArgMin m = k.argmin(ties, 4);
  CHECK(m.value == 1.0);
  CHECK(m.index == 1);
}

TEST_CASE("every kernel variant is bit-identical to the scalar reference") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  std::uniform_real_distribution<double> pos(0.01, 50.0);
  const KernelTable& ref = scalar_table();
  for (const KernelTable* t : tables()) {
    CAPTURE(to_string(t->isa));
    for (std::size_t n = 1; n <= 67; ++n) {
      for (std::size_t dim = 1; dim <= 5; ++dim) {
        std::vector<std::vector<double>> cols(dim, std::vector<double>(n));
        std::vector<const double*> ptrs;
        for (auto& c : cols) {
          for (double& v : c) v = u(rng);
          ptrs.push_back(c.data());
        }
        std::vector<double> q(dim);
        for (double& v : q) v = u(rng);
        std::vector<double> a(n), b(n);
        ref.euclidean_distances(ptrs.data(), dim, n, q.data(), a.data());
        t->euclidean_distances(ptrs.data(), dim, n, q.data(), b.data());
        for (std::size_t i = 0; i < n; ++i) REQUIRE(same_bits(a[i], b[i]));
        ref.line_distances(cols[0].data(), n, q[0], a.data());
        t->line_distances(cols[0].data(), n, q[0], b.data());
        for (std::size_t i = 0; i < n; ++i) REQUIRE(same_bits(a[i], b[i]));
      }
      std::vector<double> phi(n), dist(n);
      for (double& v : phi) v = pos(rng);
      for (double& v : dist) v = pos(rng);
      // Repeated values exercise the first-index rule.
      if (n > 4) dist[n / 2] = dist[n / 3];
      const double rho = *std::min_element(dist.begin(), dist.end());
      const ArgMin ra = ref.argmin(dist.data(), n);
      const ArgMin ta = t->argmin(dist.data(), n);
      CHECK(same_bits(ra.value, ta.value));
      CHECK(ra.index == ta.index);
      CHECK(same_bits(ref.hausdorff_min(phi.data(), dist.data(), n, rho),
                      t->hausdorff_min(phi.data(), dist.data(), n, rho)));
      CHECK(same_bits(ref.riesz_max(phi.data(), dist.data(), n, rho),
                      t->riesz_max(phi.data(), dist.data(), n, rho)));
      CHECK(same_bits(ref.dieudonne_min(phi.data(), dist.data(), n, rho),
                      t->dieudonne_min(phi.data(), dist.data(), n, rho)));
      CHECK(same_bits(ref.pasch_min(phi.data(), dist.data(), n, rho),
                      t->pasch_min(phi.data(), dist.data(), n, rho)));
      CHECK(same_bits(ref.inf_convolution_min(phi.data(), dist.data(), n, 1.7),
                      t->inf_convolution_min(phi.data(), dist.data(), n, 1.7)));
    }
  }
}

TEST_CASE("argmin returns the first minimal index across vector lanes") {
  for (const KernelTable* t : tables()) {
    std::vector<double> v(40, 5.0);
    v[37] = 1.0;
    v[9] = 1.0;
    v[22] = 1.0;
    const ArgMin m = t->argmin(v.data(), v.size());
    CHECK(m.value == 1.0);
    CHECK(m.index == 9);
  }
}

TEST_CASE("isa switching") {
  const Isa before = active_isa();
  set_active_isa(Isa::scalar);
  CHECK(active_isa() == Isa::scalar);
  CHECK(active().isa == Isa::scalar);
  if (isa_supported(Isa::avx2)) {
    set_active_isa(Isa::avx2);
    CHECK(active().isa == Isa::avx2);
  } else {
    CHECK_THROWS_AS(set_active_isa(Isa::avx2), InputError);
  }
  set_active_isa(before);
}
