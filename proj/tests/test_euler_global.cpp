#include <doctest.h>

#include <cmath>

#include "repzeta/errors.hpp"
#include "repzeta/euler_global.hpp"
#include "repzeta/local_sl2.hpp"

using namespace repzeta;
using namespace repzeta::euler;

TEST_CASE("partial products") {
  EulerProductSpec only3;
  only3.prime_bound = 3;
  CHECK(euler_partial_product(only3, 2.5) ==
        doctest::Approx(local_sl2::evaluate_local(local_sl2::sl2_local_factor(3), 2.5)).epsilon(1e-14));
  EulerProductSpec empty;
  CHECK(euler_partial_product(empty, 2.5) == 1.0);
  EulerProductSpec p100;
  p100.prime_bound = 100;
  CHECK(p100.primes().size() == 24);
  p100.excluded = {3, 5};
  CHECK(p100.primes().size() == 22);
  CHECK_THROWS_AS(euler_partial_product(p100, 1.0, Mode::Scan), PreconditionError);
  CHECK_THROWS_AS(euler_partial_product(p100, 2.0), PreconditionError);
  CHECK_NOTHROW(euler_partial_product(p100, 2.0, Mode::Scan));
}

TEST_CASE("archimedean factor") {
  EulerProductSpec spec;
  spec.prime_bound = 10;
  const double finite = euler_partial_product(spec, 2.5);
  spec.archimedean = ArchimedeanFactor{rootsys::build_root_datum(rootsys::Series::A, 1), 2, 100000};
  const auto prod = euler_product(spec, 2.5);
  CHECK(prod.archimedean_truncated);
  const double zeta25 = riemann_zeta_ref(2.5);
  CHECK(prod.value == doctest::Approx(finite * zeta25 * zeta25).epsilon(1e-6));
}

TEST_CASE("sandwich") {
  CHECK(sandwich_check(100, 2.5).holds);
  CHECK(sandwich_check(1000, 2.1).holds);
  for (double s : {2.1, 2.25, 2.5, 2.75, 3.0})
    for (std::uint64_t p : {100, 1000}) {
      const auto r = sandwich_check(p, s);
      CHECK(r.holds);
      CHECK(r.lower < r.value);
      CHECK(r.value < r.upper);
    }
  CHECK_THROWS_AS(sandwich_check(100, 2.0), PreconditionError);
  CHECK_THROWS_AS(sandwich_check(100, 3.5), PreconditionError);
  CHECK_THROWS_AS(sandwich_check(2, 2.5), PreconditionError);
}

TEST_CASE("divergence scan at s = 2") {
  const auto two = divergence_scan({100, 1000});
  CHECK(two.strictly_increasing);
  CHECK(two.ratio > 1.05);
  const auto one = divergence_scan({100});
  CHECK_FALSE(one.evidence);
  const auto wide = divergence_scan({10, 100, 1000, 10000});
  CHECK(wide.strictly_increasing);
  const auto grid = divergence_scan({100, 1000, 10000});
  CHECK(grid.evidence);
  CHECK(grid.ratio > 1.15);
  CHECK_THROWS_AS(divergence_scan({1000, 100}), PreconditionError);
}

TEST_CASE("interior convergence") {
  for (double s : {2.25, 2.5, 3.0}) {
    double previous = 0;
    for (std::uint64_t p : {10, 100, 1000, 10000}) {
      EulerProductSpec spec;
      spec.prime_bound = p;
      const double v = euler_partial_product(spec, s);
      CHECK(v > previous);
      previous = v;
    }
    CHECK(cauchy_tail_check(1000, 10000, s));
  }
}

TEST_CASE("growth near the boundary stays inside the exponent window") {
  double previous = 0;
  for (double s : {2.5, 2.2, 2.1, 2.05, 2.02}) {
    EulerProductSpec spec;
    spec.prime_bound = 1000;
    const double log_product = euler_product(spec, s).log_value;
    const double log_zeta = log_partial_zeta_product(1000, s);
    CAPTURE(s);
    CHECK(log_product >= (0.5 - 0.1) * log_zeta);
    CHECK(log_product <= 100 * log_zeta);
    CHECK(log_product > previous);
    previous = log_product;
  }
}

TEST_CASE("Riemann zeta reference") {
  CHECK(riemann_zeta_ref(2.0) == doctest::Approx(M_PI * M_PI / 6).epsilon(1e-12));
  CHECK(riemann_zeta_ref(10.0) == doctest::Approx(1.0009945751278180853).epsilon(1e-12));
  CHECK(riemann_zeta_ref(4.0) == doctest::Approx(std::pow(M_PI, 4) / 90).epsilon(1e-12));
  // direct summation with an integral tail bound as an oracle
  for (double s : {1.5, 3.3}) {
    double sum = 0;
    const int n = 2000000;
    for (int i = n; i >= 1; --i) sum += std::pow(i, -s);
    sum += std::pow(n, 1 - s) / (s - 1) - 0.5 * std::pow(n, -s);
    CHECK(riemann_zeta_ref(s) == doctest::Approx(sum).epsilon(1e-10));
  }
  CHECK_THROWS_AS(riemann_zeta_ref(1.0), PreconditionError);
}
