#include <doctest.h>

#include <cmath>
#include <map>

#include "repzeta/errors.hpp"
#include "repzeta/rootsys.hpp"
#include "repzeta/witten.hpp"

using namespace repzeta;
using rootsys::Series;

namespace {

// Full cube scan a_i < N; valid because dim >= 1 + max a_i, which is asserted.
DegreeCensus cube_oracle(const rootsys::RootDatum& d, std::uint64_t n) {
  std::map<BigInt, BigInt> counts;
  std::vector<std::uint64_t> a(d.rank, 0);
  while (true) {
    const BigInt v = rootsys::weyl_dimension(d, rootsys::DominantWeight{a});
    const std::uint64_t top = *std::max_element(a.begin(), a.end());
    REQUIRE(v >= BigInt(top + 1));
    if (v <= n) counts[v] += 1;
    std::size_t i = 0;
    while (i < a.size() && ++a[i] >= n) a[i++] = 0;
    if (i == a.size()) break;
  }
  return DegreeCensus(counts);
}

}  // namespace

TEST_CASE("SL2 census is the positive integers") {
  const auto a1 = rootsys::build_root_datum(Series::A, 1);
  const auto c = witten::enumerate_dimensions(a1, 10);
  REQUIRE(c.distinct_degrees() == 10);
  for (int i = 0; i < 10; ++i) {
    CHECK(c.entries()[i].degree == i + 1);
    CHECK(c.entries()[i].multiplicity == 1);
  }
  CHECK(c.truncation_bound() == BigInt(10));
}

TEST_CASE("small censuses") {
  for (auto [s, r] : rootsys::irreducible_types(4)) {
    const auto c = witten::enumerate_dimensions(rootsys::build_root_datum(s, r), 1);
    CHECK(c.to_string() == "{1:1}");
  }
  const auto a2 = rootsys::build_root_datum(Series::A, 2);
  CHECK(witten::enumerate_dimensions(a2, 3).to_string() == "{1:1, 3:2}");
  CHECK_THROWS_AS(witten::enumerate_dimensions(a2, 0), PreconditionError);
}

TEST_CASE("partial sums") {
  const auto a1 = rootsys::build_root_datum(Series::A, 1);
  double harmonic = 0;
  for (int n = 1000; n >= 1; --n) harmonic += 1.0 / n;
  CHECK(witten::witten_partial_sum(witten::enumerate_dimensions(a1, 1000), 1.0) ==
        doctest::Approx(harmonic).epsilon(1e-12));
  CHECK(witten::witten_partial_sum(DegreeCensus(std::map<BigInt, BigInt>{{1, 1}}), 3.7) == 1.0);
  const auto big = witten::enumerate_dimensions(a1, 1000000);
  CHECK(std::fabs(witten::witten_partial_sum(big, 2.0) - M_PI * M_PI / 6) < 1e-5);
}

TEST_CASE("enumeration agrees with the cube oracle") {
  struct Case {
    Series s;
    int r;
    std::uint64_t n;
  };
  for (auto c : {Case{Series::A, 2, 2000}, Case{Series::B, 2, 2000}, Case{Series::G, 2, 2000},
                 Case{Series::A, 3, 200}, Case{Series::B, 3, 200}, Case{Series::C, 3, 200}}) {
    const auto d = rootsys::build_root_datum(c.s, c.r);
    CAPTURE(d.name());
    CHECK(witten::enumerate_dimensions(d, c.n) == cube_oracle(d, c.n));
  }
}

TEST_CASE("abscissa estimates") {
  const auto a1 = rootsys::build_root_datum(Series::A, 1);
  const auto e1 = witten::abscissa_estimate(witten::enumerate_dimensions(a1, 100000));
  CHECK(std::fabs(e1.slope - 1.0) < 0.05);
  CHECK(e1.sample_points.size() == witten::kAbscissaSamples);
  const auto a2 = rootsys::build_root_datum(Series::A, 2);
  const auto e2 = witten::abscissa_estimate(witten::enumerate_dimensions(a2, 100000));
  CHECK(std::fabs(e2.slope - 2.0 / 3) < 0.10);
  CHECK(std::isfinite(e2.standard_error));
  CHECK_THROWS_AS(witten::abscissa_estimate(DegreeCensus(std::map<BigInt, BigInt>{{1, 1}, {2, 1}, {3, 1}})), PreconditionError);
}

TEST_CASE("dyadic blocks") {
  const auto a1 = rootsys::build_root_datum(Series::A, 1);
  double expected = 0;
  for (int a = 33; a <= 64; ++a) expected += 1.0 / (a + 1);
  CHECK(witten::dyadic_block_sum(a1, 1.0, 5) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(witten::dyadic_block_sum(a1, 2.0, 8) < 0.004);
  CHECK(witten::dyadic_block_sum(a1, 1.0, 0) == doctest::Approx(1.0 / 3));
  for (unsigned j = 1; j <= 10; ++j) CHECK(witten::dyadic_block_sum(a1, 1.0, j) >= 0.3);
  CHECK_THROWS_AS(witten::dyadic_block_sum(a1, 1.0, 13), PreconditionError);
  const auto a3 = rootsys::build_root_datum(Series::A, 3);
  CHECK_THROWS_AS(witten::dyadic_block_sum(a3, 1.0, 9, 1000), BudgetError);
}

TEST_CASE("tails shrink above the abscissa") {
  for (auto [s, r] : {std::pair{Series::A, 1}, std::pair{Series::A, 2}}) {
    const auto d = rootsys::build_root_datum(s, r);
    const double exponent = rootsys::rank_kappa_ratio(d).convert_to<double>() + 0.25;
    double previous = 1.0;
    for (std::uint64_t n : {1000ULL, 10000ULL, 100000ULL}) {
      const auto c = witten::enumerate_dimensions(d, n);
      const double tail = witten::census_window_sum(c, exponent, BigInt(n / 2), BigInt(n));
      const double fraction = tail / witten::witten_partial_sum(c, exponent);
      CAPTURE(n);
      CHECK(fraction < 0.15);
      CHECK(fraction < previous);
      previous = fraction;
    }
  }
}
