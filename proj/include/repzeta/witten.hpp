#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "repzeta/census.hpp"
#include "repzeta/rootsys.hpp"

namespace repzeta::witten {

struct AbscissaEstimate {
  double slope = 0.0;
  double standard_error = 0.0;
  // (log n, log R_n) pairs used by the fit.
  std::vector<std::pair<double, double>> sample_points;
  std::string window;
};

inline constexpr std::size_t kAbscissaMinDegrees = 8;
inline constexpr std::size_t kAbscissaSamples = 16;
inline constexpr std::uint64_t kDefaultBlockBudget = std::uint64_t{1} << 24;

// All degrees <= bound with multiplicity; the census carries the bound.
DegreeCensus enumerate_dimensions(const rootsys::RootDatum& datum, std::uint64_t bound);

double witten_partial_sum(const DegreeCensus& census, double s);

// Least-squares slope of log R_n against log n over 16 geometrically spaced
// n in [sqrt(N), N], N the census truncation bound (or its largest degree).
AbscissaEstimate abscissa_estimate(const DegreeCensus& census);

// Sum of dim(V_lambda)^(-s) over all lambda with 2^j < a_i <= 2^(j+1).
double dyadic_block_sum(const rootsys::RootDatum& datum, double s, unsigned j,
                        std::uint64_t budget = kDefaultBlockBudget);

// Sum over census degrees in (lo, hi] of multiplicity * degree^(-s).
double census_window_sum(const DegreeCensus& census, double s, const BigInt& lo, const BigInt& hi);

}  // namespace repzeta::witten
