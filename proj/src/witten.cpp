#include "repzeta/witten.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "repzeta/errors.hpp"

namespace repzeta::witten {

using rootsys::RootDatum;

namespace {

// Exact dimension, using the floating product when it is safely integral.
BigInt exact_dimension(const RootDatum& datum, const std::vector<std::uint64_t>& coeffs,
                       double approx) {
  if (approx < 1e12) {
    const double rounded = std::round(approx);
    if (std::fabs(approx - rounded) < 1e-6) return BigInt(static_cast<std::uint64_t>(rounded));
  }
  return rootsys::weyl_dimension(datum, rootsys::DominantWeight{coeffs});
}

void enumerate_from(const RootDatum& datum, std::uint64_t bound, int coord,
                    std::vector<std::uint64_t>& coeffs, std::map<BigInt, BigInt>& counts) {
  const double limit = static_cast<double>(bound) * (1.0 + 1e-9) + 0.5;
  // coeffs[coord..] are zero on entry.
  for (std::uint64_t a = 0;; ++a) {
    coeffs[coord] = a;
    const double approx = rootsys::weyl_dimension_approx(datum, coeffs);
    if (approx > limit) break;
    if (coord + 1 < datum.rank) {
      enumerate_from(datum, bound, coord + 1, coeffs, counts);
    } else {
      const BigInt dim = exact_dimension(datum, coeffs, approx);
      if (dim <= bound) counts[dim] += 1;
    }
  }
  coeffs[coord] = 0;
}

}  // namespace

DegreeCensus enumerate_dimensions(const RootDatum& datum, std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("enumerate_dimensions: bound N must be >= 1");
  std::map<BigInt, BigInt> counts;
  std::vector<std::uint64_t> coeffs(datum.rank, 0);
  // Every linear factor grows with each coordinate, so the dimension is
  // strictly monotone and a branch can be cut once it exceeds the bound.
  enumerate_from(datum, bound, 0, coeffs, counts);
  return DegreeCensus(counts, BigInt(bound));
}

double witten_partial_sum(const DegreeCensus& census, double s) { return census.zeta(s); }

AbscissaEstimate abscissa_estimate(const DegreeCensus& census) {
  if (census.distinct_degrees() < kAbscissaMinDegrees) {
    throw PreconditionError("abscissa_estimate: census has " +
                            std::to_string(census.distinct_degrees()) +
                            " distinct degrees, at least " +
                            std::to_string(kAbscissaMinDegrees) + " required");
  }
  const double top = census.truncation_bound() ? to_double(*census.truncation_bound())
                                               : to_double(census.entries().back().degree);
  const double log_hi = std::log(top);
  const double log_lo = 0.5 * log_hi;

  AbscissaEstimate est;
  std::ostringstream window;
  window << "n in [sqrt(N), N], N=" << static_cast<std::uint64_t>(top) << ", "
         << kAbscissaSamples << " geometric points";
  est.window = window.str();

  for (std::size_t i = 0; i < kAbscissaSamples; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(kAbscissaSamples - 1);
    const double n = std::floor(std::exp(log_lo + t * (log_hi - log_lo)) + 1e-9);
    const BigInt rn = census.cumulative(BigInt(static_cast<std::uint64_t>(n)));
    if (rn < 1) continue;
    est.sample_points.emplace_back(std::log(n), std::log(to_double(rn)));
  }
  const double m = static_cast<double>(est.sample_points.size());
  double sx = 0, sy = 0;
  for (const auto& [x, y] : est.sample_points) {
    sx += x;
    sy += y;
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0;
  for (const auto& [x, y] : est.sample_points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  est.slope = sxy / sxx;
  double rss = 0;
  for (const auto& [x, y] : est.sample_points) {
    const double r = y - (my + est.slope * (x - mx));
    rss += r * r;
  }
  est.standard_error = m > 2 ? std::sqrt(rss / (m - 2) / sxx) : 0.0;
  return est;
}

double dyadic_block_sum(const RootDatum& datum, double s, unsigned j, std::uint64_t budget) {
  if (j > 12) throw PreconditionError("dyadic_block_sum: j must be <= 12");
  const std::uint64_t side = std::uint64_t{1} << j;
  double terms = 1.0;
  for (int i = 0; i < datum.rank; ++i) terms *= static_cast<double>(side);
  if (terms > static_cast<double>(budget)) {
    throw BudgetError("dyadic_block_sum: block has " + std::to_string(terms) +
                          " terms, budget is " + std::to_string(budget),
                      0);
  }
  std::vector<std::uint64_t> coeffs(datum.rank, side + 1);
  CompensatedSum sum;
  while (true) {
    sum.add(std::pow(rootsys::weyl_dimension_approx(datum, coeffs), -s));
    int i = 0;
    while (i < datum.rank) {
      if (coeffs[i] < 2 * side) {
        ++coeffs[i];
        break;
      }
      coeffs[i] = side + 1;
      ++i;
    }
    if (i == datum.rank) break;
  }
  return sum.value();
}

double census_window_sum(const DegreeCensus& census, double s, const BigInt& lo,
                         const BigInt& hi) {
  CompensatedSum sum;
  for (const auto& e : census.entries()) {
    if (e.degree <= lo) continue;
    if (e.degree > hi) break;
    sum.add(to_double(e.multiplicity) * std::pow(to_double(e.degree), -s));
  }
  return sum.value();
}

}  // namespace repzeta::witten
