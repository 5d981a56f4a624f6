#include "repzeta/euler_global.hpp"

#include <algorithm>
#include <cmath>

#include "repzeta/census.hpp"
#include "repzeta/errors.hpp"
#include "repzeta/local_sl2.hpp"
#include "repzeta/numtheory.hpp"
#include "repzeta/witten.hpp"

namespace repzeta::euler {

void EulerProductSpec::validate() const {
  if (archimedean && archimedean->census_bound == 0)
    throw PreconditionError("EulerProductSpec: archimedean census bound must be positive");
  for (auto p : excluded)
    if (p < 3 || !nt::is_prime(p)) throw PreconditionError("EulerProductSpec: excluded places must be odd primes");
}

std::vector<std::uint64_t> EulerProductSpec::primes() const {
  std::vector<std::uint64_t> out;
  for (auto p : nt::primes_up_to(prime_bound)) {
    if (p == 2) continue;
    if (std::find(excluded.begin(), excluded.end(), p) != excluded.end()) continue;
    out.push_back(p);
  }
  return out;
}

EulerProduct euler_product(const EulerProductSpec& spec, double s, Mode mode) {
  spec.validate();
  if (!(s > 1.0)) throw PreconditionError("euler_partial_product: s > 1 required");
  if (mode == Mode::Strict && !(s > 2.0))
    throw PreconditionError("euler_partial_product: s > 2 required outside scan mode");
  EulerProduct out;
  CompensatedSum log_sum;
  for (auto p : spec.primes()) {
    log_sum.add(std::log(local_sl2::evaluate_local(local_sl2::sl2_local_factor(p), s)));
    ++out.factors;
  }
  if (spec.archimedean) {
    const auto& a = *spec.archimedean;
    const auto census = witten::enumerate_dimensions(a.datum, a.census_bound);
    log_sum.add(a.exponent * std::log(witten::witten_partial_sum(census, s)));
    out.archimedean_truncated = true;
  }
  out.log_value = log_sum.value();
  out.value = std::exp(out.log_value);
  return out;
}

double euler_partial_product(const EulerProductSpec& spec, double s, Mode mode) {
  return euler_product(spec, s, mode).value;
}

double log_partial_zeta_product(std::uint64_t prime_bound, double s) {
  CompensatedSum sum;
  for (auto p : nt::primes_up_to(prime_bound))
    if (p != 2) sum.add(-std::log1p(-std::pow(static_cast<double>(p), 1.0 - s)));
  return sum.value();
}

SandwichResult sandwich_check(std::uint64_t prime_bound, double s) {
  if (!(s > 2.0 && s <= 3.0)) throw PreconditionError("sandwich_check: s must lie in (2, 3]");
  if (prime_bound < 3) throw PreconditionError("sandwich_check: prime bound must be >= 3");
  EulerProductSpec spec;
  spec.prime_bound = prime_bound;
  const auto prod = euler_product(spec, s);
  const double log_zeta = log_partial_zeta_product(prime_bound, s);
  SandwichResult out;
  out.value = prod.value;
  out.lower = std::exp(0.5 * log_zeta);
  out.upper = std::exp(100.0 * log_zeta);
  out.holds = 0.5 * log_zeta < prod.log_value && prod.log_value < 100.0 * log_zeta;
  return out;
}

DivergenceScan divergence_scan(const std::vector<std::uint64_t>& prime_grid, double s,
                               double growth_threshold) {
  for (std::size_t i = 1; i < prime_grid.size(); ++i)
    if (prime_grid[i] <= prime_grid[i - 1]) throw PreconditionError("divergence_scan: grid must increase");
  DivergenceScan out;
  out.grid = prime_grid;
  for (auto bound : prime_grid) {
    EulerProductSpec spec;
    spec.prime_bound = bound;
    out.products.push_back(euler_partial_product(spec, s, Mode::Scan));
  }
  if (out.products.size() < 2) return out;
  out.strictly_increasing = true;
  for (std::size_t i = 1; i < out.products.size(); ++i)
    if (!(out.products[i] > out.products[i - 1])) out.strictly_increasing = false;
  out.ratio = out.products.back() / out.products.front();
  out.evidence = out.strictly_increasing && out.ratio > growth_threshold;
  return out;
}

bool cauchy_tail_check(std::uint64_t p1, std::uint64_t p2, double s) {
  if (p1 >= p2) throw PreconditionError("cauchy_tail_check: P1 < P2 required");
  if (!(s >= 2.25)) throw PreconditionError("cauchy_tail_check: s >= 2.25 required");
  EulerProductSpec a, b;
  a.prime_bound = p1;
  b.prime_bound = p2;
  const double diff = std::fabs(euler_partial_product(b, s) - euler_partial_product(a, s));
  return diff < 10.0 * std::pow(static_cast<double>(p1), 2.0 - s);
}

double riemann_zeta_ref(double s) {
  if (!(s > 1.0)) throw PreconditionError("riemann_zeta_ref: s > 1 required");
  // B_2k / (2k)!
  static const double kBernoulliOverFactorial[] = {
      1.0 / 12.0,         -1.0 / 720.0,         1.0 / 30240.0,           -1.0 / 1209600.0,
      1.0 / 47900160.0,   -691.0 / 1307674368000.0, 1.0 / 74724249600.0, -3617.0 / 10670622842880000.0};
  constexpr int n = 16;
  CompensatedSum sum;
  for (int k = n - 1; k >= 1; --k) sum.add(std::pow(static_cast<double>(k), -s));
  const double big_n = n;
  sum.add(std::pow(big_n, 1.0 - s) / (s - 1.0));
  sum.add(0.5 * std::pow(big_n, -s));
  // s (s+1) ... (s+2k-2) N^(-s-2k+1)
  double rising = s;
  double power = std::pow(big_n, -s - 1.0);
  for (int k = 1; k <= 8; ++k) {
    sum.add(kBernoulliOverFactorial[k - 1] * rising * power);
    rising *= (s + 2 * k - 1) * (s + 2 * k);
    power /= big_n * big_n;
  }
  return sum.value();
}

}  // namespace repzeta::euler
