#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "repzeta/rootsys.hpp"

namespace repzeta::euler {

// Archimedean factor: the Witten zeta of `datum`, truncated at degree
// `census_bound`, raised to `exponent` (the number of archimedean places).
struct ArchimedeanFactor {
  rootsys::RootDatum datum;
  unsigned exponent = 1;
  std::uint64_t census_bound = 100000;
};

// Product over odd primes p <= prime_bound, p not in `excluded`, of the
// SL_2(Z_p) local factors, times an optional archimedean factor.
struct EulerProductSpec {
  std::optional<ArchimedeanFactor> archimedean;
  std::uint64_t prime_bound = 0;
  std::vector<std::uint64_t> excluded;

  void validate() const;
  std::vector<std::uint64_t> primes() const;
};

enum class Mode { Strict, Scan };

struct EulerProduct {
  double value = 1.0;
  double log_value = 0.0;
  std::size_t factors = 0;
  bool archimedean_truncated = false;
};

// Strict mode needs s > 2; scan mode allows 1 < s <= 2. Logs of the
// factors are summed in increasing prime order.
EulerProduct euler_product(const EulerProductSpec& spec, double s, Mode mode = Mode::Strict);
double euler_partial_product(const EulerProductSpec& spec, double s, Mode mode = Mode::Strict);

struct SandwichResult {
  bool holds = false;
  double lower = 0.0;  // prod (1 - p^(1-s))^(-1/2)
  double value = 0.0;
  double upper = 0.0;  // prod (1 - p^(1-s))^(-100)
};

// s in (2, 3], P >= 3.
SandwichResult sandwich_check(std::uint64_t prime_bound, double s);

// log prod_{p odd <= P} (1 - p^(1-s))^(-1), the partial zeta(s-1) product.
double log_partial_zeta_product(std::uint64_t prime_bound, double s);

inline constexpr double kDefaultGrowthThreshold = 1.15;

struct DivergenceScan {
  std::vector<std::uint64_t> grid;
  std::vector<double> products;
  bool strictly_increasing = false;
  double ratio = 1.0;     // last / first
  bool evidence = false;  // increasing and ratio > threshold; false for one point
};

DivergenceScan divergence_scan(const std::vector<std::uint64_t>& prime_grid, double s = 2.0,
                               double growth_threshold = kDefaultGrowthThreshold);

// |prod(P2) - prod(P1)| < 10 P1^(2-s) for P1 < P2, s >= 2.25.
bool cauchy_tail_check(std::uint64_t p1, std::uint64_t p2, double s);

// Riemann zeta for real s > 1 (Euler-Maclaurin, relative error < 1e-12).
double riemann_zeta_ref(double s);

}  // namespace repzeta::euler
