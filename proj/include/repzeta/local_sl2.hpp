#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "repzeta/census.hpp"

namespace repzeta::local_sl2 {

struct FactorTerm {
  BigInt degree;
  BigInt multiplicity;
  std::string label;  // closed-form expression of the degree, e.g. "(q+1)/2"
};

// Zeta function of SL_2(O) for a local ring O with odd residue field of
// size q:
//   head(s) + tail(s) / (1 - q^(1-s)),
// head and tail finite Dirichlet polynomials. Terms are kept unmerged.
struct LocalFactorSL2 {
  std::uint64_t q = 0;
  std::vector<FactorTerm> head_terms;
  std::vector<FactorTerm> tail_terms;
  std::uint64_t tail_ratio = 0;  // degree and multiplicity both scale by q per level

  // Head terms merged into a census (irreducibles of level 1).
  DegreeCensus head_census() const;
};

struct LevelCensus {
  std::uint64_t q = 0;
  unsigned level = 0;
  DegreeCensus census;
};

struct BoundsCheck {
  bool exact = false;
  bool lower_ok = false;
  bool upper_ok = false;
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

// Throws PreconditionError unless q is an odd prime power >= 3.
void require_odd_prime_power(std::uint64_t q);

LocalFactorSL2 sl2_local_factor(std::uint64_t q);
double evaluate_local(const LocalFactorSL2& factor, double s);
// Exact value at an integer s >= 2.
Rational evaluate_local_exact(const LocalFactorSL2& factor, unsigned s);

// Irreducibles of SL_2(O / pi^k): head at level 1, tail family j at level j+2.
LevelCensus level_census(std::uint64_t q, unsigned k);

// (q+4) + (q^2+3q)(q^(k-1)-1)/(q-1)
BigInt irrep_count(std::uint64_t q, unsigned k);

// |SL_2(O / pi^k)| = q^(3(k-1)) (q^3 - q)
BigInt sl2_order(std::uint64_t q, unsigned k);

// (1 - q^(1-s))^(-1/2) < Z(s) < (1 - q^(1-s))^(-100), for s in [2, 3].
// Integer s is decided in exact rational arithmetic, other s in double.
BoundsCheck factor_bounds_check(std::uint64_t q, double s);

}  // namespace repzeta::local_sl2
