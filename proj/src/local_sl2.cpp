#include "repzeta/local_sl2.hpp"

#include <cmath>
#include <map>

#include "repzeta/errors.hpp"
#include "repzeta/numtheory.hpp"

namespace repzeta::local_sl2 {

void require_odd_prime_power(std::uint64_t q) {
  if (q < 3 || q % 2 == 0) {
    throw PreconditionError("q must be an odd prime power >= 3 (got " + std::to_string(q) + ")");
  }
  if (!nt::prime_power(q)) {
    throw PreconditionError("q must be a prime power (got " + std::to_string(q) + ")");
  }
}

LocalFactorSL2 sl2_local_factor(std::uint64_t q) {
  require_odd_prime_power(q);
  const BigInt Q = q;
  LocalFactorSL2 f;
  f.q = q;
  f.tail_ratio = q;
  f.head_terms = {
      {1, 1, "1"},
      {Q, 1, "q"},
      {Q + 1, (Q - 3) / 2, "q+1"},
      {(Q + 1) / 2, 2, "(q+1)/2"},
      {Q - 1, (Q - 1) / 2, "q-1"},
      {(Q - 1) / 2, 2, "(q-1)/2"},
  };
  f.tail_terms = {
      {(Q * Q - 1) / 2, 4 * Q, "(q^2-1)/2"},
      {Q * Q - Q, (Q * Q - 1) / 2, "q^2-q"},
      {Q * Q + Q, (Q - 1) * (Q - 1) / 2, "q^2+q"},
  };
  return f;
}

DegreeCensus LocalFactorSL2::head_census() const {
  std::map<BigInt, BigInt> m;
  for (const auto& t : head_terms) {
    if (t.multiplicity != 0) m[t.degree] += t.multiplicity;
  }
  return DegreeCensus(m);
}

namespace {

double term_sum(const std::vector<FactorTerm>& terms, double s) {
  CompensatedSum sum;
  for (const auto& t : terms) {
    sum.add(to_double(t.multiplicity) * std::pow(to_double(t.degree), -s));
  }
  return sum.value();
}

}  // namespace

double evaluate_local(const LocalFactorSL2& factor, double s) {
  if (!(s > 1.0)) {
    throw PreconditionError("evaluate_local: requires s > 1 (the tail diverges for s <= 1)");
  }
  const double ratio = std::pow(static_cast<double>(factor.q), 1.0 - s);
  return term_sum(factor.head_terms, s) + term_sum(factor.tail_terms, s) / (1.0 - ratio);
}

Rational evaluate_local_exact(const LocalFactorSL2& factor, unsigned s) {
  if (s < 2) throw PreconditionError("evaluate_local_exact: requires integer s >= 2");
  auto part = [s](const std::vector<FactorTerm>& terms) {
    Rational sum = 0;
    for (const auto& t : terms) sum += Rational(t.multiplicity, ipow(t.degree, s));
    return sum;
  };
  const Rational ratio(1, ipow(BigInt(factor.q), s - 1));
  return part(factor.head_terms) + part(factor.tail_terms) / (1 - ratio);
}

LevelCensus level_census(std::uint64_t q, unsigned k) {
  if (k == 0) throw PreconditionError("level_census: level k must be >= 1");
  const LocalFactorSL2 f = sl2_local_factor(q);
  std::map<BigInt, BigInt> m;
  for (const auto& t : f.head_terms) {
    if (t.multiplicity != 0) m[t.degree] += t.multiplicity;
  }
  BigInt scale = 1;
  for (unsigned level = 2; level <= k; ++level) {
    for (const auto& t : f.tail_terms) m[t.degree * scale] += t.multiplicity * scale;
    scale *= q;
  }
  return {q, k, DegreeCensus(m)};
}

BigInt irrep_count(std::uint64_t q, unsigned k) {
  require_odd_prime_power(q);
  if (k == 0) throw PreconditionError("irrep_count: level k must be >= 1");
  const BigInt Q = q;
  return (Q + 4) + (Q * Q + 3 * Q) * ((ipow(Q, k - 1) - 1) / (Q - 1));
}

BigInt sl2_order(std::uint64_t q, unsigned k) {
  if (k == 0) throw PreconditionError("sl2_order: level k must be >= 1");
  const BigInt Q = q;
  return ipow(Q, 3 * (k - 1)) * (Q * Q * Q - Q);
}

BoundsCheck factor_bounds_check(std::uint64_t q, double s) {
  require_odd_prime_power(q);
  if (!(s >= 2.0 && s <= 3.0)) {
    throw PreconditionError("factor_bounds_check: s must lie in [2, 3]");
  }
  BoundsCheck out;
  const double x = std::pow(static_cast<double>(q), 1.0 - s);
  // log(1 - x) via log1p keeps the q = 97 lower bound meaningful.
  const double log_base = -std::log1p(-x);
  out.value = evaluate_local(sl2_local_factor(q), s);
  out.lower = std::exp(0.5 * log_base);
  out.upper = std::exp(100.0 * log_base);
  const double log_value = std::log(out.value);
  out.lower_ok = log_value > 0.5 * log_base;
  out.upper_ok = log_value < 100.0 * log_base;
  if (s == std::floor(s)) {
    // Z > (1-x)^(-1/2)  <=>  Z^2 (1-x) > 1;  Z < (1-x)^(-100)  <=>  Z (1-x)^100 < 1.
    const auto si = static_cast<unsigned>(s);
    const Rational z = evaluate_local_exact(sl2_local_factor(q), si);
    const Rational one_minus_x = 1 - Rational(1, ipow(BigInt(q), si - 1));
    Rational pow100 = 1;
    for (int i = 0; i < 100; ++i) pow100 *= one_minus_x;
    out.exact = true;
    out.lower_ok = z * z * one_minus_x > 1;
    out.upper_ok = z * pow100 < 1;
  }
  return out;
}

}  // namespace repzeta::local_sl2
