#include <doctest.h>

#include <cmath>

#include "repzeta/errors.hpp"
#include "repzeta/symmetric.hpp"

using namespace repzeta;
using namespace repzeta::symmetric;

namespace {
BigInt factorial(unsigned k) {
  BigInt f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

// Degree via the determinantal (Frobenius) formula k! prod(l_i - l_j) / prod l_i!
BigInt frobenius_degree(const Partition& shape) {
  const std::size_t n = shape.size();
  unsigned k = 0;
  for (auto x : shape) k += x;
  std::vector<long> l(n);
  for (std::size_t i = 0; i < n; ++i) l[i] = static_cast<long>(shape[i] + (n - 1 - i));
  BigInt num = factorial(k), den = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) num *= l[i] - l[j];
    den *= factorial(static_cast<unsigned>(l[i]));
  }
  return num / den;
}

std::size_t partition_count(unsigned k) {
  std::vector<std::size_t> p(k + 1, 0);
  p[0] = 1;
  for (unsigned part = 1; part <= k; ++part)
    for (unsigned n = part; n <= k; ++n) p[n] += p[n - part];
  return p[k];
}
}  // namespace

TEST_CASE("symmetric group censuses") {
  CHECK(sn_degrees(4).to_string() == "{1:2, 2:1, 3:2}");
  CHECK(sn_degrees(1).to_string() == "{1:1}");
  CHECK(sn_degrees(5).to_string() == "{1:2, 4:2, 5:2, 6:1}");
  CHECK_THROWS_AS(sn_degrees(0), PreconditionError);
  CHECK_THROWS_AS(sn_degrees(37), PreconditionError);
}

TEST_CASE("alternating group censuses") {
  CHECK(an_degrees(4).to_string() == "{1:3, 3:1}");
  CHECK(an_degrees(5).to_string() == "{1:1, 3:2, 4:1, 5:1}");
  CHECK(an_degrees(2).to_string() == "{1:1}");
  CHECK_THROWS_AS(an_degrees(1), PreconditionError);
}

TEST_CASE("hook lengths agree with the determinantal formula") {
  for (unsigned k = 1; k <= 14; ++k) {
    const auto parts = partitions(k);
    CHECK(parts.size() == partition_count(k));
    for (const auto& shape : parts) {
      CHECK(hook_degree(shape) == frobenius_degree(shape));
      CHECK(hook_degree(shape) == hook_degree(conjugate(shape)));
      CHECK(conjugate(conjugate(shape)) == shape);
    }
  }
}

TEST_CASE("mass and count identities") {
  for (unsigned k = 2; k <= 30; ++k) {
    CAPTURE(k);
    CHECK(sn_degrees(k).mass() == factorial(k));
    CHECK(an_degrees(k).mass() == factorial(k) / 2);
    const auto table = partition_table(k);
    CHECK(an_degrees(k).irrep_count() == table.conjugate_pair_count() + 2 * table.self_conjugate_count());
  }
}

TEST_CASE("alternating zeta values") {
  CHECK(ak_zeta(5, 1.0) == doctest::Approx(1 + 2.0 / 3 + 0.25 + 0.2));
  for (unsigned k : {5u, 10u, 20u}) CHECK(ak_zeta(k, 50.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ak_zeta(12, 1.0) < ak_zeta(6, 1.0));
  for (unsigned k = 9; k <= 30; ++k) CHECK(ak_zeta(k, 1.0) < ak_zeta(k - 1, 1.0));
  CHECK_THROWS_AS(ak_zeta(4, 1.0), PreconditionError);
  CHECK_THROWS_AS(ak_zeta(6, 0.0), PreconditionError);
}

TEST_CASE("smallest nontrivial alternating degree") {
  for (unsigned k = 9; k <= 30; ++k) CHECK(an_degrees(k).entries()[1].degree == k - 1);
}

TEST_CASE("cumulative bound from the zeta value") {
  CHECK(rbound_check(an_degrees(5), 0.9));
  CHECK(rbound_check(DegreeCensus(std::map<BigInt, BigInt>{{1, 1}}), 0.3));
  CHECK(rbound_check(an_degrees(10), 0.5));
  for (unsigned k = 5; k <= 20; ++k) {
    CHECK(rbound_check(an_degrees(k), 0.5));
    CHECK(rbound_check(an_degrees(k), 0.9));
  }
  // the bound holds for any census, however lopsided
  CHECK(rbound_check(DegreeCensus(std::map<BigInt, BigInt>{{1, 1}, {1000, 1000000}}), 0.5));
  CHECK_THROWS_AS(rbound_check(an_degrees(5), 1.0), PreconditionError);
  CHECK_THROWS_AS(rbound_check(an_degrees(5), 0.0), PreconditionError);
}

TEST_CASE("zeta of a direct power") {
  const auto a5 = an_degrees(5);
  auto prod = a5;
  for (unsigned l = 2; l <= 3; ++l) {
    prod = product_census(prod, a5);
    for (double s : {0.5, 1.0, 2.0})
      CHECK(prod.zeta(s) == doctest::Approx(power_zeta(a5.zeta(s), l)).epsilon(1e-12));
    CHECK(prod.mass() == pow(BigInt(60), l));
  }
}
