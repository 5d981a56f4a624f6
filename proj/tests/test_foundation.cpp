#include <doctest.h>

#include <random>

#include "repzeta/census.hpp"
#include "repzeta/errors.hpp"
#include "repzeta/linalg_mod.hpp"
#include "repzeta/numtheory.hpp"

using namespace repzeta;

TEST_CASE("primes and valuations") {
  CHECK(nt::is_prime(2));
  CHECK(nt::is_prime(97));
  CHECK_FALSE(nt::is_prime(91));
  CHECK(nt::primes_up_to(30).size() == 10);
  CHECK(nt::valuation(250, 5, 10) == 3);
  CHECK(nt::valuation(0, 5, 7) == 7);
  CHECK(nt::valuation(-27, 3, 2) == 2);
  auto pp = nt::prime_power(243);
  REQUIRE(pp);
  CHECK(pp->first == 3);
  CHECK(pp->second == 5);
  CHECK_FALSE(nt::prime_power(12));
}

TEST_CASE("modular inverse round trip") {
  for (std::uint64_t m : {9ULL, 1000003ULL, 3486784401ULL}) {
    for (std::uint64_t a = 1; a < 200; ++a) {
      if (std::gcd(a, m) != 1) continue;
      CHECK(nt::mul_mod(a, nt::inv_mod(a, m), m) == 1);
    }
  }
  CHECK_THROWS(nt::inv_mod(3, 9));
}

namespace {
// Cofactor expansion as an independent determinant.
BigInt det_expand(const linalg::IntMat& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    linalg::IntMat minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(a[r][j]);
      minor.push_back(row);
    }
    total += (c % 2 ? -1 : 1) * a[0][c] * det_expand(minor);
  }
  return total;
}
}  // namespace

TEST_CASE("Bareiss determinant matches cofactor expansion") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 5;
    linalg::IntMat a(n, std::vector<BigInt>(n));
    for (auto& row : a)
      for (auto& x : row) x = entry(rng);
    CHECK(linalg::determinant(a) == det_expand(a));
  }
}

TEST_CASE("integer Smith diagonal") {
  linalg::IntMat a = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  auto d = linalg::integer_smith_diagonal(a);
  REQUIRE(d.size() == 3);
  CHECK(d[0] == 2);
  CHECK(d[1] == 6);
  CHECK(d[2] == 12);
  CHECK(d[0] * d[1] * d[2] == abs(linalg::determinant(a)));
}

TEST_CASE("local Smith form kernel sizes") {
  // diag(3, 9, 1) over Z/27: kernel 3 * 9 * 1.
  linalg::Mat a = {{3, 0, 0}, {0, 9, 0}, {0, 0, 1}};
  auto s = linalg::local_smith(a, 3, 3);
  CHECK(linalg::kernel_exponent(s) == 3);
  // Zero matrix: everything is kernel.
  auto z = linalg::local_smith(linalg::zeros(2, 2), 5, 4);
  CHECK(linalg::kernel_exponent(z) == 8);
}

TEST_CASE("local Smith kernel matches brute force") {
  std::mt19937_64 rng(5);
  const std::uint64_t p = 3, mod = 27;
  for (int trial = 0; trial < 20; ++trial) {
    linalg::Mat a = linalg::zeros(2, 3);
    for (auto& row : a)
      for (auto& x : row) x = rng() % mod * (trial % 2 ? 3 : 1) % mod;
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < mod; ++x)
      for (std::uint64_t y = 0; y < mod; ++y)
        for (std::uint64_t z = 0; z < mod; ++z) {
          bool zero = true;
          for (const auto& row : a) zero = zero && (row[0] * x + row[1] * y + row[2] * z) % mod == 0;
          count += zero;
        }
    const auto s = linalg::local_smith(a, p, 3);
    CHECK(count == nt::pow_u64(p, linalg::kernel_exponent(s)));
  }
}

TEST_CASE("prime field rank, nullspace and characteristic polynomial") {
  linalg::Mat a = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  CHECK(linalg::rank_mod_prime(a, 7) == 2);
  auto ns = linalg::nullspace_mod_prime(a, 7);
  REQUIRE(ns.size() == 1);
  for (const auto& row : a) {
    std::uint64_t s = 0;
    for (int j = 0; j < 3; ++j) s += row[j] * ns[0][j];
    CHECK(s % 7 == 0);
  }
  // det(xI - A) at x = 0 is -det A; det A = 0 here.
  auto cp = linalg::charpoly_mod_prime(a, 7);
  REQUIRE(cp.size() == 4);
  CHECK(cp[3] == 1);
  CHECK(cp[0] == 0);
  CHECK(cp[2] == (7 - 6 % 7) % 7);  // -trace
}

TEST_CASE("degree census basics") {
  DegreeCensus c({{1, 3}, {2, 3}, {3, 1}});
  CHECK(c.irrep_count() == 7);
  CHECK(c.mass() == 24);
  CHECK(c.cumulative(0) == 0);
  CHECK(c.cumulative(2) == 6);
  CHECK(c.cumulative(100) == 7);
  CHECK(c.multiplicity_of(2) == 3);
  CHECK(c.multiplicity_of(5) == 0);
  CHECK(c.to_string() == "{1:3, 2:3, 3:1}");
  CHECK(c.zeta(1.0) == doctest::Approx(3 + 1.5 + 1.0 / 3));
  CHECK(c.truncated(2).irrep_count() == 6);
  CHECK(DegreeCensus(std::map<BigInt, BigInt>{{1, 0}}).empty());
  CHECK_THROWS_AS(DegreeCensus(std::map<BigInt, BigInt>{{0, 1}}), PreconditionError);
}
