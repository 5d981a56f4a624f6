#include "repzeta/numtheory.hpp"

#include <stdexcept>

namespace repzeta::nt {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return std::make_pair(n, 1U);
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1) return std::nullopt;
  return std::make_pair(p, e);
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

unsigned valuation(std::int64_t value, std::uint64_t p, unsigned cap) {
  if (value == 0) return cap;
  std::uint64_t v = value < 0 ? static_cast<std::uint64_t>(-(value + 1)) + 1
                              : static_cast<std::uint64_t>(value);
  unsigned e = 0;
  while (e < cap && v % p == 0) {
    v /= p;
    ++e;
  }
  return e;
}

std::uint64_t pow_u64(std::uint64_t base, unsigned exponent) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exponent; ++i) r *= base;
  return r;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exponent > 0) {
    if (exponent & 1U) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exponent >>= 1U;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw std::domain_error("inv_mod: not a unit");
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce(std::int64_t value, std::uint64_t m) {
  const std::int64_t mm = static_cast<std::int64_t>(m);
  std::int64_t r = value % mm;
  if (r < 0) r += mm;
  return static_cast<std::uint64_t>(r);
}

}  // namespace repzeta::nt
