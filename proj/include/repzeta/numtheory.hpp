#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace repzeta::nt {

bool is_prime(std::uint64_t n);

// (p, e) with n = p^e, or nullopt if n is not a prime power (n >= 2).
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

// p-adic valuation of a nonzero integer; returns `cap` for zero or when the
// valuation reaches `cap`.
unsigned valuation(std::int64_t value, std::uint64_t p, unsigned cap);

std::uint64_t pow_u64(std::uint64_t base, unsigned exponent);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);
// Inverse of a unit modulo m (m arbitrary); throws if not a unit.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);
std::uint64_t reduce(std::int64_t value, std::uint64_t m);

}  // namespace repzeta::nt
