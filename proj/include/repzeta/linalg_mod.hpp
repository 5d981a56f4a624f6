#pragma once

#include <cstdint>
#include <vector>

#include "repzeta/bigint.hpp"

// Exact linear algebra over F_p, Z/p^N and Z.
namespace repzeta::linalg {

using Mat = std::vector<std::vector<std::uint64_t>>;
using IntMat = std::vector<std::vector<BigInt>>;

Mat zeros(std::size_t rows, std::size_t cols);
Mat identity(std::size_t n);

// ---- prime field ----

std::size_t rank_mod_prime(Mat a, std::uint64_t p);
// Basis of {x : a x = 0}, one vector per entry.
std::vector<std::vector<std::uint64_t>> nullspace_mod_prime(Mat a, std::uint64_t p);
std::uint64_t det_mod_prime(Mat a, std::uint64_t p);
// Coefficients c_0..c_n of det(x I - a), c_n = 1.
std::vector<std::uint64_t> charpoly_mod_prime(Mat a, std::uint64_t p);

// ---- Z/p^N (a local ring) ----

struct LocalSmith {
  std::uint64_t p = 0;
  unsigned precision = 0;  // N
  // Valuations of the diagonal entries (N means the entry is zero), one per
  // column; columns beyond the row count get N.
  std::vector<unsigned> valuations;
  // Invertible column transform: a * column_transform = row_ops^{-1} * diag.
  Mat column_transform;
};

// Smith form of an rows x cols matrix over Z/p^N (p^N < 2^62).
LocalSmith local_smith(Mat a, std::uint64_t p, unsigned precision);

// |{x in (Z/p^N)^cols : a x = 0}| as a power of p: returns the exponent.
unsigned kernel_exponent(const LocalSmith& smith);

// ---- integers ----

BigInt determinant(IntMat a);
// Invariant factors d_1 | d_2 | ... (zeros last) of an integer matrix.
std::vector<BigInt> integer_smith_diagonal(IntMat a);

}  // namespace repzeta::linalg
