#include "repzeta/linalg_mod.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "repzeta/numtheory.hpp"

namespace repzeta::linalg {

using nt::inv_mod;
using nt::mul_mod;

Mat zeros(std::size_t rows, std::size_t cols) {
  return Mat(rows, std::vector<std::uint64_t>(cols, 0));
}

Mat identity(std::size_t n) {
  Mat m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

namespace {

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : a + (m - b);
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  const std::uint64_t s = a + b;
  return s >= m ? s - m : s;
}

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(Mat& a, std::uint64_t p) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const std::uint64_t inv = inv_mod(a[r][c] % p, p);
    for (auto& x : a[r]) x = mul_mod(x % p, inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const std::uint64_t f = a[i][c] % p;
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        a[i][j] = sub_mod(a[i][j] % p, mul_mod(f, a[r][j], p), p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank_mod_prime(Mat a, std::uint64_t p) { return echelon(a, p).size(); }

std::vector<std::vector<std::uint64_t>> nullspace_mod_prime(Mat a, std::uint64_t p) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  const auto pivots = echelon(a, p);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint64_t> v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = (p - a[r][f] % p) % p;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::uint64_t det_mod_prime(Mat a, std::uint64_t p) {
  const std::size_t n = a.size();
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] % p == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = (p - det) % p;
    }
    const std::uint64_t pv = a[c][c] % p;
    det = mul_mod(det, pv, p);
    const std::uint64_t inv = inv_mod(pv, p);
    for (std::size_t i = c + 1; i < n; ++i) {
      const std::uint64_t f = mul_mod(a[i][c] % p, inv, p);
      if (f == 0) continue;
      for (std::size_t j = c; j < n; ++j) {
        a[i][j] = sub_mod(a[i][j] % p, mul_mod(f, a[c][j] % p, p), p);
      }
    }
  }
  return det;
}

std::vector<std::uint64_t> charpoly_mod_prime(Mat h, std::uint64_t p) {
  const std::size_t n = h.size();
  for (auto& row : h)
    for (auto& x : row) x %= p;
  // Similarity transform to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && h[piv][m - 1] == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      std::swap(h[piv], h[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][piv], h[r][m]);
    }
    const std::uint64_t inv = inv_mod(h[m][m - 1], p);
    for (std::size_t i = m + 1; i < n; ++i) {
      const std::uint64_t u = mul_mod(h[i][m - 1], inv, p);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h[i][j] = sub_mod(h[i][j], mul_mod(u, h[m][j], p), p);
      for (std::size_t r = 0; r < n; ++r) h[r][m] = add_mod(h[r][m], mul_mod(u, h[r][i], p), p);
    }
  }
  // polys[m] = charpoly of the leading m x m block.
  std::vector<std::vector<std::uint64_t>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<std::uint64_t> cur(m + 1, 0);
    const auto& prev = polys[m - 1];
    const std::uint64_t diag = h[m - 1][m - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      cur[d + 1] = add_mod(cur[d + 1], prev[d], p);
      cur[d] = sub_mod(cur[d], mul_mod(diag, prev[d], p), p);
    }
    std::uint64_t sub_prod = 1;
    for (std::size_t i = m - 1; i-- > 0;) {
      sub_prod = mul_mod(sub_prod, h[i + 1][i], p);
      const std::uint64_t coef = mul_mod(h[i][m - 1], sub_prod, p);
      if (coef == 0) continue;
      const auto& q = polys[i];
      for (std::size_t d = 0; d < q.size(); ++d) cur[d] = sub_mod(cur[d], mul_mod(coef, q[d], p), p);
    }
    polys[m] = std::move(cur);
  }
  return polys[n];
}

LocalSmith local_smith(Mat a, std::uint64_t p, unsigned precision) {
  const std::uint64_t mod = nt::pow_u64(p, precision);
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (auto& row : a)
    for (auto& x : row) x %= mod;

  LocalSmith out;
  out.p = p;
  out.precision = precision;
  out.column_transform = identity(cols);
  out.valuations.assign(cols, precision);
  Mat& v = out.column_transform;

  auto val = [&](std::uint64_t x) {
    if (x == 0) return precision;
    unsigned e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    return e;
  };

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    unsigned best = precision;
    std::size_t bi = t, bj = t;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        const unsigned e = val(a[i][j]);
        if (e < best) {
          best = e;
          bi = i;
          bj = j;
        }
      }
    }
    if (best == precision) break;  // remaining block is zero
    std::swap(a[bi], a[t]);
    if (bj != t) {
      for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][bj], a[i][t]);
      for (std::size_t i = 0; i < cols; ++i) std::swap(v[i][bj], v[i][t]);
    }
    const std::uint64_t pe = nt::pow_u64(p, best);
    const std::uint64_t unit = a[t][t] / pe;  // coprime to p
    const std::uint64_t unit_inv = inv_mod(unit % mod, mod);
    // Row scaling: a[t] *= unit^{-1}, pivot becomes p^best.
    for (auto& x : a[t]) x = mul_mod(x, unit_inv, mod);
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (a[i][t] == 0) continue;
      const std::uint64_t f = a[i][t] / pe;  // exact: valuation >= best
      for (std::size_t j = t; j < cols; ++j) a[i][j] = sub_mod(a[i][j], mul_mod(f, a[t][j], mod), mod);
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (a[t][j] == 0) continue;
      const std::uint64_t f = a[t][j] / pe;
      for (std::size_t i = 0; i < rows; ++i) a[i][j] = sub_mod(a[i][j], mul_mod(f, a[i][t], mod), mod);
      for (std::size_t i = 0; i < cols; ++i) v[i][j] = sub_mod(v[i][j], mul_mod(f, v[i][t], mod), mod);
    }
    out.valuations[t] = best;
  }
  return out;
}

unsigned kernel_exponent(const LocalSmith& smith) {
  unsigned e = 0;
  for (unsigned v : smith.valuations) e += std::min(v, smith.precision);
  return e;
}

BigInt determinant(IntMat a) {
  // Fraction-free Bareiss elimination.
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<BigInt> integer_smith_diagonal(IntMat a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  const std::size_t steps = std::min(rows, cols);
  std::vector<BigInt> diag;
  for (std::size_t t = 0; t < steps; ++t) {
    // Pivot: smallest nonzero absolute value in the remaining block.
    while (true) {
      std::size_t bi = rows, bj = cols;
      BigInt best = 0;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] == 0) continue;
          const BigInt mag = abs(a[i][j]);
          if (bi == rows || mag < best) {
            best = mag;
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == rows) {
        for (std::size_t r = t; r < steps; ++r) diag.push_back(0);
        return diag;
      }
      std::swap(a[bi], a[t]);
      for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][bj], a[i][t]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const BigInt q = a[i][t] / a[t][t];
        if (q != 0)
          for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const BigInt q = a[t][j] / a[t][t];
        if (q != 0)
          for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: the pivot must divide the rest of the block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t c = t; c < cols; ++c) a[t][c] += a[i][c];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

}  // namespace repzeta::linalg
