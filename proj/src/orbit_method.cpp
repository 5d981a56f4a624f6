#include "repzeta/orbit_method.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "repzeta/errors.hpp"
#include "repzeta/numtheory.hpp"

namespace repzeta::orbit {

using chains::Stage;

namespace {

// Root subsystem of A_{d-1} given by an equivalence relation on 1..d:
// rank d - #blocks, positive roots sum of C(block, 2).
Stage stage_from_blocks(const std::vector<unsigned>& block_sizes, unsigned d) {
  Stage st;
  st.rank = static_cast<int>(d - block_sizes.size());
  for (unsigned b : block_sizes) st.kappa += static_cast<int>(b * (b - 1) / 2);
  return st;
}

// Stage of roots whose eigenvalue difference has valuation >= threshold.
Stage stage_at(const std::vector<unsigned>& pair_valuation, unsigned d, unsigned threshold) {
  // The relation val(iota_s - iota_t) >= threshold is an equivalence
  // (ultrametric), so blocks come from a union-find sweep.
  std::vector<unsigned> parent(d);
  std::iota(parent.begin(), parent.end(), 0U);
  auto find = [&](unsigned x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (unsigned s = 0; s < d; ++s) {
    for (unsigned t = s + 1; t < d; ++t) {
      if (pair_valuation[s * d + t] >= threshold) parent[find(s)] = find(t);
    }
  }
  std::map<unsigned, unsigned> sizes;
  for (unsigned s = 0; s < d; ++s) ++sizes[find(s)];
  std::vector<unsigned> blocks;
  for (const auto& [root, size] : sizes) blocks.push_back(size);
  return stage_from_blocks(blocks, d);
}

std::uint32_t root_mask(const std::vector<unsigned>& pair_valuation, unsigned d, unsigned threshold) {
  std::uint32_t mask = 0;
  for (unsigned s = 0; s < d; ++s)
    for (unsigned t = s + 1; t < d; ++t)
      if (pair_valuation[s * d + t] >= threshold) mask |= 1U << (s * d + t);
  return mask;
}

Stage stage_from_mask(std::uint32_t mask, unsigned d) {
  std::vector<unsigned> val(static_cast<std::size_t>(d) * d, 0);
  for (unsigned s = 0; s < d; ++s)
    for (unsigned t = s + 1; t < d; ++t)
      if (mask & (1U << (s * d + t))) val[s * d + t] = 1;
  return stage_at(val, d, 1);
}

std::vector<unsigned> pair_valuations(const std::vector<std::int64_t>& ev, std::uint64_t p,
                                      unsigned cap) {
  const unsigned d = static_cast<unsigned>(ev.size());
  std::vector<unsigned> val(static_cast<std::size_t>(d) * d, cap);
  for (unsigned s = 0; s < d; ++s) {
    for (unsigned t = s + 1; t < d; ++t) {
      const unsigned v = nt::valuation(ev[s] - ev[t], p, cap);
      val[s * d + t] = v;
      val[t * d + s] = v;
    }
  }
  return val;
}

}  // namespace

std::vector<Stage> psi_chain(const std::vector<std::int64_t>& eigenvalues, unsigned d,
                             std::uint64_t p, unsigned k) {
  if (eigenvalues.size() != d) throw PreconditionError("psi_chain: need d eigenvalues");
  if (d < 2) throw PreconditionError("psi_chain: d must be >= 2");
  if (k == 0) throw PreconditionError("psi_chain: level k must be >= 1");
  if (!nt::is_prime(p) || p == 2) throw PreconditionError("psi_chain: p must be an odd prime");
  // Only the class mod p^(k+2) matters; reduce before summing to avoid overflow.
  const auto mod = static_cast<__int128>(nt::pow_u64(p, k + 2));
  __int128 trace = 0;
  for (auto x : eigenvalues) trace += x;
  if (trace % mod != 0) {
    throw PreconditionError("psi_chain: eigenvalues must have zero trace (mod p^(k+2))");
  }
  const auto val = pair_valuations(eigenvalues, p, k);
  std::vector<Stage> chain;
  for (unsigned i = 1; i <= k; ++i) chain.push_back(stage_at(val, d, k - i));
  return chain;
}

OrbitDatum make_orbit_datum(const std::vector<std::int64_t>& eigenvalues, std::uint64_t p,
                            unsigned k) {
  OrbitDatum datum;
  datum.d = static_cast<unsigned>(eigenvalues.size());
  datum.p = p;
  datum.k = k;
  datum.eigenvalues = eigenvalues;
  datum.chain = psi_chain(eigenvalues, datum.d, p, k);
  return datum;
}

unsigned orbit_dimension_exponent(const OrbitDatum& datum) {
  const int kappa = static_cast<int>(datum.d * (datum.d - 1) / 2);
  unsigned total = 0;
  for (const Stage& st : datum.chain) total += static_cast<unsigned>(kappa - st.kappa);
  return total;
}

BigInt orbit_dimension(const OrbitDatum& datum) {
  return ipow(BigInt(datum.p), orbit_dimension_exponent(datum));
}

namespace {

using IMat = std::vector<std::vector<BigInt>>;

IMat mat_mul(const IMat& a, const IMat& b) {
  const std::size_t n = a.size();
  IMat c(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

IMat int_identity(std::size_t n) {
  IMat m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

CentralizerIndex centralizer_index_oracle(const OrbitDatum& datum, std::uint64_t conjugator_seed) {
  const unsigned d = datum.d;
  if (d > kMaxOracleDegree) {
    throw BudgetError("centralizer_index_oracle: d = " + std::to_string(d) + " exceeds budget " +
                          std::to_string(kMaxOracleDegree),
                      d);
  }
  const std::uint64_t p = datum.p;
  const unsigned k = datum.k;
  const std::uint64_t mod = nt::pow_u64(p, k);

  IMat x(d, std::vector<BigInt>(d, 0));
  for (unsigned i = 0; i < d; ++i) x[i][i] = datum.eigenvalues[i];
  if (conjugator_seed != 0) {
    // g = product of elementary matrices E + c e_ij, g^-1 accumulated in reverse.
    std::mt19937_64 rng(conjugator_seed);
    std::uniform_int_distribution<unsigned> pick(0, d - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    IMat g = int_identity(d), g_inv = int_identity(d);
    for (int step = 0; step < 3 * static_cast<int>(d); ++step) {
      const unsigned i = pick(rng), j = pick(rng);
      const int c = coef(rng);
      if (i == j || c == 0) continue;
      IMat e = int_identity(d), e_inv = int_identity(d);
      e[i][j] = c;
      e_inv[i][j] = -c;
      g = mat_mul(g, e);
      g_inv = mat_mul(e_inv, g_inv);
    }
    x = mat_mul(mat_mul(g, x), g_inv);
  }

  // Basis of trace-zero matrices: E_st (s != t), then H_i = E_ii - E_{i+1,i+1}.
  std::vector<IMat> basis;
  for (unsigned s = 0; s < d; ++s)
    for (unsigned t = 0; t < d; ++t)
      if (s != t) {
        IMat e(d, std::vector<BigInt>(d, 0));
        e[s][t] = 1;
        basis.push_back(std::move(e));
      }
  for (unsigned i = 0; i + 1 < d; ++i) {
    IMat h(d, std::vector<BigInt>(d, 0));
    h[i][i] = 1;
    h[i + 1][i + 1] = -1;
    basis.push_back(std::move(h));
  }
  const std::size_t dim = basis.size();
  linalg::Mat ad = linalg::zeros(dim, dim);
  const BigInt big_mod = mod;
  auto store = [&](std::size_t row, std::size_t col, const BigInt& value) {
    BigInt r = (BigInt(p) * value) % big_mod;
    if (r < 0) r += big_mod;
    ad[row][col] = r.convert_to<std::uint64_t>();
  };
  for (std::size_t col = 0; col < dim; ++col) {
    const IMat xb = mat_mul(x, basis[col]);
    const IMat bx = mat_mul(basis[col], x);
    std::size_t row = 0;
    for (unsigned s = 0; s < d; ++s)
      for (unsigned t = 0; t < d; ++t)
        if (s != t) store(row++, col, xb[s][t] - bx[s][t]);
    BigInt running = 0;
    for (unsigned i = 0; i + 1 < d; ++i) {
      running += xb[i][i] - bx[i][i];
      store(row++, col, running);
    }
  }
  const auto smith = linalg::local_smith(ad, p, k);
  CentralizerIndex out;
  out.kernel_exponent = linalg::kernel_exponent(smith);
  out.index_exponent = static_cast<unsigned>(dim) * k - out.kernel_exponent;
  out.index = ipow(BigInt(p), out.index_exponent);
  if (out.index_exponent % 2 != 0) {
    throw std::logic_error("centralizer_index_oracle: orbit size is not a perfect square");
  }
  return out;
}

BigInt chain_count_bound(const std::vector<Stage>& chain, unsigned d, std::uint64_t q) {
  std::int64_t e = 0;
  for (const Stage& st : chain) e += static_cast<std::int64_t>(d - 1) - st.rank;
  return ipow(BigInt(q), static_cast<std::uint64_t>(e));
}

BigInt stepwise_count_bound(const std::vector<Stage>& chain, unsigned d, std::uint64_t q) {
  std::int64_t e = static_cast<std::int64_t>(d - 1);
  for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
    e += static_cast<std::int64_t>(d - 1) - chain[j].rank;
  }
  return ipow(BigInt(q), static_cast<std::uint64_t>(e));
}

KernelCokernel kernel_cokernel_size(const linalg::IntMat& t, std::uint64_t p, unsigned r) {
  const std::size_t n = t.size();
  for (const auto& row : t) {
    if (row.size() != n) throw PreconditionError("kernel_cokernel_size: T must be square");
  }
  if (linalg::determinant(t) == 0) {
    throw PreconditionError("kernel_cokernel_size: T is singular");
  }
  const std::uint64_t mod = nt::pow_u64(p, r);
  linalg::Mat reduced = linalg::zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      BigInt v = t[i][j] % mod;
      if (v < 0) v += mod;
      reduced[i][j] = v.convert_to<std::uint64_t>();
    }
  }
  KernelCokernel out;
  out.kernel_size = ipow(BigInt(p), linalg::kernel_exponent(linalg::local_smith(reduced, p, r)));
  out.cokernel_size = 1;
  const BigInt pr = ipow(BigInt(p), r);
  for (const BigInt& f : linalg::integer_smith_diagonal(t)) out.cokernel_size *= gcd(f, pr);
  return out;
}

CensusReport census_vs_bound(unsigned d, std::uint64_t p, unsigned k, std::uint64_t budget) {
  if (d < 2 || d > 3) throw PreconditionError("census_vs_bound: d must be 2 or 3");
  if (k == 0) throw PreconditionError("census_vs_bound: level k must be >= 1");
  if (!nt::is_prime(p) || p == 2) throw PreconditionError("census_vs_bound: p must be an odd prime");
  const std::uint64_t mod = nt::pow_u64(p, k);
  std::uint64_t total = 1;
  for (unsigned i = 0; i + 1 < d; ++i) {
    total *= mod;
    if (total > budget) {
      throw BudgetError("census_vs_bound: p^(k(d-1)) exceeds enumeration budget " +
                            std::to_string(budget),
                        0);
    }
  }
  std::vector<std::uint64_t> shifts;  // scalars c with d*c = 0 mod p^k
  for (std::uint64_t c = 0; c < mod; ++c)
    if ((c * d) % mod == 0) shifts.push_back(c);

  // Keyed by the chain of root subsets (bit s*d+t set for e_s - e_t).
  std::map<std::vector<std::uint32_t>, std::uint64_t> vectors;
  // Keyed by the chain type; classes modulo scalars and permutations.
  std::map<std::vector<std::pair<int, int>>, std::set<std::vector<std::uint64_t>>> classes;
  std::vector<std::int64_t> ev(d);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    std::uint64_t sum = 0;
    for (unsigned i = 0; i + 1 < d; ++i) {
      ev[i] = static_cast<std::int64_t>(rest % mod);
      rest /= mod;
      sum += static_cast<std::uint64_t>(ev[i]);
    }
    ev[d - 1] = static_cast<std::int64_t>((mod - sum % mod) % mod);

    // Scalar mod p means level < k; those are counted at the lower level.
    bool scalar_mod_p = true;
    for (unsigned i = 1; i < d; ++i) scalar_mod_p = scalar_mod_p && (ev[i] - ev[0]) % static_cast<std::int64_t>(p) == 0;
    if (scalar_mod_p) continue;

    const auto val = pair_valuations(ev, p, k);
    std::vector<std::uint32_t> masks;
    std::vector<std::pair<int, int>> type;
    for (unsigned i = 1; i <= k; ++i) {
      masks.push_back(root_mask(val, d, k - i));
      const Stage st = stage_at(val, d, k - i);
      type.emplace_back(st.rank, st.kappa);
    }
    ++vectors[masks];

    std::vector<std::uint64_t> best;
    for (std::uint64_t c : shifts) {
      std::vector<std::uint64_t> v(d);
      for (unsigned i = 0; i < d; ++i) v[i] = (static_cast<std::uint64_t>(ev[i]) + mod - c) % mod;
      std::sort(v.begin(), v.end());
      if (best.empty() || v < best) best = v;
    }
    classes[type].insert(best);
  }

  CensusReport report;
  report.d = d;
  report.p = p;
  report.k = k;
  report.all_within_displayed = true;
  report.all_within_stepwise = true;
  for (const auto& [key, count] : vectors) {
    ChainGroup g;
    g.root_masks = key;
    for (std::uint32_t mask : key) g.chain.push_back(stage_from_mask(mask, d));
    g.vector_count = count;
    g.stepwise_bound = stepwise_count_bound(g.chain, d, p);
    g.within_stepwise = BigInt(g.vector_count) <= g.stepwise_bound;
    report.all_within_stepwise = report.all_within_stepwise && g.within_stepwise;
    report.groups.push_back(std::move(g));
  }
  for (const auto& [key, set] : classes) {
    ChainTypeGroup g;
    for (const auto& [rank, kappa] : key) g.chain.push_back({rank, kappa});
    g.class_count = set.size();
    g.displayed_bound = chain_count_bound(g.chain, d, p);
    g.within_displayed = BigInt(g.class_count) <= g.displayed_bound;
    report.all_within_displayed = report.all_within_displayed && g.within_displayed;
    report.type_groups.push_back(std::move(g));
  }
  return report;
}

}  // namespace repzeta::orbit
