#include "repzeta/isotropic_census.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "repzeta/errors.hpp"
#include "repzeta/numtheory.hpp"

namespace repzeta::isotropic {

using nt::mul_mod;
using nt::pow_u64;

namespace {

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  const std::uint64_t s = a + b;
  return s >= m ? s - m : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : a + (m - b);
}

Mat mat_mul(const Mat& a, const Mat& b, std::uint64_t mod) {
  const std::size_t n = a.size();
  Mat c = linalg::zeros(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] = add_mod(c[i][j], mul_mod(a[i][l], b[l][j], mod), mod);
    }
  return c;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Generator of (Z/p^k)^*, p odd.
std::uint64_t primitive_root(std::uint64_t p, unsigned k) {
  std::vector<std::uint64_t> factors;
  std::uint64_t n = p - 1;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f) continue;
    factors.push_back(f);
    while (n % f == 0) n /= f;
  }
  if (n > 1) factors.push_back(n);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto f : factors)
      if (nt::pow_mod(g, (p - 1) / f, p) == 1) ok = false;
    if (!ok) continue;
    if (k >= 2 && nt::pow_mod(g, p - 1, p * p) == 1) continue;
    return g;
  }
  return 1;  // p = 2 is never requested
}

}  // namespace

Mat CensusFamily::y_block(std::uint64_t index) const {
  const std::uint64_t base = pow_u64(q, k);
  const unsigned h = half();
  Mat y = linalg::zeros(h, h);
  for (unsigned i = 0; i < h; ++i)
    for (unsigned j = 0; j < h; ++j) {
      y[i][j] = index % base;
      index /= base;
    }
  return y;
}

Mat CensusFamily::m_y_from_block(const Mat& y) const {
  const unsigned h = half();
  const std::uint64_t pk = pow_u64(q, k);
  Mat out = linalg::identity(m);
  for (unsigned i = 0; i < h; ++i) {
    out[i][i] = add_mod(1, mul_mod(pk, x_diag[i], modulus), modulus);
    out[h + i][h + i] = add_mod(1, mul_mod(pk, z_diag[i], modulus), modulus);
    for (unsigned j = 0; j < h; ++j) out[i][h + j] = y[i][j] % modulus;
  }
  return out;
}

Mat CensusFamily::m_y(std::uint64_t index) const { return m_y_from_block(y_block(index)); }

CensusFamily build_census_family(unsigned m, std::uint64_t q, unsigned k, unsigned t,
                                 std::uint64_t rep_budget) {
  if (m < 2 || m % 2) throw PreconditionError("build_census_family: m must be even and >= 2");
  if (q < 3 || !nt::is_prime(q)) throw PreconditionError("build_census_family: q must be an odd prime");
  if (k < 1 || t < 1) throw PreconditionError("build_census_family: k and t must be >= 1");
  if (k < t) throw PreconditionError("build_census_family: k >= t required");
  const unsigned n = 3 * k + 2 * t;
  if (std::log2(static_cast<double>(q)) * n > 60.0)
    throw PreconditionError("build_census_family: p^(3k+2t) exceeds 2^60");
  const std::uint64_t distinct_mod = pow_u64(q, t + 1);
  if (distinct_mod < m)
    throw PreconditionError("build_census_family: cannot choose m distinct residues mod p^(t+1)");

  CensusFamily fam;
  fam.m = m;
  fam.q = q;
  fam.k = k;
  fam.t = t;
  fam.precision = n;
  fam.modulus = pow_u64(q, n);
  const std::uint64_t pk = pow_u64(q, k);
  const std::uint64_t entry_mod = pow_u64(q, n - k);  // diagonal entries matter mod p^(N-k)

  const unsigned h = m / 2;
  const double rep_log = std::log2(static_cast<double>(pk)) * h * h;
  if (rep_log > 63.0 || pow_u64(pk, h * h) > rep_budget)
    throw BudgetError("build_census_family: q^((m^2/4)k) representatives exceed the budget", 0);
  fam.rep_count = pow_u64(pk, h * h);

  // Lexicographic search over the first m-1 entries (increasing residues
  // below p^(t+1)); the last entry is forced by det = 1.
  std::vector<std::uint64_t> choice(m - 1);
  std::iota(choice.begin(), choice.end(), 0);
  bool found = false;
  std::uint64_t last = 0;
  while (true) {
    std::uint64_t prod = 1;
    for (auto d : choice) prod = mul_mod(prod, add_mod(1, mul_mod(pk, d, fam.modulus), fam.modulus), fam.modulus);
    const std::uint64_t u = nt::inv_mod(prod, fam.modulus);  // u = 1 mod p^k
    last = ((u + fam.modulus - 1) % fam.modulus) / pk % entry_mod;
    bool distinct = true;
    for (auto d : choice)
      if (d % distinct_mod == last % distinct_mod) distinct = false;
    if (distinct) {
      found = true;
      break;
    }
    // next increasing tuple in [0, distinct_mod)
    int pos = static_cast<int>(m) - 2;
    while (pos >= 0 && choice[pos] == distinct_mod - (m - 1) + pos) --pos;
    if (pos < 0) break;
    ++choice[pos];
    for (unsigned i = pos + 1; i + 1 < m; ++i) choice[i] = choice[i - 1] + 1;
  }
  if (!found) throw PreconditionError("build_census_family: no admissible diagonal with det 1");
  choice.push_back(last);
  fam.x_diag.assign(choice.begin(), choice.begin() + h);
  fam.z_diag.assign(choice.begin() + h, choice.end());
  return fam;
}

std::size_t IntertwinerModule::rank() const {
  return static_cast<std::size_t>(
      std::count_if(order_exponents.begin(), order_exponents.end(), [](unsigned e) { return e > 0; }));
}

IntertwinerModule conjugacy_module(const Mat& m1, const Mat& m2, std::uint64_t p, unsigned precision) {
  const std::size_t m = m1.size();
  if (m2.size() != m) throw PreconditionError("conjugacy_module: size mismatch");
  const std::uint64_t mod = pow_u64(p, precision);
  const std::size_t mm = m * m;
  // Row (i,j) of M1 W - W M2 in the unknowns w_(c,b), row-major.
  Mat a = linalg::zeros(mm, mm);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto& row = a[i * m + j];
      for (std::size_t c = 0; c < m; ++c) {
        row[c * m + j] = add_mod(row[c * m + j], m1[i][c] % mod, mod);
        row[i * m + c] = sub_mod(row[i * m + c], m2[c][j] % mod, mod);
      }
    }
  const auto smith = linalg::local_smith(std::move(a), p, precision);

  IntertwinerModule out;
  out.m = static_cast<unsigned>(m);
  out.p = p;
  out.precision = precision;
  for (std::size_t col = 0; col < mm; ++col) {
    const unsigned v = std::min(smith.valuations[col], precision);
    const std::uint64_t scale = pow_u64(p, precision - v);
    std::vector<std::uint64_t> g(mm);
    for (std::size_t r = 0; r < mm; ++r) g[r] = mul_mod(smith.column_transform[r][col], scale, mod);
    out.generators.push_back(std::move(g));
    out.order_exponents.push_back(v);
    if (v == precision) out.unit_generators.push_back(col);
  }
  return out;
}

ConjugacyOutcome are_conjugate(const Mat& m1, const Mat& m2, std::uint64_t p, unsigned precision,
                               std::size_t scan_budget) {
  const auto module = conjugacy_module(m1, m2, p, precision);
  const std::size_t m = module.m;
  const std::uint64_t mod = pow_u64(p, precision);
  ConjugacyOutcome out;
  out.scan_dimension = module.unit_generators.size();
  if (out.scan_dimension > scan_budget) return out;  // Unknown
  const std::size_t dim = out.scan_dimension;

  std::vector<Mat> basis;  // reductions mod p
  for (auto idx : module.unit_generators) {
    Mat b = linalg::zeros(m, m);
    for (std::size_t r = 0; r < m * m; ++r) b[r / m][r % m] = module.generators[idx][r] % p;
    basis.push_back(std::move(b));
  }

  // Mixed-radix walk over F_p^dim: each digit step adds one basis element.
  std::vector<std::uint64_t> digits(dim, 0);
  Mat w = linalg::zeros(m, m);
  bool hit = false;
  while (true) {
    std::size_t pos = 0;
    while (pos < dim) {
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) w[i][j] = add_mod(w[i][j], basis[pos][i][j], p);
      if (++digits[pos] < p) break;
      digits[pos] = 0;
      ++pos;
    }
    if (pos == dim) break;  // wrapped around to zero
    if (linalg::det_mod_prime(w, p) != 0) {
      hit = true;
      break;
    }
  }
  if (!hit) {
    out.verdict = Verdict::NotConjugate;
    return out;
  }
  Mat lift = linalg::zeros(m, m);
  for (std::size_t b = 0; b < dim; ++b) {
    if (digits[b] == 0) continue;
    const auto& g = module.generators[module.unit_generators[b]];
    for (std::size_t r = 0; r < m * m; ++r)
      lift[r / m][r % m] = add_mod(lift[r / m][r % m], mul_mod(g[r], digits[b], mod), mod);
  }
  if (mat_mul(m1, lift, mod) != mat_mul(lift, m2, mod))
    throw std::logic_error("are_conjugate: lifted conjugator does not intertwine");
  out.verdict = Verdict::Conjugate;
  out.conjugator = std::move(lift);
  return out;
}

ClassCount distinct_class_count(const CensusFamily& family, const std::vector<std::uint64_t>& sample,
                                std::size_t scan_budget) {
  std::vector<std::uint64_t> ids = sample;
  const bool full = ids.empty();
  if (full) {
    ids.resize(family.rep_count);
    std::iota(ids.begin(), ids.end(), std::uint64_t{0});
  }
  for (auto id : ids)
    if (id >= family.rep_count) throw PreconditionError("distinct_class_count: sample index out of range");

  ClassCount out;
  out.sample_size = ids.size();
  std::vector<Mat> mats;
  mats.reserve(ids.size());
  for (auto id : ids) mats.push_back(family.m_y(id));

  UnionFind uf(ids.size());
  std::vector<std::size_t> reps;  // sample positions
  for (std::size_t i = 0; i < ids.size(); ++i) {
    bool placed = false;
    for (auto r : reps) {
      const auto res = are_conjugate(mats[r], mats[i], family.q, family.precision, scan_budget);
      if (res.verdict == Verdict::NotConjugate) continue;
      if (res.verdict == Verdict::Unknown) {
        ++out.unknown_outcomes;
      } else {
        out.joined_pairs.emplace_back(ids[r], ids[i]);
        out.join_conjugators.push_back(*res.conjugator);
      }
      uf.join(r, i);
      placed = true;
      break;
    }
    if (!placed) reps.push_back(i);
  }
  out.classes_found = reps.size();
  out.class_of.resize(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const auto root = uf.find(i);
    out.class_of[i] = static_cast<std::size_t>(std::find(reps.begin(), reps.end(), root) - reps.begin());
  }
  const unsigned h = family.half();
  const unsigned e = (h - 1) * (h - 1) * family.k;  // (m^2/4 - m + 1) k
  out.lower_bound = ipow(BigInt(family.q), e);
  out.meets_bound = BigInt(out.classes_found) >= out.lower_bound;
  out.certified = full && out.unknown_outcomes == 0;
  return out;
}

std::size_t predicted_orbit_count(const CensusFamily& family) {
  const unsigned h = family.half();
  const std::uint64_t pk = pow_u64(family.q, family.k);
  const std::uint64_t g = primitive_root(family.q, family.k) % pk;
  const std::uint64_t g_inv = nt::inv_mod(g, pk);
  UnionFind uf(family.rep_count);
  // Orbits of Y -> A Y D^-1 are generated by scaling one row by g or one column by g^-1.
  std::vector<std::uint64_t> place(h * h);
  for (unsigned i = 0; i < h * h; ++i) place[i] = pow_u64(pk, i);
  for (std::uint64_t idx = 0; idx < family.rep_count; ++idx) {
    const auto y = family.y_block(idx);
    for (unsigned line = 0; line < 2 * h; ++line) {
      std::uint64_t image = 0;
      for (unsigned i = 0; i < h; ++i)
        for (unsigned j = 0; j < h; ++j) {
          std::uint64_t v = y[i][j];
          if (line < h && i == line) v = mul_mod(v, g, pk);
          if (line >= h && j == line - h) v = mul_mod(v, g_inv, pk);
          image += v * place[i * h + j];
        }
      uf.join(idx, image);
    }
  }
  std::size_t count = 0;
  for (std::uint64_t idx = 0; idx < family.rep_count; ++idx)
    if (uf.find(idx) == idx) ++count;
  return count;
}

BlockStructure block_structure(const CensusFamily& family, const Mat& g) {
  const unsigned h = family.half();
  const std::uint64_t c_mod = pow_u64(family.q, 2 * family.k + family.t);
  const std::uint64_t pk = pow_u64(family.q, family.k);
  BlockStructure out{true, true, true};
  for (unsigned i = 0; i < h; ++i)
    for (unsigned j = 0; j < h; ++j) {
      if (g[h + i][j] % c_mod) out.lower_left_vanishes = false;
      if (i != j && g[i][j] % pk) out.upper_left_diagonal = false;
      if (i != j && g[h + i][h + j] % pk) out.lower_right_diagonal = false;
    }
  return out;
}

GammaEstimate gamma_estimate(const GammaSeries& series) {
  const auto& pts = series.points;
  if (pts.size() < 2) throw PreconditionError("gamma_estimate: at least 2 points required");
  if (series.q < 2) throw PreconditionError("gamma_estimate: base q must be >= 2");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].second <= 0) throw PreconditionError("gamma_estimate: class counts must be positive");
    if (i && (pts[i].first <= pts[i - 1].first || pts[i].second < pts[i - 1].second))
      throw PreconditionError("gamma_estimate: levels must increase and counts must be nondecreasing");
  }
  const double lq = std::log(static_cast<double>(series.q));
  const auto& a = pts[pts.size() - 2];
  const auto& b = pts.back();
  GammaEstimate out;
  out.gamma = (std::log(to_double(b.second)) - std::log(to_double(a.second))) / lq /
              static_cast<double>(b.first - a.first);
  out.gamma_average = std::log(to_double(b.second)) / lq / static_cast<double>(b.first);
  const double delta = static_cast<double>(series.delta);
  if (!(out.gamma < delta)) throw PreconditionError("gamma_estimate: gamma must be below delta");
  out.crude_rho_bound = 2.0 * out.gamma / (delta - out.gamma);
  out.mu = out.gamma / delta;
  return out;
}

}  // namespace repzeta::isotropic
