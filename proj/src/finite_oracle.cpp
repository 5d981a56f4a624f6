#include "repzeta/finite_oracle.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <numeric>

#include "repzeta/errors.hpp"
#include "repzeta/linalg_mod.hpp"
#include "repzeta/numtheory.hpp"

namespace repzeta::oracle {

namespace {

BigInt int_determinant(const ModMatrix& m, unsigned n) {
  linalg::IntMat a(n, std::vector<BigInt>(n));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) a[i][j] = m[i * n + j];
  return linalg::determinant(a);
}

}  // namespace

std::string FiniteMatrixGroup::encode(const ModMatrix& m) const {
  std::string key;
  key.reserve(m.size() * 4);
  for (std::uint32_t x : m) {
    for (int b = 0; b < 4; ++b) key.push_back(static_cast<char>((x >> (8 * b)) & 0xFFU));
  }
  return key;
}

std::optional<std::size_t> FiniteMatrixGroup::index_of(const ModMatrix& m) const {
  auto it = index_.find(encode(m));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ModMatrix FiniteMatrixGroup::product(const ModMatrix& a, const ModMatrix& b) const {
  ModMatrix c(dim_ * dim_, 0);
  for (unsigned i = 0; i < dim_; ++i) {
    for (unsigned j = 0; j < dim_; ++j) {
      std::uint64_t acc = 0;
      for (unsigned k = 0; k < dim_; ++k) {
        acc += static_cast<std::uint64_t>(a[i * dim_ + k]) * b[k * dim_ + j];
      }
      c[i * dim_ + j] = static_cast<std::uint32_t>(acc % modulus_);
    }
  }
  return c;
}

std::size_t FiniteMatrixGroup::multiply(std::size_t a, std::size_t b) const {
  return index_.at(encode(product(elements_[a], elements_[b])));
}

FiniteMatrixGroup generate_group(std::uint32_t modulus, unsigned n,
                                 const std::vector<ModMatrix>& generators, std::size_t budget) {
  if (modulus < 2) throw PreconditionError("generate_group: modulus must be >= 2");
  if (n == 0) throw PreconditionError("generate_group: matrix dimension must be >= 1");
  FiniteMatrixGroup g;
  g.modulus_ = modulus;
  g.dim_ = n;
  for (const auto& gen : generators) {
    if (gen.size() != static_cast<std::size_t>(n) * n) {
      throw PreconditionError("generate_group: generator has wrong size");
    }
    ModMatrix reduced(gen.size());
    for (std::size_t i = 0; i < gen.size(); ++i) reduced[i] = gen[i] % modulus;
    BigInt det = int_determinant(reduced, n) % modulus;
    if (det < 0) det += modulus;
    if (gcd(det, BigInt(modulus)) != 1) {
      throw PreconditionError("generate_group: generator is not invertible mod " +
                              std::to_string(modulus));
    }
    g.generators_.push_back(std::move(reduced));
  }

  ModMatrix id(static_cast<std::size_t>(n) * n, 0);
  for (unsigned i = 0; i < n; ++i) id[i * n + i] = 1 % modulus;
  g.elements_.push_back(id);
  g.index_.emplace(g.encode(id), 0);
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (const auto& gen : g.generators_) {
      ModMatrix next = g.product(g.elements_[head], gen);
      std::string key = g.encode(next);
      if (g.index_.count(key)) continue;
      if (g.elements_.size() >= budget) {
        throw BudgetError("generate_group: more than " + std::to_string(budget) +
                              " elements (reached " + std::to_string(g.elements_.size()) + ")",
                          g.elements_.size());
      }
      g.index_.emplace(std::move(key), g.elements_.size());
      g.elements_.push_back(std::move(next));
    }
  }
  for (const auto& gen : g.generators_) g.generator_indices_.push_back(*g.index_of(gen));

  // Orders and inverses from successive powers.
  const std::size_t order = g.elements_.size();
  g.inverse_.assign(order, 0);
  g.order_.assign(order, 1);
  std::uint64_t exponent = 1;
  for (std::size_t i = 0; i < order; ++i) {
    std::size_t prev = 0;  // x^(k-1)
    std::size_t cur = i;   // x^k
    std::uint64_t k = 1;
    while (cur != 0) {
      prev = cur;
      cur = g.multiply(cur, i);
      ++k;
    }
    // x^k = 1 with k minimal; x^(k-1) is the inverse (x itself when k = 1).
    g.order_[i] = (i == 0) ? 1 : k;
    g.inverse_[i] = (i == 0) ? 0 : prev;
    exponent = std::lcm(exponent, g.order_[i]);
  }
  g.exponent_ = exponent;
  return g;
}

std::vector<ModMatrix> sl2_standard_generators(std::uint32_t modulus) {
  return {ModMatrix{1, 1, 0, 1}, ModMatrix{1, 0, 1, 1 % modulus}};
}

FiniteMatrixGroup sl2_group(std::uint32_t modulus, std::size_t budget) {
  return generate_group(modulus, 2, sl2_standard_generators(modulus), budget);
}

ClassData conjugacy_classes(const FiniteMatrixGroup& group) {
  ClassData data;
  const std::size_t order = group.order();
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  data.class_of.assign(order, kUnseen);
  const auto& gens = group.generator_indices();
  for (std::size_t start = 0; start < order; ++start) {
    if (data.class_of[start] != kUnseen) continue;
    const std::size_t cls = data.representatives.size();
    data.representatives.push_back(start);
    std::size_t size = 0;
    std::deque<std::size_t> queue{start};
    data.class_of[start] = cls;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      ++size;
      for (std::size_t s : gens) {
        const std::size_t y = group.multiply(group.multiply(s, x), group.inverse(s));
        if (data.class_of[y] == kUnseen) {
          data.class_of[y] = cls;
          queue.push_back(y);
        }
      }
    }
    data.sizes.push_back(size);
  }
  return data;
}

std::uint64_t dixon_prime(std::uint64_t group_order, std::uint64_t exponent) {
  const double floor_value = 2.0 * std::sqrt(static_cast<double>(group_order));
  for (std::uint64_t l = exponent + 1;; l += exponent) {
    if (static_cast<double>(l) > floor_value && nt::is_prime(l)) return l;
  }
}

namespace {

using linalg::Mat;
using nt::inv_mod;
using nt::mul_mod;

// Columns of `basis` (each entry a vector of length r) span an invariant
// subspace of `m`; returns the matrix of m restricted to it.
Mat restrict_to(const Mat& m, const std::vector<std::vector<std::uint64_t>>& basis,
                std::uint64_t l) {
  const std::size_t r = m.size();
  const std::size_t t = basis.size();
  // image[c] = m * basis[c]
  std::vector<std::vector<std::uint64_t>> image(t, std::vector<std::uint64_t>(r, 0));
  for (std::size_t c = 0; c < t; ++c) {
    for (std::size_t i = 0; i < r; ++i) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < r; ++k) acc = (acc + mul_mod(m[i][k], basis[c][k], l)) % l;
      image[c][i] = acc;
    }
  }
  // Solve basis * R = image via elimination on the augmented r x (t + t) system.
  Mat aug = linalg::zeros(r, 2 * t);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t c = 0; c < t; ++c) {
      aug[i][c] = basis[c][i];
      aug[i][t + c] = image[c][i];
    }
  }
  std::size_t row = 0;
  for (std::size_t c = 0; c < t; ++c) {
    std::size_t piv = row;
    while (piv < r && aug[piv][c] == 0) ++piv;
    if (piv == r) throw std::logic_error("restrict_to: basis is not independent");
    std::swap(aug[piv], aug[row]);
    const std::uint64_t inv = inv_mod(aug[row][c], l);
    for (auto& x : aug[row]) x = mul_mod(x, inv, l);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == row || aug[i][c] == 0) continue;
      const std::uint64_t f = aug[i][c];
      for (std::size_t j = 0; j < 2 * t; ++j) aug[i][j] = (aug[i][j] + l - mul_mod(f, aug[row][j], l)) % l;
    }
    ++row;
  }
  Mat rmat = linalg::zeros(t, t);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t c = 0; c < t; ++c) rmat[i][c] = aug[i][t + c];
  return rmat;
}

std::uint64_t eval_poly(const std::vector<std::uint64_t>& coeffs, std::uint64_t x, std::uint64_t l) {
  std::uint64_t acc = 0;
  for (std::size_t d = coeffs.size(); d-- > 0;) acc = (mul_mod(acc, x, l) + coeffs[d]) % l;
  return acc;
}

}  // namespace

DegreeCensus character_degrees(const FiniteMatrixGroup& group, const ClassData& classes,
                               std::size_t class_budget) {
  const std::size_t r = classes.count();
  if (r > class_budget) {
    throw BudgetError("character_degrees: " + std::to_string(r) + " classes exceed budget " +
                          std::to_string(class_budget),
                      r);
  }
  const std::uint64_t order = group.order();
  const std::uint64_t l = dixon_prime(order, group.exponent());
  const std::size_t id_class = classes.class_of[0];

  // coeff[j][i][k] = #{x in C_i : x^{-1} z_k in C_j}, z_k the k-th representative;
  // class sums multiply as C_i C_j = sum_k coeff[j][i][k] C_k.
  std::vector<Mat> class_matrices(r, linalg::zeros(r, r));
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t z = classes.representatives[k];
    for (std::size_t x = 0; x < order; ++x) {
      const std::size_t y = group.multiply(group.inverse(x), z);
      class_matrices[classes.class_of[y]][classes.class_of[x]][k] += 1;
    }
  }
  for (auto& m : class_matrices)
    for (auto& row : m)
      for (auto& x : row) x %= l;

  std::vector<std::vector<std::vector<std::uint64_t>>> spaces;
  {
    std::vector<std::vector<std::uint64_t>> full;
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<std::uint64_t> e(r, 0);
      e[i] = 1;
      full.push_back(std::move(e));
    }
    spaces.push_back(std::move(full));
  }
  for (std::size_t j = 0; j < r; ++j) {
    bool done = true;
    for (const auto& sp : spaces) done = done && sp.size() == 1;
    if (done) break;
    if (j == id_class) continue;
    const Mat& m = class_matrices[j];
    std::vector<std::vector<std::vector<std::uint64_t>>> next;
    for (auto& sp : spaces) {
      if (sp.size() == 1) {
        next.push_back(std::move(sp));
        continue;
      }
      const Mat rm = restrict_to(m, sp, l);
      const auto poly = linalg::charpoly_mod_prime(rm, l);
      std::size_t found = 0;
      for (std::uint64_t lambda = 0; lambda < l && found < sp.size(); ++lambda) {
        if (eval_poly(poly, lambda, l) != 0) continue;
        Mat shifted = rm;
        for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i][i] = (shifted[i][i] + l - lambda) % l;
        const auto kernel = linalg::nullspace_mod_prime(shifted, l);
        std::vector<std::vector<std::uint64_t>> sub;
        for (const auto& c : kernel) {
          std::vector<std::uint64_t> v(r, 0);
          for (std::size_t b = 0; b < sp.size(); ++b) {
            if (c[b] == 0) continue;
            for (std::size_t i = 0; i < r; ++i) v[i] = (v[i] + mul_mod(c[b], sp[b][i], l)) % l;
          }
          sub.push_back(std::move(v));
        }
        found += sub.size();
        next.push_back(std::move(sub));
      }
      if (found != sp.size()) {
        throw std::logic_error("character_degrees: class matrix not diagonalizable over F_l");
      }
    }
    spaces = std::move(next);
  }

  std::vector<std::size_t> inverse_class(r);
  for (std::size_t i = 0; i < r; ++i) {
    inverse_class[i] = classes.class_of[group.inverse(classes.representatives[i])];
  }
  const std::uint64_t max_degree = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(order))) + 1;
  std::map<BigInt, BigInt> counts;
  for (const auto& sp : spaces) {
    if (sp.size() != 1) throw std::logic_error("character_degrees: characters not separated");
    std::vector<std::uint64_t> v = sp[0];
    const std::uint64_t inv = inv_mod(v[id_class], l);
    for (auto& x : v) x = mul_mod(x, inv, l);
    // sum_i w_i w_{i*} / |C_i| = |G| / chi(1)^2
    std::uint64_t norm = 0;
    for (std::size_t i = 0; i < r; ++i) {
      const std::uint64_t term = mul_mod(mul_mod(v[i], v[inverse_class[i]], l),
                                         inv_mod(classes.sizes[i] % l, l), l);
      norm = (norm + term) % l;
    }
    const std::uint64_t deg_sq = mul_mod(order % l, inv_mod(norm, l), l);
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d <= max_degree; ++d) {
      if (d * d % l == deg_sq && order % d == 0) {
        degree = d;
        break;
      }
    }
    if (degree == 0) throw std::logic_error("character_degrees: no integral degree found");
    counts[BigInt(degree)] += 1;
  }
  DegreeCensus census(counts);
  if (census.mass() != order) {
    throw std::logic_error("character_degrees: sum of squared degrees differs from |G|");
  }
  return census;
}

DegreeCensus character_degrees(const FiniteMatrixGroup& group) {
  return character_degrees(group, conjugacy_classes(group));
}

std::size_t commutator_subgroup_order(const FiniteMatrixGroup& group) {
  const auto& gens = group.generator_indices();
  std::vector<std::size_t> seeds;
  for (std::size_t a : gens) {
    for (std::size_t b : gens) {
      const std::size_t ab = group.multiply(a, b);
      const std::size_t ainv_binv = group.multiply(group.inverse(a), group.inverse(b));
      seeds.push_back(group.multiply(ab, ainv_binv));
    }
  }
  std::vector<bool> member;
  auto close = [&]() {
    member.assign(group.order(), false);
    std::deque<std::size_t> queue{0};
    member[0] = true;
    std::size_t count = 0;
    while (!queue.empty()) {
      const std::size_t h = queue.front();
      queue.pop_front();
      ++count;
      for (std::size_t t : seeds) {
        const std::size_t ht = group.multiply(h, t);
        if (!member[ht]) {
          member[ht] = true;
          queue.push_back(ht);
        }
      }
    }
    return count;
  };
  std::size_t size = close();
  // Grow the seed set until the generated subgroup is normal.
  while (true) {
    bool grew = false;
    const std::vector<std::size_t> current = seeds;
    for (std::size_t t : current) {
      for (std::size_t s : gens) {
        const std::size_t c = group.multiply(group.multiply(s, t), group.inverse(s));
        if (!member[c]) {
          seeds.push_back(c);
          grew = true;
        }
      }
    }
    if (!grew) break;
    size = close();
  }
  return size;
}

}  // namespace repzeta::oracle
