#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "repzeta/bigint.hpp"
#include "repzeta/linalg_mod.hpp"

namespace repzeta::isotropic {

using linalg::Mat;

// Family of matrices M_Y = I + p^k diag(X, Z) + [[0, Y], [0, 0]] over
// Z/p^N, N = 3k + 2t, with Y running over residues mod p^k.
struct CensusFamily {
  unsigned m = 0;
  std::uint64_t q = 0;
  unsigned k = 0;
  unsigned t = 0;
  unsigned precision = 0;     // N
  std::uint64_t modulus = 0;  // p^N
  std::vector<std::uint64_t> x_diag;  // m/2 entries
  std::vector<std::uint64_t> z_diag;  // m/2 entries
  std::uint64_t rep_count = 0;        // q^((m^2/4) k)

  unsigned half() const { return m / 2; }
  // Y block of the index-th representative (row-major digits base p^k).
  Mat y_block(std::uint64_t index) const;
  Mat m_y(std::uint64_t index) const;
  Mat m_y_from_block(const Mat& y) const;
};

inline constexpr std::uint64_t kDefaultRepBudget = 1'000'000;

// Diagonal entries are the lexicographically smallest admissible choice with
// pairwise differences of valuation <= t (distinct mod p^(t+1)) and
// det M_Y = 1 mod p^N; the last entry is solved for the determinant.
CensusFamily build_census_family(unsigned m, std::uint64_t q, unsigned k, unsigned t,
                                 std::uint64_t rep_budget = kDefaultRepBudget);

// Solutions W of M1 W = W M2 over Z/p^N.
struct IntertwinerModule {
  unsigned m = 0;
  std::uint64_t p = 0;
  unsigned precision = 0;
  // Column generators (vectorized row-major m x m matrices).
  std::vector<std::vector<std::uint64_t>> generators;
  // Generator j has additive order p^order_exponents[j].
  std::vector<unsigned> order_exponents;
  // Indices of generators that survive reduction mod p (order p^N); their
  // reductions are linearly independent over F_p.
  std::vector<std::size_t> unit_generators;

  std::size_t rank() const;  // generators of nonzero order
};

IntertwinerModule conjugacy_module(const Mat& m1, const Mat& m2, std::uint64_t p,
                                   unsigned precision);

enum class Verdict { Conjugate, NotConjugate, Unknown };

struct ConjugacyOutcome {
  Verdict verdict = Verdict::Unknown;
  std::optional<Mat> conjugator;  // W with m1 W = W m2, invertible mod p
  std::size_t scan_dimension = 0;
};

inline constexpr std::size_t kDefaultScanBudget = 12;

// GL_m(Z/p^N)-conjugacy: true iff the intertwiner module holds an element
// that is invertible mod p. Decided by scanning the module's reduction mod
// p; Unknown when its dimension exceeds `scan_budget`.
ConjugacyOutcome are_conjugate(const Mat& m1, const Mat& m2, std::uint64_t p, unsigned precision,
                               std::size_t scan_budget = kDefaultScanBudget);

struct ClassCount {
  std::size_t sample_size = 0;
  std::size_t classes_found = 0;
  BigInt lower_bound;       // q^((m^2/4 - m + 1) k), 1 if the exponent is <= 0
  bool meets_bound = false;  // classes_found >= lower_bound
  bool certified = false;    // full family scanned with no Unknown outcome
  std::size_t unknown_outcomes = 0;
  std::vector<std::size_t> class_of;  // sample position -> class id
  // (representative, member) pairs joined during the partition, with the
  // conjugator that witnessed each join.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> joined_pairs;
  std::vector<Mat> join_conjugators;
};

// Greedy partition of the sample (all representatives when empty) into
// conjugacy classes. Unknown outcomes are merged, so the count stays a lower
// bound, and the result is flagged uncertified.
ClassCount distinct_class_count(const CensusFamily& family,
                                const std::vector<std::uint64_t>& sample = {},
                                std::size_t scan_budget = kDefaultScanBudget);

// Orbits of Y mod p^k under Y -> A Y D^-1 with A, D diagonal units mod p^k.
std::size_t predicted_orbit_count(const CensusFamily& family);

// Block structure forced on a conjugator g with g M_Y = M_Y' g:
// C = 0 mod p^(2k+t); A, D diagonal mod p^k.
struct BlockStructure {
  bool lower_left_vanishes = false;
  bool upper_left_diagonal = false;
  bool lower_right_diagonal = false;
  bool all() const { return lower_left_vanishes && upper_left_diagonal && lower_right_diagonal; }
};
BlockStructure block_structure(const CensusFamily& family, const Mat& conjugator);

struct GammaSeries {
  std::vector<std::pair<unsigned, BigInt>> points;  // (k, class count of U/U_k)
  unsigned delta = 0;                                // dim G
  std::uint64_t q = 0;
};

struct GammaEstimate {
  double gamma = 0.0;          // log_q(c_kmax / c_{kmax-1})
  double gamma_average = 0.0;  // log_q(c_kmax) / kmax
  double crude_rho_bound = 0.0;  // 2 gamma / (delta - gamma)
  double mu = 0.0;               // gamma / delta
};

GammaEstimate gamma_estimate(const GammaSeries& series);

}  // namespace repzeta::isotropic
