#pragma once

#include <cstdint>
#include <vector>

#include "repzeta/bigint.hpp"
#include "repzeta/chains.hpp"
#include "repzeta/linalg_mod.hpp"

namespace repzeta::orbit {

// Split, unramified model: K = Q_p, pi = p, q = p, e = 1, so the chain has
// length k. `eigenvalues` are (iota_1(x), ..., iota_d(x)) with zero sum.
struct OrbitDatum {
  unsigned d = 2;
  std::uint64_t p = 3;
  unsigned k = 1;
  std::vector<std::int64_t> eigenvalues;
  // chain[i-1] = Psi_i[x,k] as (rank, positive roots), i = 1..k.
  std::vector<chains::Stage> chain;
};

// Psi_i = { e_s - e_t : p^k | p^i (iota_s - iota_t) }, i = 1..k, summarized
// as (rank, kappa+) of the A_{d-1} subsystem it spans.
std::vector<chains::Stage> psi_chain(const std::vector<std::int64_t>& eigenvalues, unsigned d,
                                     std::uint64_t p, unsigned k);

OrbitDatum make_orbit_datum(const std::vector<std::int64_t>& eigenvalues, std::uint64_t p,
                            unsigned k);

// q^(sum_{i=1..k} |Phi+ \ Psi_i|).
BigInt orbit_dimension(const OrbitDatum& datum);
unsigned orbit_dimension_exponent(const OrbitDatum& datum);

struct CentralizerIndex {
  BigInt index;            // |L/p^k L| / |ker|
  unsigned kernel_exponent = 0;  // |ker(p ad x) on L/p^k L| = p^kernel_exponent
  unsigned index_exponent = 0;
};

inline constexpr unsigned kMaxOracleDegree = 4;

// Builds p*ad(x) on trace-zero d x d matrices as an integer matrix and reads
// the kernel size over Z/p^k off its Smith form. With conjugator_seed != 0,
// x is replaced by g x g^-1 for a seeded random g in GL_d(Z) first (the
// kernel size does not change, but the matrix is no longer diagonal).
CentralizerIndex centralizer_index_oracle(const OrbitDatum& datum,
                                          std::uint64_t conjugator_seed = 0);

// The bound exp_q(sum_{i=1..k} ((d-1) - rk Psi_i)).
BigInt chain_count_bound(const std::vector<chains::Stage>& chain, unsigned d, std::uint64_t q);

// Count obtained by fixing x modulo p^i given its class modulo p^(i-1):
// step i is constrained by Psi_{k-i}, and the last step (Psi_0) is left
// unconstrained, giving exp_q((d-1) + sum_{j=1..k-1} ((d-1) - rk Psi_j)).
BigInt stepwise_count_bound(const std::vector<chains::Stage>& chain, unsigned d, std::uint64_t q);

struct KernelCokernel {
  BigInt kernel_size;
  BigInt cokernel_size;
};

// Sizes of ker and coker of T on (Z/p^r)^n. Kernel via Smith form over
// Z/p^r; cokernel via invariant factors over Z. Singular T is rejected.
KernelCokernel kernel_cokernel_size(const linalg::IntMat& t, std::uint64_t p, unsigned r);

// Level-k vectors sharing one chain of root subsets; the proof's stepwise
// count bounds their number.
struct ChainGroup {
  std::vector<chains::Stage> chain;
  std::vector<std::uint32_t> root_masks;  // stage i as a set of pairs, bit s*d+t
  std::uint64_t vector_count = 0;
  BigInt stepwise_bound;
  bool within_stepwise = false;
};

// Classes (vectors modulo scalars and permutations) sharing a chain type,
// compared with the displayed bound.
struct ChainTypeGroup {
  std::vector<chains::Stage> chain;
  std::uint64_t class_count = 0;
  BigInt displayed_bound;
  bool within_displayed = false;
};

struct CensusReport {
  unsigned d = 0;
  std::uint64_t p = 0;
  unsigned k = 0;
  std::vector<ChainGroup> groups;
  std::vector<ChainTypeGroup> type_groups;
  bool all_within_stepwise = false;
  bool all_within_displayed = false;
};

inline constexpr std::uint64_t kDefaultCensusBudget = 1'000'000;

// Enumerates zero-trace eigenvalue vectors mod p^k of level exactly k (not
// scalar mod p; scalar vectors come from level k-1 via (x,k) ~ (px,k+1)).
CensusReport census_vs_bound(unsigned d, std::uint64_t p, unsigned k,
                             std::uint64_t budget = kDefaultCensusBudget);

}  // namespace repzeta::orbit
