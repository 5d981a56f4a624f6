#pragma once

#include <cstdint>
#include <vector>

#include "repzeta/census.hpp"

namespace repzeta::symmetric {

using Partition = std::vector<unsigned>;  // weakly decreasing, positive parts

inline constexpr unsigned kMaxSymmetricDegree = 36;

// Partitions of k in reverse lexicographic order ((k) first).
std::vector<Partition> partitions(unsigned k);
Partition conjugate(const Partition& shape);
// k! / product of hook lengths.
BigInt hook_degree(const Partition& shape);

struct PartitionEntry {
  Partition shape;
  BigInt degree;
  bool self_conjugate = false;
};

struct PartitionTable {
  unsigned k = 0;
  std::vector<PartitionEntry> entries;

  std::size_t self_conjugate_count() const;
  std::size_t conjugate_pair_count() const;  // pairs of non-self-conjugate partitions
};

PartitionTable partition_table(unsigned k);

// Degree census of S_k, 1 <= k <= 36.
DegreeCensus sn_degrees(unsigned k);
// Degree census of A_k, 2 <= k <= 36: a conjugate pair restricts to one
// irreducible, a self-conjugate partition splits into two of half degree.
DegreeCensus an_degrees(unsigned k);

// Zeta function of A_k for k >= 5 and s > 0.
double ak_zeta(unsigned k, double s);

// R_n <= c n^s + 1 with c = Z(s) - 1 at every degree of the census,
// 0 < s < 1. The right side is rounded upward.
bool rbound_check(const DegreeCensus& census, double s);

// Census of a direct product A x B.
DegreeCensus product_census(const DegreeCensus& a, const DegreeCensus& b);
// Zeta of A^L from the zeta of A.
double power_zeta(double zeta_value, unsigned copies);

}  // namespace repzeta::symmetric
