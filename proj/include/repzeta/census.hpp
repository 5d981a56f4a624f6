#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "repzeta/bigint.hpp"

namespace repzeta {

struct DegreeEntry {
  BigInt degree;
  BigInt multiplicity;

  bool operator==(const DegreeEntry&) const = default;
};

// Exact multiset of irreducible degrees. Degrees are strictly increasing and
// every multiplicity is positive. If a truncation bound N is attached, every
// irreducible of degree <= N is guaranteed to be present.
class DegreeCensus {
 public:
  DegreeCensus() = default;
  explicit DegreeCensus(const std::map<BigInt, BigInt>& counts,
                        std::optional<BigInt> truncation_bound = std::nullopt);

  const std::vector<DegreeEntry>& entries() const noexcept { return entries_; }
  const std::optional<BigInt>& truncation_bound() const noexcept { return bound_; }

  std::size_t distinct_degrees() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  // Number of irreducibles (sum of multiplicities).
  BigInt irrep_count() const;
  // Sum of multiplicity * degree^2.
  BigInt mass() const;
  BigInt multiplicity_of(const BigInt& degree) const;
  // R_n: number of irreducibles of degree at most n.
  BigInt cumulative(const BigInt& n) const;

  // Sum of multiplicity * degree^(-s), Neumaier-compensated, summed in
  // increasing degree order so results are reproducible.
  double zeta(double s) const;

  // Restriction to degrees <= n.
  DegreeCensus truncated(const BigInt& n) const;

  std::map<BigInt, BigInt> as_map() const;
  // "{1:3, 2:3, 3:1}"
  std::string to_string() const;

  // Compares the degree multisets only.
  bool operator==(const DegreeCensus& other) const { return entries_ == other.entries_; }

 private:
  std::vector<DegreeEntry> entries_;
  std::vector<BigInt> prefix_counts_;
  std::optional<BigInt> bound_;
};

// Neumaier (improved Kahan) accumulator.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace repzeta
