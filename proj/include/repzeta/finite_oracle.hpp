#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "repzeta/census.hpp"

namespace repzeta::oracle {

// Row-major n x n matrix of least residues mod m.
using ModMatrix = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultGroupBudget = 200000;
inline constexpr std::size_t kDefaultClassBudget = 400;

class FiniteMatrixGroup {
 public:
  std::uint32_t modulus() const noexcept { return modulus_; }
  unsigned dim() const noexcept { return dim_; }
  std::size_t order() const noexcept { return elements_.size(); }

  const std::vector<ModMatrix>& generators() const noexcept { return generators_; }
  const std::vector<std::size_t>& generator_indices() const noexcept { return generator_indices_; }
  // Breadth-first order from the identity, which is element 0.
  const std::vector<ModMatrix>& elements() const noexcept { return elements_; }

  std::optional<std::size_t> index_of(const ModMatrix& m) const;
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::uint64_t element_order(std::size_t a) const { return order_[a]; }
  std::uint64_t exponent() const noexcept { return exponent_; }

  ModMatrix product(const ModMatrix& a, const ModMatrix& b) const;
  // Canonical byte encoding used for membership.
  std::string encode(const ModMatrix& m) const;

 private:
  friend FiniteMatrixGroup generate_group(std::uint32_t, unsigned, const std::vector<ModMatrix>&,
                                          std::size_t);

  std::uint32_t modulus_ = 2;
  unsigned dim_ = 0;
  std::vector<ModMatrix> generators_;
  std::vector<std::size_t> generator_indices_;
  std::vector<ModMatrix> elements_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::size_t> inverse_;
  std::vector<std::uint64_t> order_;
  std::uint64_t exponent_ = 1;
};

// Closure of the generators under multiplication. Throws PreconditionError
// for a non-invertible generator and BudgetError (with the partial count)
// once more than `budget` elements are found.
FiniteMatrixGroup generate_group(std::uint32_t modulus, unsigned n,
                                 const std::vector<ModMatrix>& generators,
                                 std::size_t budget = kDefaultGroupBudget);

// [[1,1],[0,1]] and [[1,0],[1,1]], which generate SL_2(Z/m).
std::vector<ModMatrix> sl2_standard_generators(std::uint32_t modulus);
FiniteMatrixGroup sl2_group(std::uint32_t modulus, std::size_t budget = kDefaultGroupBudget);

struct ClassData {
  std::vector<std::size_t> representatives;  // element indices
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> class_of;  // element index -> class index

  std::size_t count() const noexcept { return representatives.size(); }
};

// Conjugation orbits under the generators, swept from the first unvisited
// element in canonical order.
ClassData conjugacy_classes(const FiniteMatrixGroup& group);

// Burnside-Dixon over F_l, l the least prime = 1 mod exponent with
// l > 2 sqrt|G|. Throws BudgetError if there are more than `class_budget`
// classes.
DegreeCensus character_degrees(const FiniteMatrixGroup& group, const ClassData& classes,
                               std::size_t class_budget = kDefaultClassBudget);
DegreeCensus character_degrees(const FiniteMatrixGroup& group);

// Prime used by the Dixon computation for this group.
std::uint64_t dixon_prime(std::uint64_t group_order, std::uint64_t exponent);

// |[G,G]|, via the normal closure of generator commutators.
std::size_t commutator_subgroup_order(const FiniteMatrixGroup& group);

}  // namespace repzeta::oracle
