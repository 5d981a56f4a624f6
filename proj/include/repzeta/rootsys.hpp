#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "repzeta/bigint.hpp"

namespace repzeta::rootsys {

enum class Series { A, B, C, D, E, F, G };

char series_letter(Series s);
// Accepts "A".."G" (case-insensitive); throws PreconditionError otherwise.
Series parse_series(const std::string& text);

// Simply connected root datum, presented through the positive coroots
// evaluated on the fundamental weights.
struct RootDatum {
  Series series;
  int rank = 0;
  // One row per positive coroot: (alpha^v(w_1), ..., alpha^v(w_r)).
  std::vector<std::vector<int>> positive_roots;
  // alpha^v(rho) = row sum.
  std::vector<int> rho_values;
  int kappa = 0;
  int coxeter_number = 0;

  std::string name() const;  // e.g. "A2"
  int dimension() const { return rank + 2 * kappa; }
};

struct DominantWeight {
  std::vector<std::uint64_t> coeffs;
};

// Valid types: A r>=1, B r>=2, C r>=3, D r>=4, E r in {6,7,8}, F4, G2.
bool is_valid_type(Series series, int rank);
RootDatum build_root_datum(Series series, int rank);

// Every irreducible (series, rank) with rank <= max_rank, in A..G order.
std::vector<std::pair<Series, int>> irreducible_types(int max_rank);

// Reference tables, used to cross-check the closure enumeration.
int standard_dimension(Series series, int rank);
int standard_coxeter_number(Series series, int rank);

// Cartan matrix with entries <alpha_i, alpha_j^v> (Bourbaki numbering).
std::vector<std::vector<int>> cartan_matrix(Series series, int rank);

BigInt weyl_dimension(const RootDatum& datum, const DominantWeight& weight);

// Floating evaluation of the same product, for fast pruning.
double weyl_dimension_approx(const RootDatum& datum, const std::vector<std::uint64_t>& coeffs);

Rational rank_kappa_ratio(const RootDatum& datum);

struct LeviSummary {
  int rank = 0;
  int kappa = 0;

  bool operator==(const LeviSummary&) const = default;
};

// Subsystem generated by the simple roots with the given 1-based indices.
LeviSummary levi_subsystem(const RootDatum& datum, const std::vector<int>& simple_subset);
// Same, with the subset given as a bitmask over 0-based indices.
LeviSummary levi_subsystem_mask(const RootDatum& datum, std::uint32_t mask);

}  // namespace repzeta::rootsys
