#pragma once

#include <functional>
#include <span>
#include <vector>

#include "repzeta/bigint.hpp"
#include "repzeta/rootsys.hpp"

namespace repzeta::chains {

// (rank, number of positive roots) of one subsystem in a chain.
struct Stage {
  int rank = 0;
  int kappa = 0;

  bool operator==(const Stage&) const = default;
};

// Strictly increasing chain Phi_1 < ... < Phi_k = Phi, summarized per stage.
struct ChainSpec {
  std::vector<Stage> stages;
  std::vector<int> thresholds;  // optional b_1 < ... < b_k

  // Throws PreconditionError unless stages strictly increase and the last
  // stage equals `ambient`.
  void validate(const Stage& ambient) const;
};

struct ExponentVector {
  std::vector<double> a;
};

// a_i = (rk Phi_i - rk Phi_{i-1}) - s (|Phi_i^+| - |Phi_{i-1}^+|), Phi_0 empty.
ExponentVector chain_exponents(const ChainSpec& chain, double s);
std::vector<Rational> chain_exponents_exact(const ChainSpec& chain, const Rational& s);

// Suffix sums a_i + ... + a_k, i = 1..k.
std::vector<double> suffix_sums(const ExponentVector& v);
std::vector<Rational> suffix_sums(const std::vector<Rational>& v);

// The nested series sum_{1<=b_1<...<b_k} exp(sum a_i b_i) converges iff
// every suffix sum is strictly negative.
bool suffix_converges(const ExponentVector& v);
bool suffix_converges(const std::vector<Rational>& v);

// Closed form prod_n e^{S_n} / (1 - e^{S_n}), S_n the n-th suffix sum.
double chain_product_value(const ExponentVector& v);

// Direct nested summation over 1 <= b_1 < ... < b_k <= B.
double chain_truncated_sum(const ExponentVector& v, int bound);

// Operational divergence test: the truncated sum keeps growing by at least
// `growth` (relative) each time the bound doubles, over `doublings` steps
// starting from `start_bound`.
bool diverges_by_doubling(const ExponentVector& v, int start_bound = 20, int doublings = 2,
                          double growth = 0.25);

// Visits every strictly increasing chain of Levi subsystems (generated by
// subsets of simple roots) ending at the full system.
void for_each_levi_chain(const rootsys::RootDatum& datum,
                         const std::function<void(const ChainSpec&)>& visit);

}  // namespace repzeta::chains
