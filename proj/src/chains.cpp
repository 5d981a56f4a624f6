#include "repzeta/chains.hpp"

#include <cmath>

#include "repzeta/census.hpp"
#include "repzeta/errors.hpp"

namespace repzeta::chains {

void ChainSpec::validate(const Stage& ambient) const {
  if (stages.empty()) throw PreconditionError("chain has no stages");
  for (std::size_t i = 1; i < stages.size(); ++i) {
    const Stage& prev = stages[i - 1];
    const Stage& cur = stages[i];
    if (cur.rank < prev.rank || cur.kappa < prev.kappa ||
        (cur.rank == prev.rank && cur.kappa == prev.kappa)) {
      throw PreconditionError("chain stages must be strictly increasing");
    }
  }
  if (!(stages.back() == ambient)) {
    throw PreconditionError("final chain stage must equal the ambient system");
  }
  if (static_cast<int>(stages.size()) > ambient.rank && ambient.rank > 0) {
    throw PreconditionError("chain longer than the ambient rank");
  }
  for (std::size_t i = 1; i < thresholds.size(); ++i) {
    if (thresholds[i] <= thresholds[i - 1]) {
      throw PreconditionError("chain thresholds must be strictly increasing");
    }
  }
}

ExponentVector chain_exponents(const ChainSpec& chain, double s) {
  ExponentVector out;
  Stage prev{};
  for (const Stage& st : chain.stages) {
    out.a.push_back(static_cast<double>(st.rank - prev.rank) -
                    s * static_cast<double>(st.kappa - prev.kappa));
    prev = st;
  }
  return out;
}

std::vector<Rational> chain_exponents_exact(const ChainSpec& chain, const Rational& s) {
  std::vector<Rational> out;
  Stage prev{};
  for (const Stage& st : chain.stages) {
    out.push_back(Rational(st.rank - prev.rank) - s * Rational(st.kappa - prev.kappa));
    prev = st;
  }
  return out;
}

std::vector<double> suffix_sums(const ExponentVector& v) {
  std::vector<double> out(v.a.size());
  double run = 0.0;
  for (std::size_t i = v.a.size(); i-- > 0;) {
    run += v.a[i];
    out[i] = run;
  }
  return out;
}

std::vector<Rational> suffix_sums(const std::vector<Rational>& v) {
  std::vector<Rational> out(v.size());
  Rational run = 0;
  for (std::size_t i = v.size(); i-- > 0;) {
    run += v[i];
    out[i] = run;
  }
  return out;
}

bool suffix_converges(const ExponentVector& v) {
  for (double s : suffix_sums(v)) {
    if (!(s < 0.0)) return false;
  }
  return true;
}

bool suffix_converges(const std::vector<Rational>& v) {
  for (const Rational& s : suffix_sums(v)) {
    if (s >= 0) return false;
  }
  return true;
}

double chain_product_value(const ExponentVector& v) {
  if (!suffix_converges(v)) {
    throw PreconditionError("chain_product_value: some suffix sum is >= 0, series diverges");
  }
  double value = 1.0;
  for (double s : suffix_sums(v)) value *= std::exp(s) / -std::expm1(s);
  return value;
}

namespace {

void nested(const std::vector<std::vector<double>>& powers, std::size_t level, int lo, int bound,
            double prefix, CompensatedSum& sum) {
  const std::size_t k = powers.size();
  // Leave room for the remaining k - level - 1 strictly larger indices.
  const int hi = bound - static_cast<int>(k - level - 1);
  for (int b = lo; b <= hi; ++b) {
    const double term = prefix * powers[level][b];
    if (level + 1 == k) {
      sum.add(term);
    } else {
      nested(powers, level + 1, b + 1, bound, term, sum);
    }
  }
}

}  // namespace

double chain_truncated_sum(const ExponentVector& v, int bound) {
  const std::size_t k = v.a.size();
  if (bound < static_cast<int>(k)) {
    throw PreconditionError("chain_truncated_sum: bound B must be >= k");
  }
  if (k == 0) return 1.0;
  std::vector<std::vector<double>> powers(k, std::vector<double>(bound + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (int b = 0; b <= bound; ++b) powers[i][b] = std::exp(v.a[i] * b);
  }
  CompensatedSum sum;
  nested(powers, 0, 1, bound, 1.0, sum);
  return sum.value();
}

bool diverges_by_doubling(const ExponentVector& v, int start_bound, int doublings,
                          double growth) {
  int bound = std::max(start_bound, static_cast<int>(v.a.size()));
  double prev = chain_truncated_sum(v, bound);
  for (int i = 0; i < doublings; ++i) {
    bound *= 2;
    const double cur = chain_truncated_sum(v, bound);
    if (!(cur > prev * (1.0 + growth))) return false;
    prev = cur;
  }
  return true;
}

namespace {

void extend_chain(const std::vector<Stage>& levi, std::uint32_t current, std::uint32_t full,
                  ChainSpec& chain, const std::function<void(const ChainSpec&)>& visit) {
  if (current == full) {
    visit(chain);
    return;
  }
  // Every strict superset of `current` inside `full`.
  const std::uint32_t free_bits = full & ~current;
  for (std::uint32_t add = free_bits; add != 0; add = (add - 1) & free_bits) {
    const std::uint32_t next = current | add;
    chain.stages.push_back(levi[next]);
    extend_chain(levi, next, full, chain, visit);
    chain.stages.pop_back();
  }
}

}  // namespace

void for_each_levi_chain(const rootsys::RootDatum& datum,
                         const std::function<void(const ChainSpec&)>& visit) {
  if (datum.rank > 16) throw PreconditionError("for_each_levi_chain: rank too large");
  const std::uint32_t full = (1U << datum.rank) - 1U;
  std::vector<Stage> levi(std::size_t{full} + 1);
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    const auto summary = rootsys::levi_subsystem_mask(datum, mask);
    levi[mask] = {summary.rank, summary.kappa};
  }
  ChainSpec chain;
  extend_chain(levi, 0U, full, chain, visit);
}

}  // namespace repzeta::chains
