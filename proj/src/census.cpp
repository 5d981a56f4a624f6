#include "repzeta/census.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "repzeta/errors.hpp"

namespace repzeta {

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::fabs(sum_) >= std::fabs(x)) {
    compensation_ += (sum_ - t) + x;
  } else {
    compensation_ += (x - t) + sum_;
  }
  sum_ = t;
}

DegreeCensus::DegreeCensus(const std::map<BigInt, BigInt>& counts,
                           std::optional<BigInt> truncation_bound)
    : bound_(std::move(truncation_bound)) {
  entries_.reserve(counts.size());
  prefix_counts_.reserve(counts.size());
  BigInt running = 0;
  for (const auto& [degree, mult] : counts) {
    if (degree < 1) throw PreconditionError("DegreeCensus: degrees must be positive");
    if (mult < 0) throw PreconditionError("DegreeCensus: negative multiplicity");
    if (mult == 0) continue;
    entries_.push_back({degree, mult});
    running += mult;
    prefix_counts_.push_back(running);
  }
}

BigInt DegreeCensus::irrep_count() const {
  return prefix_counts_.empty() ? BigInt(0) : prefix_counts_.back();
}

BigInt DegreeCensus::mass() const {
  BigInt total = 0;
  for (const auto& e : entries_) total += e.multiplicity * e.degree * e.degree;
  return total;
}

BigInt DegreeCensus::multiplicity_of(const BigInt& degree) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), degree,
                             [](const DegreeEntry& e, const BigInt& d) { return e.degree < d; });
  if (it == entries_.end() || it->degree != degree) return 0;
  return it->multiplicity;
}

BigInt DegreeCensus::cumulative(const BigInt& n) const {
  auto it = std::upper_bound(entries_.begin(), entries_.end(), n,
                             [](const BigInt& d, const DegreeEntry& e) { return d < e.degree; });
  if (it == entries_.begin()) return 0;
  return prefix_counts_[static_cast<std::size_t>(it - entries_.begin()) - 1];
}

double DegreeCensus::zeta(double s) const {
  CompensatedSum sum;
  for (const auto& e : entries_) {
    sum.add(to_double(e.multiplicity) * std::pow(to_double(e.degree), -s));
  }
  return sum.value();
}

DegreeCensus DegreeCensus::truncated(const BigInt& n) const {
  std::map<BigInt, BigInt> m;
  for (const auto& e : entries_) {
    if (e.degree > n) break;
    m.emplace(e.degree, e.multiplicity);
  }
  return DegreeCensus(m, n);
}

std::map<BigInt, BigInt> DegreeCensus::as_map() const {
  std::map<BigInt, BigInt> m;
  for (const auto& e : entries_) m.emplace(e.degree, e.multiplicity);
  return m;
}

std::string DegreeCensus::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ", ";
    os << entries_[i].degree << ':' << entries_[i].multiplicity;
  }
  os << '}';
  return os.str();
}

}  // namespace repzeta
