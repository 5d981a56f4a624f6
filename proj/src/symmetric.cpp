#include "repzeta/symmetric.hpp"

#include <cmath>
#include <limits>
#include <map>

#include "repzeta/errors.hpp"

namespace repzeta::symmetric {

namespace {

void partitions_rec(unsigned remaining, unsigned max_part, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

void check_range(unsigned k, unsigned lo, const char* what) {
  if (k < lo || k > kMaxSymmetricDegree)
    throw PreconditionError(std::string(what) + ": k must lie in [" + std::to_string(lo) + ", " +
                            std::to_string(kMaxSymmetricDegree) + "]");
}

}  // namespace

std::vector<Partition> partitions(unsigned k) {
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(k, k, cur, out);
  return out;
}

Partition conjugate(const Partition& shape) {
  Partition out;
  if (shape.empty()) return out;
  for (unsigned col = 0; col < shape.front(); ++col) {
    unsigned len = 0;
    while (len < shape.size() && shape[len] > col) ++len;
    out.push_back(len);
  }
  return out;
}

BigInt hook_degree(const Partition& shape) {
  const Partition dual = conjugate(shape);
  unsigned k = 0;
  for (auto part : shape) k += part;
  BigInt numerator = 1;
  for (unsigned i = 2; i <= k; ++i) numerator *= i;
  BigInt hooks = 1;
  for (std::size_t i = 0; i < shape.size(); ++i)
    for (unsigned j = 0; j < shape[i]; ++j) hooks *= (shape[i] - j - 1) + (dual[j] - i - 1) + 1;
  return numerator / hooks;
}

std::size_t PartitionTable::self_conjugate_count() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.self_conjugate;
  return n;
}

std::size_t PartitionTable::conjugate_pair_count() const {
  return (entries.size() - self_conjugate_count()) / 2;
}

PartitionTable partition_table(unsigned k) {
  check_range(k, 1, "partition_table");
  PartitionTable table;
  table.k = k;
  for (auto& shape : partitions(k)) {
    PartitionEntry e;
    e.degree = hook_degree(shape);
    e.self_conjugate = conjugate(shape) == shape;
    e.shape = std::move(shape);
    table.entries.push_back(std::move(e));
  }
  return table;
}

DegreeCensus sn_degrees(unsigned k) {
  check_range(k, 1, "sn_degrees");
  std::map<BigInt, BigInt> counts;
  for (const auto& e : partition_table(k).entries) counts[e.degree] += 1;
  return DegreeCensus(counts);
}

DegreeCensus an_degrees(unsigned k) {
  check_range(k, 2, "an_degrees");
  std::map<BigInt, BigInt> counts;
  for (const auto& e : partition_table(k).entries) {
    if (e.self_conjugate) {
      if (e.degree % 2 != 0) throw std::logic_error("an_degrees: odd self-conjugate degree");
      counts[e.degree / 2] += 2;
    } else if (e.shape > conjugate(e.shape)) {
      // count each conjugate pair once, from its lexicographically larger member
      counts[e.degree] += 1;
    }
  }
  return DegreeCensus(counts);
}

double ak_zeta(unsigned k, double s) {
  if (k < 5) throw PreconditionError("ak_zeta: k >= 5 required (A_k simple)");
  if (!(s > 0.0)) throw PreconditionError("ak_zeta: s > 0 required");
  return an_degrees(k).zeta(s);
}

bool rbound_check(const DegreeCensus& census, double s) {
  if (!(s > 0.0 && s < 1.0)) throw PreconditionError("rbound_check: s must lie in (0, 1)");
  const long double c = static_cast<long double>(census.zeta(s)) - 1.0L;
  const long double slack = 1.0L + 64.0L * std::numeric_limits<double>::epsilon();
  BigInt running = 0;
  for (const auto& e : census.entries()) {
    running += e.multiplicity;
    const long double rhs = std::ceil(c * std::pow(static_cast<long double>(to_double(e.degree)), s) * slack);
    // R_n - 1 <= ceil(c n^s); compare as integers once rhs fits.
    if (rhs >= 1e18L) continue;
    if (running - 1 > BigInt(static_cast<unsigned long long>(std::max(rhs, 0.0L)))) return false;
  }
  return true;
}

DegreeCensus product_census(const DegreeCensus& a, const DegreeCensus& b) {
  std::map<BigInt, BigInt> counts;
  for (const auto& x : a.entries())
    for (const auto& y : b.entries()) counts[x.degree * y.degree] += x.multiplicity * y.multiplicity;
  return DegreeCensus(counts);
}

double power_zeta(double zeta_value, unsigned copies) { return std::pow(zeta_value, copies); }

}  // namespace repzeta::symmetric
