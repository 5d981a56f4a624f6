// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Usage: acceptance [--expect-fail N]...  Exit status is 0 iff the set of
// failing criteria equals the expected set.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "repzeta/chains.hpp"
#include "repzeta/euler_global.hpp"
#include "repzeta/finite_oracle.hpp"
#include "repzeta/isotropic_census.hpp"
#include "repzeta/local_sl2.hpp"
#include "repzeta/numtheory.hpp"
#include "repzeta/orbit_method.hpp"
#include "repzeta/rootsys.hpp"
#include "repzeta/symmetric.hpp"
#include "repzeta/witten.hpp"

using namespace repzeta;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

// 1. Root data identities.
void criterion_1(Outcome& o) {
  std::size_t types = 0;
  for (auto [series, rank] : rootsys::irreducible_types(8)) {
    const auto d = rootsys::build_root_datum(series, rank);
    const int dim = rootsys::standard_dimension(series, rank);
    const int h = rootsys::standard_coxeter_number(series, rank);
    ++types;
    o.require(2 * d.kappa == dim - rank, d.name() + " kappa");
    o.require(static_cast<int>(d.positive_roots.size()) == d.kappa, d.name() + " root count");
    o.require(rootsys::rank_kappa_ratio(d) == Rational(2, h), d.name() + " r/kappa");
  }
  const auto e8 = rootsys::build_root_datum(rootsys::Series::E, 8);
  o.require(rootsys::rank_kappa_ratio(e8) == Rational(1, 15), "E8 ratio 1/15");
  o.detail << types << " types checked, E8 r/kappa = " << to_string(rootsys::rank_kappa_ratio(e8));
}

// 2. The A1 census is the positive integers.
void criterion_2(Outcome& o) {
  const auto census = witten::enumerate_dimensions(rootsys::build_root_datum(rootsys::Series::A, 1), 1000000);
  bool exact = census.distinct_degrees() == 1000000;
  BigInt expected = 1;
  for (const auto& e : census.entries()) {
    exact = exact && e.degree == expected && e.multiplicity == 1;
    ++expected;
  }
  o.require(exact, "census equals {1..1e6}");
  const double sum = witten::witten_partial_sum(census, 2.0);
  const double err = std::fabs(sum - M_PI * M_PI / 6);
  o.require(err <= 2e-6, "partial sum near pi^2/6");
  o.detail << "|Z_N(2) - pi^2/6| = " << err;
}

// 3. Abscissa slopes and dyadic divergence witness.
void criterion_3(Outcome& o) {
  using rootsys::Series;
  for (auto [series, rank] : {std::pair{Series::A, 1}, std::pair{Series::A, 2}, std::pair{Series::C, 3},
                              std::pair{Series::G, 2}}) {
    const auto d = rootsys::build_root_datum(series, rank);
    const double target = rootsys::rank_kappa_ratio(d).convert_to<double>();
    const auto est = witten::abscissa_estimate(witten::enumerate_dimensions(d, 100000));
    o.require(std::fabs(est.slope - target) <= 0.12, d.name() + " slope");
    o.detail << d.name() << " slope " << est.slope << " vs " << target << "; ";
  }
  const auto a1 = rootsys::build_root_datum(Series::A, 1);
  double smallest = 1e300;
  for (unsigned j = 0; j <= 10; ++j) smallest = std::min(smallest, witten::dyadic_block_sum(a1, 1.0, j));
  o.require(smallest >= 0.3, "A1 dyadic blocks >= 0.3");
  o.detail << "min A1 block " << smallest;
}

// 4. Closed form against truncated nested sums; divergence detection.
void criterion_4(Outcome& o) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> suffix(-3.0, -0.5);
  double worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + trial % 4;
    std::vector<double> s(k);
    for (auto& x : s) x = suffix(rng);
    chains::ExponentVector v;
    for (int i = 0; i < k; ++i) v.a.push_back(s[i] - (i + 1 < k ? s[i + 1] : 0.0));
    const double closed = chains::chain_product_value(v);
    const double truncated = chains::chain_truncated_sum(v, 80);
    worst = std::max(worst, std::fabs(closed - truncated) / std::fabs(closed));
  }
  o.require(worst <= 1e-6, "relative agreement 1e-6");

  std::uniform_real_distribution<double> any(-2.0, 2.0);
  std::uniform_real_distribution<double> nonneg(0.2, 2.0);
  int divergent = 0, detected = 0, false_alarms = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + trial % 4;
    std::vector<double> s(k);
    for (auto& x : s) x = any(rng);
    s[rng() % k] = nonneg(rng);
    chains::ExponentVector v;
    for (int i = 0; i < k; ++i) v.a.push_back(s[i] - (i + 1 < k ? s[i + 1] : 0.0));
    if (!chains::suffix_converges(v)) {
      ++divergent;
      detected += chains::diverges_by_doubling(v);
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + trial % 4;
    std::vector<double> s(k);
    for (auto& x : s) x = suffix(rng);
    chains::ExponentVector v;
    for (int i = 0; i < k; ++i) v.a.push_back(s[i] - (i + 1 < k ? s[i + 1] : 0.0));
    false_alarms += chains::diverges_by_doubling(v);
  }
  o.require(divergent == 100 && detected == divergent, "divergence detected");
  o.require(false_alarms == 0, "no divergence reported for convergent vectors");
  o.require(chains::diverges_by_doubling({{0.0}}), "boundary vector (0) diverges");
  o.detail << "max relative error " << worst << "; divergence detected " << detected << "/" << divergent;
}

// 5. Local SL2 formula against the finite group oracle.
void criterion_5(Outcome& o) {
  for (auto [q, k] : {std::pair{3u, 1u}, std::pair{3u, 2u}, std::pair{5u, 1u}}) {
    const auto g = oracle::sl2_group(nt::pow_u64(q, k));
    o.require(oracle::character_degrees(g) == local_sl2::level_census(q, k).census,
              "degrees at q=" + std::to_string(q) + " k=" + std::to_string(k));
  }
  const std::size_t expected[] = {7, 25, 79};
  for (unsigned k = 1; k <= 3; ++k) {
    const auto g = oracle::sl2_group(nt::pow_u64(3, k));
    const std::size_t classes = oracle::conjugacy_classes(g).count();
    o.require(classes == expected[k - 1], "class count at 3^" + std::to_string(k));
    o.detail << "|G|=" << g.order() << " classes " << classes << "; ";
  }
  for (std::uint64_t q : {3, 5, 7, 9, 11, 13})
    for (unsigned k = 1; k <= 6; ++k)
      o.require(local_sl2::level_census(q, k).census.mass() == local_sl2::sl2_order(q, k), "mass identity");
  o.detail << "mass identities q<=13, k<=6 checked";
}

// 6. Orbit dimensions against the Smith form oracle; kernel and cokernel.
void criterion_6(Outcome& o) {
  std::mt19937_64 rng(6);
  int ok = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned d = 2 + rng() % 2;
    const std::uint64_t p = std::vector<std::uint64_t>{3, 5, 7}[rng() % 3];
    const unsigned k = 1 + rng() % 3;
    std::vector<std::int64_t> ev(d);
    std::int64_t sum = 0;
    do {
      sum = 0;
      for (unsigned i = 0; i + 1 < d; ++i) sum += ev[i] = static_cast<std::int64_t>(rng() % 2000) - 1000;
      ev.back() = -sum;
    } while ([&] {
      for (unsigned i = 0; i < d; ++i)
        for (unsigned j = i + 1; j < d; ++j)
          if (ev[i] == ev[j]) return true;
      return false;
    }());
    const auto datum = orbit::make_orbit_datum(ev, p, k);
    const auto oracle = orbit::centralizer_index_oracle(datum, rng());
    const BigInt dim = orbit::orbit_dimension(datum);
    ok += dim * dim * ipow(p, oracle.kernel_exponent) == ipow(p, (d * d - 1) * k);
  }
  o.require(ok == 50, "orbit identity");
  int kc = 0;
  for (int tested = 0; tested < 100;) {
    const std::size_t n = 1 + rng() % 6;
    linalg::IntMat t(n, std::vector<BigInt>(n));
    for (auto& row : t)
      for (auto& x : row) x = static_cast<int>(rng() % 19) - 9;
    if (linalg::determinant(t) == 0) continue;
    const auto res = orbit::kernel_cokernel_size(t, std::vector<std::uint64_t>{3, 5, 7}[rng() % 3], 1 + rng() % 5);
    kc += res.kernel_size == res.cokernel_size;
    ++tested;
  }
  o.require(kc == 100, "|ker| = |cok|");
  o.detail << "orbit identity " << ok << "/50, kernel=cokernel " << kc << "/100";
}

// 7. Class census certificate with exhaustive pairwise testing.
void criterion_7(Outcome& o) {
  const auto f = isotropic::build_census_family(4, 3, 1, 1);
  const std::size_t n = f.rep_count;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::size_t unknown = 0, conjugate_pairs = 0, structured = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto r = isotropic::are_conjugate(f.m_y(i), f.m_y(j), f.q, f.precision);
      if (r.verdict == isotropic::Verdict::Unknown) ++unknown;
      if (r.verdict != isotropic::Verdict::Conjugate) continue;
      ++conjugate_pairs;
      structured += r.conjugator && isotropic::block_structure(f, *r.conjugator).all();
      parent[find(i)] = find(j);
    }
  std::size_t classes = 0;
  for (std::size_t i = 0; i < n; ++i) classes += find(i) == i;
  const std::uint64_t bound = 3;
  o.require(unknown == 0, "all pairs decided");
  o.require(classes >= bound, "classes >= 3");
  o.require(structured == conjugate_pairs, "block structure on every conjugator");
  const auto greedy = isotropic::distinct_class_count(f);
  o.require(greedy.classes_found == classes && greedy.certified, "greedy census agrees");
  o.detail << n << " representatives, " << n * (n - 1) / 2 << " pairs, " << classes << " classes >= " << bound
           << ", block structure " << structured << "/" << conjugate_pairs;
}

// 8. Growth estimate from the oracle class counts.
void criterion_8(Outcome& o) {
  isotropic::GammaSeries series{{}, 3, 3};
  for (unsigned k = 1; k <= 3; ++k)
    series.points.emplace_back(k, BigInt(oracle::conjugacy_classes(oracle::sl2_group(nt::pow_u64(3, k))).count()));
  const auto g = isotropic::gamma_estimate(series);
  o.require(g.gamma >= 0.95 && g.gamma <= 1.15, "gamma in [0.95, 1.15]");
  o.require(g.crude_rho_bound >= 0.9 && g.crude_rho_bound <= 1.2, "crude bound in [0.9, 1.2]");
  o.detail << "gamma " << g.gamma << ", crude bound " << g.crude_rho_bound;
}

// 9. Alternating group trend.
void criterion_9(Outcome& o) {
  BigInt fact = 1;
  for (unsigned k = 2; k <= 30; ++k) {
    fact *= k;
    o.require(symmetric::an_degrees(k).mass() == fact / 2, "mass A" + std::to_string(k));
  }
  bool decreasing = true;
  for (unsigned k = 9; k <= 30; ++k) decreasing = decreasing && symmetric::ak_zeta(k, 1.0) < symmetric::ak_zeta(k - 1, 1.0);
  o.require(decreasing, "strictly decreasing on 8..30");
  const double z30 = symmetric::ak_zeta(30, 1.0);
  o.require(z30 < 1.01, "Z_A30(1) < 1.01");
  bool rbound = true;
  for (unsigned k = 5; k <= 20; ++k)
    for (double s : {0.5, 0.9}) rbound = rbound && symmetric::rbound_check(symmetric::an_degrees(k), s);
  o.require(rbound, "R-bound A5..A20");
  o.detail << "Z_A30(1) = " << z30;
}

// 10. Sandwich bounds, boundary divergence and interior convergence.
void criterion_10(Outcome& o) {
  std::size_t checks = 0;
  for (std::uint64_t q : nt::primes_up_to(97)) {
    if (q == 2) continue;
    for (int i = 0; i <= 10; ++i) {
      const auto b = local_sl2::factor_bounds_check(q, 2.0 + 0.1 * i);
      o.require(b.lower_ok && b.upper_ok, "factor bounds q=" + std::to_string(q));
      ++checks;
    }
  }
  const auto scan = euler::divergence_scan({100, 1000, 10000}, 2.0);
  o.require(scan.strictly_increasing, "increasing at s=2");
  o.require(scan.ratio > 1.15, "ratio > 1.15");
  o.require(euler::cauchy_tail_check(1000, 10000, 2.25), "Cauchy at s=2.25");
  o.require(euler::cauchy_tail_check(100, 1000, 2.25), "Cauchy at s=2.25 (small)");
  o.detail << checks << " factor bounds, s=2 ratio " << scan.ratio;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected_failures;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc) {
      expected_failures.insert(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--expect-fail N]...\n";
      return 2;
    }
  }
  const std::vector<void (*)(Outcome&)> criteria = {criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                                                    criterion_6, criterion_7, criterion_8, criterion_9, criterion_10};
  std::set<int> failures;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i](o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "[exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const int id = static_cast<int>(i + 1);
    if (!o.pass) failures.insert(id);
    std::printf("Criterion %d: %s (%.2fs) %s\n", id, o.pass ? "PASS" : "FAIL", secs, o.detail.str().c_str());
    std::fflush(stdout);
  }
  for (int id : failures)
    if (expected_failures.count(id)) std::printf("Criterion %d failed as expected\n", id);
  for (int id : expected_failures)
    if (!failures.count(id)) std::printf("Criterion %d passed unexpectedly\n", id);
  return failures == expected_failures ? 0 : 1;
}
