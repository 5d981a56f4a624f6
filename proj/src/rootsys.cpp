#include "repzeta/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "repzeta/errors.hpp"

namespace repzeta::rootsys {

namespace {

using IntMatrix = std::vector<std::vector<int>>;

// Gram matrix of the simple roots, scaled so every entry is an integer.
IntMatrix gram_matrix(Series series, int r) {
  IntMatrix g(r, std::vector<int>(r, 0));
  auto bond = [&](int i, int j, int v) {
    g[i][j] = v;
    g[j][i] = v;
  };
  switch (series) {
    case Series::A:
      for (int i = 0; i < r; ++i) g[i][i] = 2;
      for (int i = 0; i + 1 < r; ++i) bond(i, i + 1, -1);
      break;
    case Series::B:
      // alpha_r short; scale so long roots have squared length 4.
      for (int i = 0; i < r; ++i) g[i][i] = 4;
      g[r - 1][r - 1] = 2;
      for (int i = 0; i + 1 < r; ++i) bond(i, i + 1, -2);
      break;
    case Series::C:
      // alpha_r long.
      for (int i = 0; i < r; ++i) g[i][i] = 2;
      g[r - 1][r - 1] = 4;
      for (int i = 0; i + 2 < r; ++i) bond(i, i + 1, -1);
      bond(r - 2, r - 1, -2);
      break;
    case Series::D:
      for (int i = 0; i < r; ++i) g[i][i] = 2;
      for (int i = 0; i + 2 < r; ++i) bond(i, i + 1, -1);
      bond(r - 3, r - 1, -1);
      break;
    case Series::E:
      // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
      for (int i = 0; i < r; ++i) g[i][i] = 2;
      bond(0, 2, -1);
      bond(1, 3, -1);
      for (int i = 2; i + 1 < r; ++i) bond(i, i + 1, -1);
      break;
    case Series::F:
      g[0][0] = 4;
      g[1][1] = 4;
      g[2][2] = 2;
      g[3][3] = 2;
      bond(0, 1, -2);
      bond(1, 2, -2);
      bond(2, 3, -1);
      break;
    case Series::G:
      g[0][0] = 2;
      g[1][1] = 6;
      bond(0, 1, -3);
      break;
  }
  return g;
}

// Positive roots in simple-root coordinates, by closure over root strings.
IntMatrix positive_roots_from_cartan(const IntMatrix& a) {
  const int r = static_cast<int>(a.size());
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    known.insert(e);
    layer.push_back(e);
  }
  IntMatrix all = layer;
  while (!layer.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < r; ++i) {
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (int j = 0; j < r; ++j) pairing += beta[j] * a[j][i];
        if (p - pairing > 0) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& v : layer) {
      known.insert(v);
      all.push_back(v);
    }
  }
  return all;
}

int height(const std::vector<int>& v) {
  int h = 0;
  for (int x : v) h += x;
  return h;
}

}  // namespace

char series_letter(Series s) { return static_cast<char>('A' + static_cast<int>(s)); }

Series parse_series(const std::string& text) {
  if (text.size() == 1) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (c >= 'A' && c <= 'G') return static_cast<Series>(c - 'A');
  }
  throw PreconditionError("unknown root system series '" + text + "' (expected one of A..G)");
}

std::string RootDatum::name() const {
  std::ostringstream os;
  os << series_letter(series) << rank;
  return os.str();
}

bool is_valid_type(Series series, int rank) {
  switch (series) {
    case Series::A: return rank >= 1;
    case Series::B: return rank >= 2;
    case Series::C: return rank >= 3;
    case Series::D: return rank >= 4;
    case Series::E: return rank >= 6 && rank <= 8;
    case Series::F: return rank == 4;
    case Series::G: return rank == 2;
  }
  return false;
}

namespace {

std::string type_constraint(Series series) {
  switch (series) {
    case Series::A: return "A requires rank >= 1";
    case Series::B: return "B requires rank >= 2";
    case Series::C: return "C requires rank >= 3";
    case Series::D: return "D requires rank >= 4";
    case Series::E: return "E requires rank in {6,7,8}";
    case Series::F: return "F requires rank 4";
    case Series::G: return "G requires rank 2";
  }
  return "";
}

}  // namespace

std::vector<std::vector<int>> cartan_matrix(Series series, int rank) {
  if (!is_valid_type(series, rank)) {
    throw PreconditionError("invalid root system type: " + type_constraint(series));
  }
  const IntMatrix g = gram_matrix(series, rank);
  IntMatrix a(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) a[i][j] = 2 * g[i][j] / g[j][j];
  }
  return a;
}

RootDatum build_root_datum(Series series, int rank) {
  const IntMatrix a = cartan_matrix(series, rank);
  // Coroots form the dual root system, whose Cartan matrix is the transpose.
  // A positive coroot written in simple coroots has coefficients
  // alpha^v(w_i), which is exactly the row we need.
  IntMatrix at(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) at[i][j] = a[j][i];
  }
  IntMatrix rows = positive_roots_from_cartan(at);
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    const int hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x < y;
  });

  RootDatum d;
  d.series = series;
  d.rank = rank;
  d.positive_roots = rows;
  d.kappa = static_cast<int>(rows.size());
  d.rho_values.reserve(rows.size());
  for (const auto& row : rows) d.rho_values.push_back(height(row));
  d.coxeter_number = d.rho_values.back() + 1;  // height of the highest coroot + 1
  return d;
}

std::vector<std::pair<Series, int>> irreducible_types(int max_rank) {
  std::vector<std::pair<Series, int>> out;
  for (int s = 0; s < 7; ++s) {
    const auto series = static_cast<Series>(s);
    for (int r = 1; r <= max_rank; ++r) {
      if (is_valid_type(series, r)) out.emplace_back(series, r);
    }
  }
  return out;
}

int standard_dimension(Series series, int r) {
  switch (series) {
    case Series::A: return r * (r + 2);
    case Series::B:
    case Series::C: return r * (2 * r + 1);
    case Series::D: return r * (2 * r - 1);
    case Series::E: return r == 6 ? 78 : (r == 7 ? 133 : 248);
    case Series::F: return 52;
    case Series::G: return 14;
  }
  return 0;
}

int standard_coxeter_number(Series series, int r) {
  switch (series) {
    case Series::A: return r + 1;
    case Series::B:
    case Series::C: return 2 * r;
    case Series::D: return 2 * r - 2;
    case Series::E: return r == 6 ? 12 : (r == 7 ? 18 : 30);
    case Series::F: return 12;
    case Series::G: return 6;
  }
  return 0;
}

BigInt weyl_dimension(const RootDatum& datum, const DominantWeight& weight) {
  if (static_cast<int>(weight.coeffs.size()) != datum.rank) {
    throw PreconditionError("weyl_dimension: weight has " + std::to_string(weight.coeffs.size()) +
                            " coefficients, datum " + datum.name() + " has rank " +
                            std::to_string(datum.rank));
  }
  BigInt num = 1, den = 1;
  for (std::size_t j = 0; j < datum.positive_roots.size(); ++j) {
    BigInt lin = 0;
    const auto& row = datum.positive_roots[j];
    for (int i = 0; i < datum.rank; ++i) {
      lin += BigInt(row[i]) * (BigInt(weight.coeffs[i]) + 1);
    }
    num *= lin;
    den *= datum.rho_values[j];
  }
  return num / den;
}

double weyl_dimension_approx(const RootDatum& datum, const std::vector<std::uint64_t>& coeffs) {
  double value = 1.0;
  for (std::size_t j = 0; j < datum.positive_roots.size(); ++j) {
    double lin = 0.0;
    const auto& row = datum.positive_roots[j];
    for (int i = 0; i < datum.rank; ++i) {
      lin += row[i] * (static_cast<double>(coeffs[i]) + 1.0);
    }
    value *= lin / datum.rho_values[j];
  }
  return value;
}

Rational rank_kappa_ratio(const RootDatum& datum) { return Rational(datum.rank, datum.kappa); }

LeviSummary levi_subsystem_mask(const RootDatum& datum, std::uint32_t mask) {
  LeviSummary out;
  for (int i = 0; i < datum.rank; ++i) {
    if (mask & (1U << i)) ++out.rank;
  }
  for (const auto& row : datum.positive_roots) {
    bool inside = true;
    for (int i = 0; i < datum.rank && inside; ++i) {
      if (row[i] != 0 && !(mask & (1U << i))) inside = false;
    }
    if (inside) ++out.kappa;
  }
  return out;
}

LeviSummary levi_subsystem(const RootDatum& datum, const std::vector<int>& simple_subset) {
  std::uint32_t mask = 0;
  for (int idx : simple_subset) {
    if (idx < 1 || idx > datum.rank) {
      throw PreconditionError("levi_subsystem: simple root index " + std::to_string(idx) +
                              " outside 1.." + std::to_string(datum.rank));
    }
    mask |= 1U << (idx - 1);
  }
  return levi_subsystem_mask(datum, mask);
}

}  // namespace repzeta::rootsys
