#include "repzeta/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "repzeta/errors.hpp"
#include "repzeta/euler_global.hpp"
#include "repzeta/finite_oracle.hpp"
#include "repzeta/isotropic_census.hpp"
#include "repzeta/local_sl2.hpp"
#include "repzeta/numtheory.hpp"
#include "repzeta/orbit_method.hpp"
#include "repzeta/rootsys.hpp"
#include "repzeta/symmetric.hpp"
#include "repzeta/version.hpp"
#include "repzeta/witten.hpp"

namespace repzeta::cli {

using json = nlohmann::ordered_json;

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

namespace {

json big(const BigInt& v) { return to_string(v); }
json real(double x) { return round12(x); }

std::vector<double> grid_or(const std::vector<double>& grid, std::vector<double> fallback) {
  return grid.empty() ? fallback : grid;
}

json real_grid(const std::vector<double>& grid) {
  json out = json::array();
  for (double s : grid) out.push_back(real(s));
  return out;
}

std::uint32_t checked_modulus(std::uint64_t n) {
  if (n < 2 || n > 0xFFFFFFFFULL) throw PreconditionError("modulus must lie in [2, 2^32)");
  return static_cast<std::uint32_t>(n);
}

// ---- witten ----
void run_witten(const RunConfig& cfg, Report& rep) {
  const auto series = rootsys::parse_series(cfg.series);
  const auto datum = rootsys::build_root_datum(series, cfg.rank);
  const auto s_grid = grid_or(cfg.s_grid, {});
  rep.config = {{"series", std::string(1, rootsys::series_letter(series))},
                {"rank", cfg.rank},
                {"bound", cfg.bound},
                {"s", real_grid(s_grid)}};
  const auto census = witten::enumerate_dimensions(datum, cfg.bound);
  const Rational ratio = rootsys::rank_kappa_ratio(datum);

  json& r = rep.results;
  r["type"] = datum.name();
  r["rank"] = datum.rank;
  r["kappa"] = datum.kappa;
  r["coxeter_number"] = datum.coxeter_number;
  r["rank_over_kappa"] = to_string(ratio);
  r["rank_over_kappa_real"] = real(ratio.convert_to<double>());
  r["distinct_degrees"] = census.distinct_degrees();
  r["irreducibles"] = big(census.irrep_count());
  if (census.distinct_degrees() >= witten::kAbscissaMinDegrees) {
    const auto est = witten::abscissa_estimate(census);
    r["abscissa"] = {{"slope", real(est.slope)},
                     {"standard_error", real(est.standard_error)},
                     {"target", real(ratio.convert_to<double>())},
                     {"window", est.window},
                     {"sample_points", est.sample_points.size()}};
  } else {
    r["abscissa"] = nullptr;
  }
  json sums = json::array();
  for (double s : s_grid) sums.push_back({{"s", real(s)}, {"partial_sum", real(witten::witten_partial_sum(census, s))}});
  r["partial_sums"] = sums;

  rep.table.columns = {"degree", "multiplicity", "R_n"};
  BigInt running = 0;
  for (const auto& e : census.entries()) {
    running += e.multiplicity;
    rep.table.rows.push_back({big(e.degree), big(e.multiplicity), big(running)});
  }
}

// ---- local-sl2 ----
void run_local(const RunConfig& cfg, Report& rep) {
  const auto s_grid = grid_or(cfg.s_grid, {2.0, 2.5, 3.0});
  rep.config = {{"q", cfg.q}, {"level", cfg.level}, {"s", real_grid(s_grid)}, {"oracle", cfg.with_oracle}};
  if (cfg.level < 1) throw PreconditionError("local-sl2: level must be >= 1");
  const auto lc = local_sl2::level_census(cfg.q, cfg.level);
  const auto factor = local_sl2::sl2_local_factor(cfg.q);
  const BigInt order = local_sl2::sl2_order(cfg.q, cfg.level);

  json& r = rep.results;
  r["q"] = cfg.q;
  r["level"] = cfg.level;
  r["census"] = lc.census.to_string();
  r["irreducibles"] = big(lc.census.irrep_count());
  r["irreducibles_closed_form"] = big(local_sl2::irrep_count(cfg.q, cfg.level));
  r["mass"] = big(lc.census.mass());
  r["group_order"] = big(order);
  r["mass_matches_order"] = lc.census.mass() == order;
  json factors = json::array();
  for (double s : s_grid) {
    json f = {{"s", real(s)}, {"value", real(local_sl2::evaluate_local(factor, s))}};
    if (s >= 2.0 && s <= 3.0) {
      const auto b = local_sl2::factor_bounds_check(cfg.q, s);
      f["lower"] = real(b.lower);
      f["upper"] = real(b.upper);
      f["bounds_hold"] = b.lower_ok && b.upper_ok;
      f["exact"] = b.exact;
    }
    factors.push_back(f);
  }
  r["factor"] = factors;

  std::optional<DegreeCensus> oracle_census;
  if (cfg.with_oracle) {
    const auto pp = nt::prime_power(cfg.q);
    if (!pp || pp->second != 1) throw PreconditionError("local-sl2: --oracle needs q prime");
    const auto g = oracle::sl2_group(checked_modulus(nt::pow_u64(cfg.q, cfg.level)), cfg.group_budget);
    const auto classes = oracle::conjugacy_classes(g);
    oracle_census = oracle::character_degrees(g, classes, cfg.class_budget);
    r["oracle"] = {{"order", g.order()},
                   {"classes", classes.count()},
                   {"census", oracle_census->to_string()},
                   {"match", *oracle_census == lc.census}};
  }

  rep.table.columns = {"degree", "multiplicity"};
  if (oracle_census) {
    rep.table.columns.push_back("oracle_multiplicity");
    rep.table.columns.push_back("match");
  }
  std::map<BigInt, std::pair<BigInt, BigInt>> merged;
  for (const auto& e : lc.census.entries()) merged[e.degree].first = e.multiplicity;
  if (oracle_census)
    for (const auto& e : oracle_census->entries()) merged[e.degree].second = e.multiplicity;
  for (const auto& [deg, mult] : merged) {
    std::vector<json> row = {big(deg), big(mult.first)};
    if (oracle_census) {
      row.push_back(big(mult.second));
      row.push_back(mult.first == mult.second);
    }
    rep.table.rows.push_back(std::move(row));
  }
}

// ---- oracle ----
void run_oracle(const RunConfig& cfg, Report& rep) {
  rep.config = {{"group", cfg.group},
                {"modulus", cfg.modulus},
                {"group_budget", cfg.group_budget},
                {"class_budget", cfg.class_budget}};
  if (cfg.group != "sl2") throw PreconditionError("oracle: only --group sl2 is supported");
  const auto g = oracle::sl2_group(checked_modulus(cfg.modulus), cfg.group_budget);
  const auto classes = oracle::conjugacy_classes(g);
  const auto degrees = oracle::character_degrees(g, classes, cfg.class_budget);

  json& r = rep.results;
  r["order"] = g.order();
  r["exponent"] = g.exponent();
  r["classes"] = classes.count();
  r["commutator_subgroup_order"] = oracle::commutator_subgroup_order(g);
  r["census"] = degrees.to_string();
  r["irreducibles"] = big(degrees.irrep_count());
  r["mass"] = big(degrees.mass());
  r["mass_matches_order"] = degrees.mass() == BigInt(g.order());

  std::optional<DegreeCensus> formula;
  const auto pp = nt::prime_power(cfg.modulus);
  if (pp && pp->first % 2 == 1) {
    formula = local_sl2::level_census(pp->first, pp->second).census;
    r["formula_census"] = formula->to_string();
    r["formula_match"] = *formula == degrees;
  }

  rep.table.columns = {"degree", "multiplicity"};
  if (formula) {
    rep.table.columns.push_back("formula_multiplicity");
    rep.table.columns.push_back("match");
  }
  std::map<BigInt, std::pair<BigInt, BigInt>> merged;
  for (const auto& e : degrees.entries()) merged[e.degree].first = e.multiplicity;
  if (formula)
    for (const auto& e : formula->entries()) merged[e.degree].second = e.multiplicity;
  for (const auto& [deg, mult] : merged) {
    std::vector<json> row = {big(deg), big(mult.first)};
    if (formula) {
      row.push_back(big(mult.second));
      row.push_back(mult.first == mult.second);
    }
    rep.table.rows.push_back(std::move(row));
  }
}

// ---- orbit ----
std::string chain_string(const std::vector<chains::Stage>& chain) {
  std::string out;
  for (const auto& st : chain) {
    if (!out.empty()) out += ' ';
    out += "(" + std::to_string(st.rank) + "," + std::to_string(st.kappa) + ")";
  }
  return out;
}

void run_orbit(const RunConfig& cfg, Report& rep) {
  const std::uint64_t samples = cfg.samples ? cfg.samples : 20;
  rep.config = {{"d", cfg.d}, {"p", cfg.q}, {"k", cfg.k}, {"samples", samples},
                {"enumeration_budget", cfg.enumeration_budget}};
  if (cfg.d < 2 || cfg.d > orbit::kMaxOracleDegree) throw PreconditionError("orbit: d must lie in [2, 4]");
  if (cfg.k < 1) throw PreconditionError("orbit: k must be >= 1");
  std::mt19937_64 rng(cfg.seed);
  const auto range = static_cast<std::int64_t>(nt::pow_u64(cfg.q, cfg.k + 1));
  std::uniform_int_distribution<std::int64_t> pick(-range, range);

  rep.table.columns = {"eigenvalues", "chain", "orbit_dimension", "formula_index_exponent",
                       "oracle_kernel_exponent", "oracle_index_exponent", "match"};
  bool all_match = true;
  for (std::uint64_t i = 0; i < samples; ++i) {
    std::vector<std::int64_t> ev(cfg.d);
    std::int64_t sum = 0;
    for (unsigned j = 0; j + 1 < cfg.d; ++j) sum += ev[j] = pick(rng);
    ev.back() = -sum;
    const auto datum = orbit::make_orbit_datum(ev, cfg.q, cfg.k);
    const auto oracle_idx = orbit::centralizer_index_oracle(datum, rng());
    const unsigned formula = 2 * orbit::orbit_dimension_exponent(datum);
    const bool match = formula == oracle_idx.index_exponent;
    all_match = all_match && match;
    std::string evs;
    for (auto x : ev) evs += (evs.empty() ? "" : " ") + std::to_string(x);
    rep.table.rows.push_back({evs, chain_string(datum.chain), big(orbit::orbit_dimension(datum)), formula,
                              oracle_idx.kernel_exponent, oracle_idx.index_exponent, match});
  }
  json& r = rep.results;
  r["samples"] = samples;
  r["all_match"] = all_match;
  if (cfg.d <= 3) {
    const auto census = orbit::census_vs_bound(cfg.d, cfg.q, cfg.k, cfg.enumeration_budget);
    json groups = json::array();
    for (const auto& g : census.groups)
      groups.push_back({{"chain", chain_string(g.chain)},
                        {"vectors", g.vector_count},
                        {"stepwise_bound", big(g.stepwise_bound)},
                        {"within", g.within_stepwise}});
    json types = json::array();
    for (const auto& g : census.type_groups)
      types.push_back({{"chain", chain_string(g.chain)},
                       {"classes", g.class_count},
                       {"displayed_bound", big(g.displayed_bound)},
                       {"within", g.within_displayed}});
    r["census"] = {{"all_within_stepwise", census.all_within_stepwise},
                   {"all_within_displayed", census.all_within_displayed},
                   {"chains", groups},
                   {"chain_types", types}};
  }
}

// ---- census8 ----
std::vector<std::uint64_t> stratified_sample(const isotropic::CensusFamily& fam, std::uint64_t size,
                                             std::uint64_t seed) {
  std::map<std::vector<std::uint64_t>, std::vector<std::uint64_t>> strata;
  for (std::uint64_t idx = 0; idx < fam.rep_count; ++idx) {
    std::vector<std::uint64_t> key;
    for (const auto& row : fam.y_block(idx))
      for (auto x : row) key.push_back(x % fam.q);
    strata[key].push_back(idx);
  }
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::uint64_t>> pools;
  for (auto& [key, pool] : strata) {
    std::shuffle(pool.begin(), pool.end(), rng);
    pools.push_back(std::move(pool));
  }
  std::vector<std::uint64_t> out;
  for (std::size_t round = 0; out.size() < size; ++round) {
    bool any = false;
    for (const auto& pool : pools) {
      if (round < pool.size() && out.size() < size) {
        out.push_back(pool[round]);
        any = true;
      }
    }
    if (!any) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

void run_census8(const RunConfig& cfg, Report& rep) {
  rep.config = {{"m", cfg.m}, {"q", cfg.q}, {"k", cfg.k}, {"t", cfg.t},
                {"samples", cfg.samples}, {"scan_budget", cfg.scan_budget}};
  const auto fam = isotropic::build_census_family(cfg.m, cfg.q, cfg.k, cfg.t, cfg.enumeration_budget);
  std::vector<std::uint64_t> sample;
  if (cfg.samples > 0 && cfg.samples < fam.rep_count) sample = stratified_sample(fam, cfg.samples, cfg.seed);
  const auto count = isotropic::distinct_class_count(fam, sample, cfg.scan_budget);
  bool blocks_ok = true;
  for (const auto& g : count.join_conjugators) blocks_ok = blocks_ok && isotropic::block_structure(fam, g).all();

  json& r = rep.results;
  r["precision"] = fam.precision;
  r["modulus"] = fam.modulus;
  r["representatives"] = fam.rep_count;
  r["x_diagonal"] = fam.x_diag;
  r["z_diagonal"] = fam.z_diag;
  r["sample_size"] = count.sample_size;
  r["classes_found"] = count.classes_found;
  r["lower_bound"] = big(count.lower_bound);
  r["meets_bound"] = count.meets_bound;
  r["certified"] = count.certified;
  r["result_kind"] = count.certified ? "certificate" : "lower bound";
  r["unknown_outcomes"] = count.unknown_outcomes;
  r["conjugate_pairs_checked"] = count.join_conjugators.size();
  r["block_structure_holds"] = blocks_ok;
  if (sample.empty()) r["orbit_prediction"] = isotropic::predicted_orbit_count(fam);

  std::vector<std::uint64_t> ids = sample;
  if (ids.empty())
    for (std::uint64_t i = 0; i < fam.rep_count; ++i) ids.push_back(i);
  std::vector<std::uint64_t> rep_of(count.classes_found, 0), size_of(count.classes_found, 0);
  std::vector<bool> seen(count.classes_found, false);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const auto c = count.class_of[i];
    if (!seen[c]) {
      seen[c] = true;
      rep_of[c] = ids[i];
    }
    ++size_of[c];
  }
  rep.table.columns = {"class", "representative", "size"};
  for (std::size_t c = 0; c < count.classes_found; ++c) rep.table.rows.push_back({c, rep_of[c], size_of[c]});
}

// ---- alt ----
void run_alt(const RunConfig& cfg, Report& rep) {
  const auto s_grid = grid_or(cfg.s_grid, {1.0});
  rep.config = {{"k_min", cfg.k_min}, {"k_max", cfg.k_max}, {"s", real_grid(s_grid)}};
  if (cfg.k_min < 5 || cfg.k_max < cfg.k_min) throw PreconditionError("alt: need 5 <= k-min <= k-max");
  rep.table.columns = {"k", "s", "irreducibles", "mass", "expected_mass", "mass_ok", "zeta",
                       "min_nontrivial_degree", "rbound_0.5", "rbound_0.9"};
  bool decreasing = true;
  std::map<double, double> previous;
  for (unsigned k = cfg.k_min; k <= cfg.k_max; ++k) {
    const auto census = symmetric::an_degrees(k);
    BigInt half_factorial = 1;
    for (unsigned i = 3; i <= k; ++i) half_factorial *= i;
    const BigInt min_deg = census.entries().size() > 1 ? census.entries()[1].degree : BigInt(1);
    const bool rb5 = symmetric::rbound_check(census, 0.5);
    const bool rb9 = symmetric::rbound_check(census, 0.9);
    for (double s : s_grid) {
      const double z = symmetric::ak_zeta(k, s);
      if (previous.count(s) && !(z < previous[s])) decreasing = false;
      previous[s] = z;
      rep.table.rows.push_back({k, real(s), big(census.irrep_count()), big(census.mass()), big(half_factorial),
                                census.mass() == half_factorial, real(z), big(min_deg), rb5, rb9});
    }
  }
  rep.results["strictly_decreasing"] = decreasing;
}

// ---- euler ----
void run_euler(const RunConfig& cfg, Report& rep) {
  const auto s_grid = grid_or(cfg.s_grid, {2.1, 2.25, 2.5, 2.75, 3.0});
  const auto prime_grid = cfg.prime_grid.empty() ? std::vector<std::uint64_t>{100, 1000, 10000} : cfg.prime_grid;
  rep.config = {{"prime_bound", cfg.prime_bound},
                {"s", real_grid(s_grid)},
                {"prime_grid", prime_grid},
                {"growth_threshold", real(cfg.growth_threshold)}};
  rep.table.columns = {"s", "P", "lower", "product", "upper", "holds"};
  bool all_hold = true;
  for (double s : s_grid) {
    const auto sw = euler::sandwich_check(cfg.prime_bound, s);
    all_hold = all_hold && sw.holds;
    rep.table.rows.push_back({real(s), cfg.prime_bound, real(sw.lower), real(sw.value), real(sw.upper), sw.holds});
  }
  const auto scan = euler::divergence_scan(prime_grid, 2.0, cfg.growth_threshold);
  json products = json::array();
  for (double v : scan.products) products.push_back(real(v));
  rep.results["sandwich_holds"] = all_hold;
  rep.results["divergence"] = {{"s", 2.0},
                               {"grid", scan.grid},
                               {"products", products},
                               {"strictly_increasing", scan.strictly_increasing},
                               {"ratio", real(scan.ratio)},
                               {"evidence", scan.evidence}};
}

std::string csv_cell(const json& v) {
  std::string text;
  if (v.is_string()) {
    text = v.get<std::string>();
  } else if (v.is_number_float()) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v.get<double>());
    text = buf;
  } else if (v.is_null()) {
    return "";
  } else {
    text = v.dump();
  }
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

Report run(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.command = cfg.command;
  rep.seed = cfg.seed;
  if (cfg.command == "witten") run_witten(cfg, rep);
  else if (cfg.command == "local-sl2") run_local(cfg, rep);
  else if (cfg.command == "oracle") run_oracle(cfg, rep);
  else if (cfg.command == "orbit") run_orbit(cfg, rep);
  else if (cfg.command == "census8") run_census8(cfg, rep);
  else if (cfg.command == "alt") run_alt(cfg, rep);
  else if (cfg.command == "euler") run_euler(cfg, rep);
  else throw PreconditionError("unknown subcommand '" + cfg.command + "'");
  rep.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

json to_json(const Report& rep) {
  json out;
  out["tool"] = "repzeta";
  out["version"] = kVersion;
  out["command"] = rep.command;
  out["config"] = rep.config;
  out["seed"] = rep.seed;
  out["results"] = rep.results;
  json rows = json::array();
  for (const auto& row : rep.table.rows) rows.push_back(row);
  out["table"] = {{"columns", rep.table.columns}, {"rows", rows}};
  out["wall_time_seconds"] = round12(rep.wall_time_seconds);
  return out;
}

std::string to_csv(const Report& rep) {
  std::ostringstream os;
  os << "# tool=repzeta\n# version=" << kVersion << "\n# command=" << rep.command
     << "\n# config=" << rep.config.dump() << "\n# seed=" << rep.seed << "\n";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", rep.wall_time_seconds);
  os << "# wall_time_seconds=" << buf << "\n";
  for (std::size_t i = 0; i < rep.table.columns.size(); ++i)
    os << (i ? "," : "") << csv_cell(rep.table.columns[i]);
  os << "\n";
  for (const auto& row : rep.table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
    os << "\n";
  }
  return os.str();
}

std::string render(const Report& rep, Format format) {
  return format == Format::Csv ? to_csv(rep) : to_json(rep).dump(2) + "\n";
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Representation zeta function experiments"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("-o,--output", cfg.output, "Output file (default: stdout)");
  app.add_option("-f,--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", cfg.seed, "Random seed for sampled experiments");

  auto* witten = app.add_subcommand("witten", "Witten census and abscissa estimate");
  witten->add_option("--series", cfg.series, "Root system series A..G");
  witten->add_option("--rank", cfg.rank, "Rank")->check(CLI::PositiveNumber);
  witten->add_option("--bound", cfg.bound, "Census bound N")->check(CLI::PositiveNumber);
  witten->add_option("--s", cfg.s_grid, "Points for partial sums");

  auto* local = app.add_subcommand("local-sl2", "SL_2 local factor and level census");
  local->add_option("--q", cfg.q, "Residue field size (odd prime power)");
  local->add_option("--level", cfg.level, "Congruence level k")->check(CLI::PositiveNumber);
  local->add_option("--s", cfg.s_grid, "Evaluation points");
  local->add_flag("--oracle", cfg.with_oracle, "Cross-check against the finite-group oracle");
  local->add_option("--group-budget", cfg.group_budget, "Maximum group order")->check(CLI::PositiveNumber);
  local->add_option("--class-budget", cfg.class_budget, "Maximum class count")->check(CLI::PositiveNumber);

  auto* orc = app.add_subcommand("oracle", "Finite matrix group census");
  orc->add_option("--group", cfg.group, "Group family (sl2)");
  orc->add_option("--modulus", cfg.modulus, "Modulus n of SL_2(Z/n)");
  orc->add_option("--group-budget", cfg.group_budget, "Maximum group order")->check(CLI::PositiveNumber);
  orc->add_option("--class-budget", cfg.class_budget, "Maximum class count")->check(CLI::PositiveNumber);

  auto* orb = app.add_subcommand("orbit", "Orbit dimensions against the Smith-form oracle");
  orb->add_option("--d", cfg.d, "Matrix size");
  orb->add_option("--p", cfg.q, "Odd prime");
  orb->add_option("--k", cfg.k, "Level");
  orb->add_option("--samples", cfg.samples, "Random split data points (default 20)");
  orb->add_option("--enumeration-budget", cfg.enumeration_budget, "Chain census budget")->check(CLI::PositiveNumber);

  auto* c8 = app.add_subcommand("census8", "Conjugacy class certificate for the M_Y family");
  c8->add_option("--m", cfg.m, "Even matrix size");
  c8->add_option("--q", cfg.q, "Odd prime");
  c8->add_option("--k", cfg.k, "Level k");
  c8->add_option("--t", cfg.t, "Regularity depth t");
  c8->add_option("--samples", cfg.samples, "Stratified subsample size (0: all)");
  c8->add_option("--scan-budget", cfg.scan_budget, "Maximum mod-p scan dimension")->check(CLI::PositiveNumber);
  c8->add_option("--enumeration-budget", cfg.enumeration_budget, "Maximum representatives")->check(CLI::PositiveNumber);

  auto* alt = app.add_subcommand("alt", "Alternating group zeta table");
  alt->add_option("--k-min", cfg.k_min, "Smallest k (>= 5)");
  alt->add_option("--k-max", cfg.k_max, "Largest k (<= 36)");
  alt->add_option("--s", cfg.s_grid, "Evaluation points");

  auto* eul = app.add_subcommand("euler", "Euler products, sandwich and divergence scan");
  eul->add_option("--prime-bound", cfg.prime_bound, "Prime bound P for the sandwich");
  eul->add_option("--s", cfg.s_grid, "Points in (2, 3]");
  eul->add_option("--prime-grid", cfg.prime_grid, "Increasing prime bounds for the s = 2 scan");
  eul->add_option("--threshold", cfg.growth_threshold, "Growth ratio for divergence evidence");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = format == "csv" ? Format::Csv : Format::Json;

  try {
    const auto report = run(cfg);
    const std::string text = render(report, cfg.format);
    if (cfg.output.empty()) {
      out << text;
    } else {
      std::ofstream file(cfg.output, std::ios::binary);
      if (!file) {
        err << "error: cannot open " << cfg.output << " for writing\n";
        return 2;
      }
      file << text;
    }
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    err << "budget exhausted: " << e.what() << "; raise the corresponding --*-budget option\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace repzeta::cli
