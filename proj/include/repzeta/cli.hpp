#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace repzeta::cli {

enum class Format { Csv, Json };

struct RunConfig {
  std::string command;

  // witten
  std::string series = "A";
  int rank = 1;
  std::uint64_t bound = 100000;
  // local-sl2, oracle, orbit, census8
  std::uint64_t q = 3;
  unsigned level = 1;
  bool with_oracle = false;
  std::string group = "sl2";
  std::uint64_t modulus = 9;
  unsigned d = 2;
  unsigned k = 1;
  unsigned m = 4;
  unsigned t = 1;
  std::uint64_t samples = 0;
  // alt
  unsigned k_min = 5;
  unsigned k_max = 30;
  // euler
  std::uint64_t prime_bound = 100;
  std::vector<std::uint64_t> prime_grid;
  double growth_threshold = 1.15;

  std::vector<double> s_grid;
  std::uint64_t group_budget = 200000;
  std::uint64_t class_budget = 400;
  std::uint64_t scan_budget = 12;
  std::uint64_t enumeration_budget = 1000000;

  std::string output;  // empty: stdout
  Format format = Format::Json;
  std::uint64_t seed = 1;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::ordered_json>> rows;
};

struct Report {
  std::string command;
  nlohmann::ordered_json config;
  std::uint64_t seed = 0;
  nlohmann::ordered_json results;
  Table table;
  double wall_time_seconds = 0.0;
};

// Runs one subcommand. Throws PreconditionError / BudgetError.
Report run(const RunConfig& config);

nlohmann::ordered_json to_json(const Report& report);
std::string to_csv(const Report& report);
std::string render(const Report& report, Format format);

// Reals are rounded to 12 significant digits before they enter a report.
double round12(double x);

// Full command-line entry point; returns the process exit status
// (0 ok, 1 internal error, 2 invalid input, 3 budget exhausted).
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace repzeta::cli
