#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "repzeta/cli.hpp"

using nlohmann::ordered_json;

namespace {

struct Invocation {
  int code = 0;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "repzeta");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Invocation r;
  r.code = repzeta::cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

ordered_json stripped(const std::string& text) {
  auto j = ordered_json::parse(text);
  j.erase("wall_time_seconds");
  return j;
}

void check_golden(const std::vector<std::string>& args, const std::string& file) {
  const auto r = invoke(args);
  REQUIRE(r.code == 0);
  std::ifstream in(std::string(REPZETA_GOLDEN_DIR) + "/" + file);
  REQUIRE(in);
  CHECK(stripped(r.out) == ordered_json::parse(in));
}

}  // namespace

TEST_CASE("golden reports") {
  check_golden({"local-sl2", "--q", "3", "--level", "2"}, "local_sl2_q3_l2.json");
  check_golden({"oracle", "--modulus", "9"}, "oracle_9.json");
  check_golden({"census8", "--m", "4", "--q", "3", "--k", "1", "--t", "1"}, "census8_4311.json");
  check_golden({"alt", "--k-min", "5", "--k-max", "8"}, "alt_5_8.json");
  check_golden({"orbit", "--d", "2", "--p", "3", "--k", "2", "--samples", "5"}, "orbit_d2_p3_k2.json");
}

TEST_CASE("reports are deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"witten", "--series", "A", "--rank", "2", "--bound", "2000"},
           {"orbit", "--d", "3", "--p", "5", "--k", "2", "--samples", "10", "--seed", "7"},
           {"euler", "--prime-bound", "50", "--prime-grid", "100", "1000"}}) {
    const auto a = invoke(args);
    const auto b = invoke(args);
    REQUIRE(a.code == 0);
    CHECK(stripped(a.out) == stripped(b.out));
  }
}

TEST_CASE("report layout") {
  const auto r = invoke({"witten", "--bound", "100"});
  REQUIRE(r.code == 0);
  const auto j = ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"tool", "version", "command", "config", "seed", "results", "table",
                                         "wall_time_seconds"});
  CHECK(j["table"]["columns"] == ordered_json::array({"degree", "multiplicity", "R_n"}));
  CHECK(j["table"]["rows"].size() == 100);

  const auto csv = invoke({"alt", "--k-min", "5", "--k-max", "6", "--format", "csv"});
  REQUIRE(csv.code == 0);
  std::istringstream lines(csv.out);
  std::string line, header;
  std::size_t data_rows = 0;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header.empty()) {
      header = line;
    } else {
      ++data_rows;
    }
  }
  CHECK(header.rfind("k,s,irreducibles,mass", 0) == 0);
  CHECK(data_rows == 2);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"local-sl2", "--q", "4"}).code == 2);
  CHECK(invoke({"census8", "--m", "4", "--q", "3", "--k", "1", "--t", "2"}).code == 2);
  CHECK(invoke({"no-such-command"}).code == 2);
  const auto budget = invoke({"oracle", "--modulus", "27", "--group-budget", "100"});
  CHECK(budget.code == 3);
  CHECK(budget.err.find("budget") != std::string::npos);
  CHECK(invoke({"--version"}).code == 0);
}
