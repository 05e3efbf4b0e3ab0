// Copyright 2026 The globent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "globent/cli.hpp"
#include "globent/state_file.hpp"
#include "json.hpp"

namespace globent {
namespace test_cli {

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("globent_cli_" + name);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) out.push_back(item);
  return out;
}

TEST_CASE("measure text output") {
  const auto r = run({"measure", "--family", "w", "--n", "3"});
  CHECK(r.code == kExitOk);
  CHECK_THAT(r.out, ContainsSubstring("e_ad: 0.888888888888889\n"));
  CHECK_THAT(run({"measure", "--family", "ghz", "--n", "5"}).out,
             ContainsSubstring("e_ad: 1\n"));
}

TEST_CASE("measure json from a file") {
  const auto path = temp("bell.psi");
  REQUIRE(run({"make", "--family", "bell", "--out", path.string()}).code == kExitOk);
  const auto r = run({"measure", "--in", path.string(), "--json"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["e_ad"].get<double>() == 1.0);
  CHECK(j["e_mw"].get<double>() == 1.0);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"n", "e_ad", "e_mw", "one_tangles",
                                         "avg_linear_entropy", "avg_von_neumann",
                                         "taylor_residual"});
  std::filesystem::remove(path);
}

TEST_CASE("measure options") {
  const auto t = run({"measure", "--family", "w", "--tangles", "--subsets", "1", "--json"});
  REQUIRE(t.code == kExitOk);
  const auto j = nlohmann::json::parse(t.out);
  CHECK_THAT(j["tau12"].get<double>(), WithinAbs(4.0 / 9.0, 1e-12));
  CHECK_THAT(j["tau123"].get<double>(), WithinAbs(0.0, 1e-8));
  CHECK(j["e_ad_levels"].size() == 1);
  CHECK(j.contains("e_ad_global"));

  const auto bad = run({"measure", "--family", "ghz", "--n", "4", "--tangles"});
  CHECK(bad.code == kExitUsage);
  CHECK_THAT(bad.err, ContainsSubstring("n = 3"));

  const auto csv = run({"measure", "--family", "bell", "--csv"});
  const auto lines = split(csv.out, '\n');
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].rfind("n,e_ad,e_mw,one_tangle_1,one_tangle_2,", 0) == 0);
  CHECK(lines[1].rfind("2,1,1,1,1,", 0) == 0);

  CHECK(run({"measure"}).code == kExitUsage);
  CHECK(run({"measure", "--family", "nope"}).code == kExitUsage);
  CHECK(run({"measure", "--family", "w", "--json", "--csv"}).code == kExitUsage);
  CHECK(run({"measure", "--in", "/nonexistent/file.psi"}).code == kExitUsage);
}

TEST_CASE("measure is deterministic") {
  const auto path = temp("haar.psi");
  REQUIRE(run({"make", "--family", "haar", "--n", "7", "--seed", "3", "--out",
               path.string()}).code == kExitOk);
  const auto a = run({"measure", "--in", path.string(), "--json", "--subsets", "3"});
  const auto b = run({"measure", "--in", path.string(), "--json", "--subsets", "3"});
  CHECK(a.out == b.out);
  std::filesystem::remove(path);
}

TEST_CASE("sweep") {
  const auto w = run({"sweep", "--family", "w", "--n-min", "2", "--n-max", "12"});
  REQUIRE(w.code == kExitOk);
  const auto lines = split(w.out, '\n');
  REQUIRE(lines.size() == 12);
  CHECK(lines[0] == "n,e_ad,e_mw,avg_von_neumann");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cells = split(lines[i], ',');
    REQUIRE(cells.size() == 4);
    const double n = std::stod(cells[0]);
    const double e = std::stod(cells[1]);
    CHECK_THAT(e, WithinAbs(4.0 * (n - 1) / (n * n), 1e-14));
    // Printed values parse back to the same 15-digit text.
    CHECK(format_value(e) == cells[1]);
  }
  const auto ghz = run({"sweep", "--family", "ghz", "--n-min", "2", "--n-max", "6"});
  for (const auto& line : split(ghz.out, '\n')) {
    if (line.front() == 'n') continue;
    CHECK(split(line, ',')[1] == "1");
  }
  const auto empty = run({"sweep", "--family", "w", "--n-min", "5", "--n-max", "4"});
  CHECK(empty.out == "n,e_ad,e_mw,avg_von_neumann\n");
  const auto cluster =
      run({"sweep", "--family", "cluster-phi-minus", "--n-min", "4", "--n-max", "5"});
  CHECK_THAT(cluster.out, ContainsSubstring("# skipped n=5"));
  CHECK(run({"sweep", "--family", "bell"}).code == kExitUsage);
}

TEST_CASE("sweep to file") {
  const auto path = temp("w.csv");
  REQUIRE(run({"sweep", "--family", "w", "--n-min", "2", "--n-max", "3", "--out",
               path.string()}).code == kExitOk);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "n,e_ad,e_mw,avg_von_neumann");
  std::filesystem::remove(path);
}

TEST_CASE("verify") {
  const auto ok = run({"verify", "--trials", "1"});
  CHECK(ok.code == kExitOk);
  CHECK_THAT(ok.out, ContainsSubstring("suite passed"));
  CHECK(run({"verify", "--n-max", "1"}).code == kExitUsage);
  CHECK(run({"verify", "--trials", "abc"}).code == kExitUsage);
  const auto fail = run({"verify", "--trials", "2", "--tolerance", "*=0"});
  CHECK(fail.code == kExitPropertyFailure);
  CHECK_THAT(fail.out, ContainsSubstring("FAIL"));
  CHECK(run({"verify", "--tolerance", "broken"}).code == kExitUsage);

  const auto path = temp("report.json");
  REQUIRE(run({"verify", "--trials", "2", "--report", path.string()}).code == kExitOk);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["passed"] == true);
  CHECK(j["config"]["trials"] == 2);
  std::filesystem::remove(path);
}

TEST_CASE("make") {
  const auto bell = run({"make", "--family", "bell"});
  REQUIRE(bell.code == kExitOk);
  CHECK(parse_state_file(bell.out) == build_family(BellFamily{}));

  const auto ghz_like = run({"make", "--family", "ghz-like", "--alpha", "0.894427"});
  REQUIRE(ghz_like.code == kExitOk);
  const auto s = parse_state_file(ghz_like.out);
  CHECK(s.num_qubits() == 3);
  CHECK_THAT(std::norm(s[0]), WithinAbs(0.8, 1e-6));

  const auto g = run({"make", "--family", "g", "--n", "4", "--coeff", "0000=0.5", "--coeff",
                      "0011=0.5", "--coeff", "0101=0.5", "--coeff", "0110=0.5"});
  REQUIRE(g.code == kExitOk);
  const auto gs = parse_state_file(g.out);
  CHECK_THAT(gs[0b1111].real(), WithinAbs(std::sqrt(0.125), 1e-15));

  CHECK(run({"make", "--family", "ghz-like"}).code == kExitUsage);
  CHECK(run({"make", "--family", "g", "--n", "4", "--coeff", "1111=1"}).code == kExitUsage);
  CHECK(run({"make", "--family", "cluster-phi-plus", "--n", "5"}).code == kExitUsage);
  CHECK(run({"make"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
}

TEST_CASE("make round trip", "[property]") {
  for (const auto& family :
       {std::vector<std::string>{"--family", "w", "--n", "5"},
        std::vector<std::string>{"--family", "haar", "--n", "6", "--seed", "11"},
        std::vector<std::string>{"--family", "g", "--n", "4", "--coeff", "0000=0.3,0.1",
                                 "--coeff", "0101=-0.7"},
        std::vector<std::string>{"--family", "cluster-phi-minus", "--n", "6"}}) {
    std::vector<std::string> args{"make"};
    args.insert(args.end(), family.begin(), family.end());
    const auto first = run(args);
    REQUIRE(first.code == kExitOk);
    const auto path = temp("round.psi");
    {
      std::ofstream f(path, std::ios::binary);
      f << first.out;
    }
    const auto again = run({"make", "--family", "product", "--factor", path.string()});
    CHECK(again.out == first.out);
    std::filesystem::remove(path);
  }
}

TEST_CASE("help exits cleanly") {
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({"measure", "--help"}).code == kExitOk);
}

}  // namespace test_cli
}  // namespace globent
