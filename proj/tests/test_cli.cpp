// Copyright 2026 The Authors.
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

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mwl/bitangents.hpp"
#include "mwl/classifier.hpp"
#include "mwl/cli.hpp"
#include "mwl/dihedral.hpp"

using namespace mwl;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Fixture(const std::string& name) {
  return (fs::path(MWL_FIXTURE_DIR) / name).string();
}

// Pair indices of the 4-circuit, as a CLI argument.
std::string FourCircuitArg() {
  std::string s;
  for (int k = 0; k < 4; ++k) {
    MinimalVector::Coords c{1, 1, 1, 1, 1, 1, 1, 1};
    c[2 * k] = c[2 * k + 1] = -3;
    if (!s.empty()) s += ",";
    s += std::to_string(LookupPair(MinimalVector(c)).value());
  }
  return s;
}

fs::path TempDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("mwl_cli_" + name);
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("vectors") {
  const Run table = Cli({"vectors", "--format", "table"});
  CHECK(table.code == 0);
  CHECK(table.out.find("scaled by 4") != std::string::npos);
  int rows = 0;
  std::istringstream in(table.out);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] == ' ') ++rows;
  }
  CHECK(rows == 28);

  const Run js = Cli({"vectors", "--format", "json"});
  CHECK(js.code == 0);
  const json doc = json::parse(js.out);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 28);
  CHECK(doc[0]["coords"] == json({1, 1, 1, 1, 1, 1, -3, -3}));
  CHECK(doc[0]["scale"] == 4);
  CHECK(doc[0]["height"] == "3/2");

  CHECK(Cli({"vectors", "--format", "xml"}).code == 2);
  CHECK(Cli({"vectors", "--bogus"}).code == 2);
  CHECK(Cli({}).code == 2);
  CHECK(Cli({"--help"}).code == 0);
}

TEST_CASE("classify") {
  const Run r = Cli({"classify", "--max-r", "6", "--field", "q", "--quiet"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["field"] == "q");
  CHECK(doc["max_r"] == 6);
  std::vector<int> n;
  for (const auto& e : doc["n_r"]) n.push_back(e["n"]);
  CHECK(n == std::vector<int>{1, 1, 1, 2, 2, 4});
  CHECK_FALSE(doc.contains("timing"));

  const Run one = Cli({"classify", "--max-r", "7", "--threads", "1", "--quiet"});
  const Run four = Cli({"classify", "--max-r", "7", "--threads", "4", "--quiet"});
  CHECK(one.code == 0);
  CHECK(one.out == four.out);

  const Run timed = Cli({"classify", "--max-r", "3", "--timing", "--quiet"});
  CHECK(json::parse(timed.out).contains("timing"));

  const Run progress = Cli({"classify", "--max-r", "2"});
  CHECK(progress.err.find("r=2 n_r=1") != std::string::npos);

  CHECK(Cli({"classify", "--max-r", "21"}).code == 4);
  CHECK(Cli({"classify", "--max-r", "0"}).code == 2);
  CHECK(Cli({"classify", "--max-r", "29", "--force-full"}).code == 2);
  CHECK(Cli({"classify", "--max-r", "3", "--field", "fp:4"}).code == 2);
  CHECK(Cli({"classify", "--max-r", "3", "--field", "r"}).code == 2);
  const Run f5 = Cli({"classify", "--max-r", "3", "--field", "fp:5", "--quiet"});
  CHECK(json::parse(f5.out)["field"] == "fp:5");
}

TEST_CASE("classify with checkpoints and --out") {
  const fs::path dir = TempDir("ckpt");
  const fs::path out_file = dir.string() + ".json";
  const Run first = Cli({"classify", "--max-r", "5", "--checkpoint", dir.string(), "--quiet"});
  CHECK(first.code == 0);
  const json doc = json::parse(first.out);
  CHECK(doc["checkpoints"].size() == 5);
  CHECK(fs::exists(dir / "q" / "level_05.mwl"));

  fs::remove(dir / "q" / "level_05.mwl");
  const Run resumed = Cli({"classify", "--max-r", "5", "--checkpoint", dir.string(), "--quiet",
                           "--out", out_file.string()});
  CHECK(resumed.code == 0);
  CHECK(resumed.out.empty());
  std::ifstream in(out_file);
  const std::string written((std::istreambuf_iterator<char>(in)), {});
  CHECK(written == first.out);

  {
    std::ofstream corrupt(dir / "q" / "level_03.mwl", std::ios::binary | std::ios::trunc);
    corrupt << "MWL1";
  }
  const Run bad = Cli({"classify", "--max-r", "5", "--checkpoint", dir.string(), "--quiet"});
  CHECK(bad.code == 3);
  CHECK_FALSE(bad.err.empty());
  fs::remove_all(dir);
  fs::remove(out_file);
}

TEST_CASE("matroid") {
  const Run r = Cli({"matroid", "--subset", "1,2,3"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["independent"] == true);
  CHECK(doc["rank"] == 3);
  CHECK(doc["circuits"].empty());

  const json c4 = json::parse(Cli({"matroid", "--subset", FourCircuitArg()}).out);
  CHECK(c4["rank"] == 3);
  CHECK(c4["independent"] == false);
  CHECK(c4["circuits"].size() == 1);
  CHECK(c4["circuits"][0].size() == 4);

  CHECK(Cli({"matroid", "--subset", "1,1"}).code == 2);
  CHECK(Cli({"matroid", "--subset", "0"}).code == 2);
  CHECK(Cli({"matroid", "--subset", "1,x"}).code == 2);
  CHECK(Cli({"matroid", "--subset", "1,2", "--field", "fp:2"}).code == 2);
  CHECK(Cli({"matroid"}).code == 2);
  std::string wide = "1";
  for (int i = 2; i <= 21; ++i) wide += "," + std::to_string(i);
  CHECK(Cli({"matroid", "--subset", wide}).code == 4);
}

TEST_CASE("dihedral") {
  const Run r = Cli({"dihedral", "--subset", FourCircuitArg(), "--p", "5"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["exists"] == true);
  CHECK(doc["circuit"] == true);
  CHECK(doc["rank_drop_primes"].is_null());

  const json scan = json::parse(Cli({"dihedral", "--subset", "1,2,3", "--p-max", "100"}).out);
  for (const auto& p : scan["primes"]) {
    bool found = false;
    for (const auto& d : scan["rank_drop_primes"]) found = found || d == p;
    CHECK(found);
  }
  const Run signed_run =
      Cli({"dihedral", "--subset", FourCircuitArg(), "--signs", "+,-,+,-", "--p", "3"});
  CHECK(signed_run.code == 0);
  CHECK(json::parse(signed_run.out)["signs"] == json({1, -1, 1, -1}));

  CHECK(Cli({"dihedral", "--subset", "1,2", "--p", "2"}).code == 2);
  CHECK(Cli({"dihedral", "--subset", "1,2"}).code == 2);
  CHECK(Cli({"dihedral", "--subset", "1,2", "--p", "3", "--p-max", "7"}).code == 2);
  CHECK(Cli({"dihedral", "--subset", "1,2", "--signs", "+", "--p", "3"}).code == 2);
  CHECK(Cli({"dihedral", "--subset", "1,2", "--p-max", "20000"}).code == 2);
  std::string all = "1";
  for (int i = 2; i <= 28; ++i) all += "," + std::to_string(i);
  CHECK(Cli({"dihedral", "--subset", all, "--p", "3"}).code == 4);
}

TEST_CASE("bitangents") {
  const Run r = Cli({"bitangents", "--aronhold", Fixture("aronhold_sample.json")});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["summary"]["lines"] == 28);
  CHECK(doc["summary"]["true_bitangents"] == 28);
  CHECK(doc["summary"]["triples_checked"] == 3276);
  CHECK(doc["summary"]["concurrent_triples"] == 10);
  CHECK(doc["k"] == json({"-65/44", "15/28", "-35/156"}));
  CHECK(doc["fourth_equation_residual"] == json({"0", "0", "0"}));
  CHECK(doc["quartic"]["coefficients"].size() == 15);

  const Run general = Cli({"bitangents", "--aronhold", Fixture("aronhold_general.json")});
  CHECK(general.code == 0);
  const json gdoc = json::parse(general.out);
  CHECK(gdoc["summary"]["true_bitangents"] == 28);
  CHECK(gdoc["summary"]["concurrent_triples"] == 0);
  CHECK(gdoc["fourth_equation_residual"] == json({"0", "0", "0"}));

  const Run zero = Cli({"bitangents", "--aronhold", Fixture("aronhold_zero_entry.json")});
  CHECK(zero.code == 2);
  CHECK(zero.err.find("a_01") != std::string::npos);
  CHECK(Cli({"bitangents", "--aronhold", Fixture("aronhold_malformed.json")}).code == 2);
  CHECK(Cli({"bitangents", "--aronhold", Fixture("missing.json")}).code == 2);
  CHECK(Cli({"bitangents"}).code == 2);
  CHECK(Cli({"bitangents", "--sample", "1", "--aronhold", Fixture("aronhold_sample.json")})
            .code == 2);

  const Run sampled = Cli({"bitangents", "--sample", "3"});
  CHECK(sampled.code == 0);
  CHECK(json::parse(sampled.out)["summary"]["true_bitangents"] == 28);
}

TEST_CASE("exit codes for library errors") {
  auto code = [](auto error) {
    std::ostringstream err;
    const int c = ReportException(std::make_exception_ptr(error), err);
    return std::make_pair(c, err.str());
  };
  const auto verification = code(VerificationFailed("F5.2", "restriction is not a square"));
  CHECK(verification.first == 5);
  CHECK(verification.second.find("F5.2") != std::string::npos);
  CHECK(code(InconsistentSystem("x")).first == 5);
  CHECK(code(CorruptCheckpoint("x")).first == 3);
  CHECK(code(KernelTooLarge("x")).first == 4);
  CHECK(code(std::length_error("x")).first == 4);
  CHECK(code(InvalidAronholdInput("x")).first == 2);
  CHECK(code(DuplicateLine("x")).first == 2);
  CHECK(code(std::out_of_range("x")).first == 2);
  CHECK(code(std::logic_error("x")).first == 1);
}
