// Copyright 2026 The qdepth Authors
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

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "qdepth/cli.hpp"
#include "qdepth/linear.hpp"
#include "support.hpp"

namespace qdepth {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string example() {
  return (fs::path(testing::source_dir()) / "data" / "example1.cnf").string();
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("qdepth-test-" + std::to_string(std::random_device{}()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  fs::path operator/(const std::string& name) const { return path_ / name; }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

void write(const fs::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"analyze"}).code == kExitUsage);
  CHECK(run({"analyze", example(), "--method", "quantum"}).code == kExitUsage);
  CHECK(run({"analyze", example(), "--lambda", "0"}).code == kExitUsage);
  CHECK(run({"analyze", example(), "--lambda", "1/0"}).code == kExitUsage);
  CHECK(run({"analyze", example(), "--lambda", "abc"}).code == kExitUsage);
  CHECK(run({"analyze", example(), "--budget", "-1"}).code == kExitUsage);
  Run help = run({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("analyze") != std::string::npos);
}

TEST_CASE("data and io errors") {
  TempDir dir;
  write(dir / "bad.cnf", "p cnf 3 1\n1 2 0\n");
  Run bad = run({"analyze", (dir / "bad.cnf").string()});
  CHECK(bad.code == kExitData);
  CHECK(bad.err.find("line 2") != std::string::npos);
  CHECK(run({"analyze", (dir / "missing.cnf").string()}).code == kExitIo);
  CHECK(run({"analyze", example(), "-o", (dir / "no" / "such" / "dir.json").string()}).code ==
        kExitIo);
  write(dir / "cover.json", "[{\"clause\": 0, \"pair\": [1, 5], \"free\": 2}]");
  CHECK(run({"analyze", example(), "--cover", (dir / "cover.json").string()}).code == kExitData);
  write(dir / "junk.json", "{not json");
  CHECK(run({"analyze", example(), "--cover", (dir / "junk.json").string()}).code == kExitData);
}

TEST_CASE("analyze formats") {
  Run json = run({"analyze", example(), "--method", "linear"});
  REQUIRE(json.code == kExitOk);
  auto j = nlohmann::json::parse(json.out);
  CHECK(j["kind"] == "depth-report");
  CHECK(j["max_degree"] == 13);
  CHECK(j["depth_lower"] == 14);
  CHECK(j["depth_upper"] == 15);
  CHECK(j["num_ancillas"] == 12);
  CHECK(j["lambda"] == "5");
  CHECK_FALSE(j.contains("wall_time"));

  Run csv = run({"analyze", example(), "--method", "gvs-ip", "--format", "csv"});
  CHECK(csv.out ==
        "instance,formulation,max_degree,depth_lower,depth_upper,num_ancillas,num_subs,"
        "counted_max_degree,chromatic_index,solver_status\n"
        "example1.cnf,gvs-ip,8,9,10,8,2,8,,optimal\n");

  Run text = run({"analyze", example(), "--method", "native3", "--format", "text"});
  CHECK(text.out.find("product-native3") != std::string::npos);

  Run lam = run({"analyze", example(), "--lambda", "2.5"});
  CHECK(nlohmann::json::parse(lam.out)["lambda"] == "5/2");
  Run timed = run({"analyze", example(), "--timing"});
  CHECK(nlohmann::json::parse(timed.out).contains("wall_time"));
}

TEST_CASE("output files are written whole") {
  TempDir dir;
  fs::path target = dir / "report.json";
  CHECK(run({"analyze", example(), "-o", target.string()}).code == kExitOk);
  CHECK(nlohmann::json::parse(testing::read_file(target))["max_degree"] == 13);
  for (const auto& entry : fs::directory_iterator(dir.path())) {
    CHECK(entry.path().filename() == "report.json");
  }
  // A failing run leaves the previous file untouched.
  write(dir / "bad.cnf", "p cnf 3 1\n1 2 0\n");
  CHECK(run({"analyze", (dir / "bad.cnf").string(), "-o", target.string()}).code == kExitData);
  CHECK(nlohmann::json::parse(testing::read_file(target))["max_degree"] == 13);
}

TEST_CASE("cover replay") {
  TempDir dir;
  Run ip = run({"analyze", example(), "--method", "gvs-ip", "-o", (dir / "ip.json").string()});
  REQUIRE(ip.code == kExitOk);
  Run replay = run({"analyze", example(), "--cover", (dir / "ip.json").string()});
  REQUIRE(replay.code == kExitOk);
  auto j = nlohmann::json::parse(replay.out);
  CHECK(j["formulation"] == "gvs-cover");
  CHECK(j["max_degree"] == 8);
  CHECK(j["solver_status"] == "given");
}

TEST_CASE("inspect") {
  Run r = run({"inspect", example()});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["num_S"] == 9);
  CHECK(j["num_P"] == 7);
  CHECK(j["p_norm"] == nlohmann::json::array({3, 4, 3, 3, 1}));

  TempDir dir;
  write(dir / "taut.cnf", "p cnf 3 2\n1 -1 2 0\n1 2 3 0\n");
  CHECK(run({"inspect", (dir / "taut.cnf").string()}).code == kExitData);
  Run lenient = run({"inspect", (dir / "taut.cnf").string(), "--allow-degenerate"});
  CHECK(lenient.code == kExitOk);
  CHECK(lenient.err.find("tautological") != std::string::npos);
  CHECK(nlohmann::json::parse(lenient.out)["num_clauses"] == 1);
}

TEST_CASE("histogram") {
  Run lit = run({"histogram", example(), "--method", "linear"});
  CHECK(lit.out == "degree,count\n9,2\n10,1\n13,2\n");
  Run subs = run({"histogram", example(), "--method", "gvs-ip", "--vertex-class", "substitution"});
  CHECK(subs.out == "degree,count\n7,2\n");
}

TEST_CASE("export") {
  Run lp = run({"export", example(), "--what", "lp"});
  CHECK(lp.code == kExitOk);
  CHECK(lp.out.find("Minimize") != std::string::npos);
  Run pubo = run({"export", example(), "--what", "pubo", "--method", "linear"});
  CHECK(parse_polynomial(pubo.out.substr(0, pubo.out.size() - 1)) ==
        dualize_linear(testing::example1(), 5));
  Run sched = run({"export", example(), "--what", "schedule", "--method", "native3"});
  CHECK(nlohmann::json::parse(sched.out)["depth"] == 5);
  CHECK(run({"export", example()}).code == kExitUsage);
}

TEST_CASE("compare isolates failing rows") {
  TempDir dir;
  write(dir / "a_bad.cnf", "p cnf 3 1\n1 2 9 0\n");
  fs::copy_file(example(), dir / "b_example.cnf");
  write(dir / "notes.txt", "ignored");
  Run r = run({"compare", dir.path().string(), "--seeds", "2", "--jobs", "2"});
  CHECK(r.code == kExitData);
  std::istringstream lines(r.out);
  std::string header, first, second;
  std::getline(lines, header);
  std::getline(lines, first);
  std::getline(lines, second);
  CHECK(header.rfind("instance,linear_depth,ip_depth,", 0) == 0);
  CHECK(first.rfind("a_bad.cnf,", 0) == 0);
  CHECK(first.find("exceeds") != std::string::npos);
  CHECK(second.rfind("b_example.cnf,15,10,2,optimal,", 0) == 0);
}

TEST_CASE("budget environment override") {
  setenv("QDEPTH_BUDGET_SECS", "soon", 1);
  CHECK(run({"analyze", example(), "--method", "gvs-ip"}).code == kExitUsage);
  setenv("QDEPTH_BUDGET_SECS", "30", 1);
  CHECK(run({"analyze", example(), "--method", "gvs-ip"}).code == kExitOk);
  unsetenv("QDEPTH_BUDGET_SECS");
}

TEST_CASE("repeat runs are identical") {
  for (const auto& method : {"linear", "gvs-ip", "gvs-greedy", "native3"}) {
    CHECK(run({"analyze", example(), "--method", method, "--seed", "4"}).out ==
          run({"analyze", example(), "--method", method, "--seed", "4"}).out);
  }
  CHECK(run({"compare", example(), "--seeds", "3", "--seed", "9"}).out ==
        run({"compare", example(), "--seeds", "3", "--seed", "9"}).out);
}

}  // namespace
}  // namespace qdepth
