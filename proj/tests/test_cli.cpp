#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(BCZLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "bczlab_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("help and version") {
  CHECK(run("--help").code == 0);
  CHECK(run("orbit --help").code == 0);
  const Run v = run("--version");
  CHECK(v.code == 0);
  CHECK(v.out.find("1.0.0") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("orbit --s 2 --t 1").code == 2);
  CHECK(run("orbit --s abc --t 1").code == 2);
  CHECK(run("claims --which F3").code == 2);
  CHECK(run("no-such-command").code == 2);
  CHECK(run("claims --format yaml").code == 2);
}

TEST_CASE("exact orbit of (1/5, 1) closes after ten steps") {
  const Run r = run("orbit --s 1/5 --t 1 --steps 10 --exact");
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 12);
  CHECK(rows[0] == "step,s_num,s_den,t_num,t_den");
  CHECK(rows[1] == "0,1,5,1,1");
  CHECK(rows[11] == "10,1,5,1,1");
}

TEST_CASE("farey orbit in json") {
  const Run r = run("farey --Q 5 --format json");
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["header"]["tool"] == "bczlab");
  CHECK(doc.contains("body"));
}

TEST_CASE("claims report and exit status") {
  const Run r = run("claims --which F1 --a 0.25 --b 0.001 --samples 5000 --seed 7 --format json");
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  const auto& body = doc["body"];
  CHECK(body["threshold"].get<double>() == doctest::Approx(0.0025));
  CHECK(body["comparison"] == "at_least");
  CHECK(body["pass"] == true);
  CHECK(body["seed"] == 7);
  CHECK(body["samples"] == 5000);
  CHECK(doc["header"]["config"]["command"] == "claims");

  // Bodies are byte-identical across reruns; only the header carries timing.
  const Run again = run("claims --which F1 --a 0.25 --b 0.001 --samples 5000 --seed 7 --format json");
  CHECK(json::parse(again.out)["body"].dump() == body.dump());
}

TEST_CASE("config file precedence") {
  const fs::path cfg = scratch("claims.json");
  {
    std::ofstream(cfg) << R"({"command": "claims", "which": "F1", "samples": 3000, "seed": 5, "format": "json"})";
  }
  const Run from_file = run("--config " + cfg.string());
  REQUIRE(from_file.code == 0);
  const json a = json::parse(from_file.out);
  CHECK(a["body"]["samples"] == 3000);
  CHECK(a["body"]["seed"] == 5);

  const Run overridden = run("--config " + cfg.string() + " claims --seed 9");
  REQUIRE(overridden.code == 0);
  const json b = json::parse(overridden.out);
  CHECK(b["body"]["samples"] == 3000);
  CHECK(b["body"]["seed"] == 9);

  const fs::path bad = scratch("bad.json");
  { std::ofstream(bad) << R"({"command": "claims", "bogus": 1})"; }
  CHECK(run("--config " + bad.string()).code == 2);
  const fs::path broken = scratch("broken.json");
  { std::ofstream(broken) << "{not json"; }
  CHECK(run("--config " + broken.string() + " claims").code == 2);
}

TEST_CASE("output is written atomically") {
  const fs::path out = scratch("orbit.csv");
  fs::remove(out);
  const Run r = run("--output " + out.string() + " orbit --s 1/5 --t 1 --exact");
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  REQUIRE(fs::exists(out));
  CHECK_FALSE(fs::exists(out.string() + ".partial"));
  std::ifstream in(out);
  std::string first;
  std::getline(in, first);
  CHECK(first == "step,s_num,s_den,t_num,t_den");

  const fs::path missing = fs::temp_directory_path() / "bczlab_no_such_dir" / "x.csv";
  CHECK(run("--output " + missing.string() + " orbit --s 1/5 --t 1").code != 0);
}

TEST_CASE("other commands run") {
  CHECK(run("geometry --s 1 --t 1 --exact --slope-max 3").code == 0);
  CHECK(run("invariance --samples 20000 --bins 8 --iterates 2").code == 0);
  CHECK(run("invariance --samples 20000 --bins 8 --iterates 2 --skewed").code == 1);
  CHECK(run("return-times --which g0 --samples 500").code == 0);
  // A periodic orbit does not decay, which is a failed verdict.
  CHECK(run("mixing --s 1/5 --t 1 --exact --N 20000 --H 500").code == 1);
  CHECK(run("mixing --seed 3 --N 200000 --H 2000").code == 0);
  CHECK(run("scan-eigenvalues --seed 3 --N 20000 --thetas 100").code == 0);
  const Run v = run("verify-all --only 1");
  CHECK(v.code == 0);
  CHECK(v.out.rfind("PASS", 0) == 0);
}
