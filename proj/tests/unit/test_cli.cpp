#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tlab/cli.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "torsion-lab");
  std::ostringstream out, err;
  Run r;
  r.code = tlab::run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string ring_file(const std::string& name) { return std::string(TLAB_DATA_DIR) + "/ring_" + name + ".tlw"; }

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("tlab_cli_" + name + ".tlw");
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("invariants of a ring") {
  Run r = cli({"--workspace", ring_file("R2"), "invariants"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["command"] == "invariants");
  CHECK(j["ring"] == "R2");
  CHECK(j["result"]["dim"] == 1);
  CHECK(j["result"]["depth"] == 1);
  CHECK(j["result"]["type"] == 1);
  CHECK(j["result"]["gorenstein"] == true);
  CHECK(j["elapsed_ms"].is_null());
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"command", "ring", "result", "witnesses", "elapsed_ms"});
}

TEST_CASE("invariants of a module") {
  Run r = cli({"--workspace", ring_file("R5"), "invariants", "--module", "k"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["result"]["mu"] == 1);
  CHECK(j["result"]["depth"] == 0);
  CHECK(j["result"]["ulrich"] == true);
}

TEST_CASE("betti totals") {
  Run r = cli({"--workspace", ring_file("R1"), "betti", "--module", "k", "--length", "4"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["result"]["totals"] == json::array({1, 2, 3, 5, 8}));
  CHECK(j["witnesses"]["finite"] == false);
}

TEST_CASE("verdict formatting") {
  json s = json::parse(cli({"--workspace", ring_file("R5"), "syzygy-order", "--module", "k"}).out);
  CHECK(s["result"] == 1);
  json t = json::parse(cli({"--workspace", ring_file("R1"), "tf-index", "--module", "R", "--cap", "2"}).out);
  CHECK(t["result"] == ">=2");
  json g = json::parse(cli({"--workspace", ring_file("R5"), "gab", "--module", "k", "--a", "2", "--b", "0"}).out);
  CHECK(g["result"] == false);
  CHECK(g["witnesses"]["first_nonzero_ext"] == 1);
}

TEST_CASE("timing is opt-in") {
  json j = json::parse(cli({"--timing", "--workspace", ring_file("S"), "invariants"}).out);
  CHECK(j["elapsed_ms"].is_number());
}

TEST_CASE("verify a single scenario") {
  Run r = cli({"--workspace", ring_file("R5"), "verify", "--scenario", "syzygy-k-torsionfree"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["result"]["status"] == "pass");
  CHECK(j["result"]["passed"] == 1);
  REQUIRE(j["witnesses"]["scenarios"].size() == 1);
  CHECK(j["witnesses"]["scenarios"][0]["ring"] == "R5");
}

TEST_CASE("output is deterministic") {
  std::vector<std::string> args{"--workspace", ring_file("R4"), "resolve", "--module", "m", "--length", "3"};
  Run a = cli(args);
  Run b = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("input errors exit with 2") {
  Run r = cli({"--workspace", ring_file("R1"), "betti", "--module", "nosuch"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("nosuch") != std::string::npos);
  CHECK(cli({"--workspace", ring_file("R1"), "verify", "--scenario", "no-such-scenario"}).code == 2);
  CHECK(cli({"verify"}).code == 2);
  CHECK(cli({"betti"}).code == 2);  // no workspace
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"--workspace", ring_file("R1"), "gab", "--a", "1"}).code == 2);
  CHECK(cli({"--workspace", "/nonexistent.tlw", "invariants"}).code == 2);
  CHECK(cli({"verify", "--all", "--corpus", "/nonexistent"}).code == 2);
}

TEST_CASE("workspace parse errors report line and column") {
  std::string linear = temp_file("linear", "ring A\ncharacteristic 32003\nvariables x y\nideal x^2, x + y\n");
  Run a = cli({"--workspace", linear, "invariants"});
  CHECK(a.code == 2);
  CHECK(a.err.find("line 4, column 12") != std::string::npos);
  CHECK(a.err.find("linear") != std::string::npos);

  std::string composite = temp_file("composite", "ring A\ncharacteristic 32001\nvariables x y\nideal x^2\n");
  Run b = cli({"--workspace", composite, "invariants"});
  CHECK(b.code == 2);
  CHECK(b.err.find("line 2") != std::string::npos);
  CHECK(b.err.find("prime") != std::string::npos);

  std::string keyword = temp_file("keyword", "ring A\nvariables x y\nideals x^2\n");
  Run c = cli({"--workspace", keyword, "invariants"});
  CHECK(c.code == 2);
  CHECK(c.err.find("line 3, column 1") != std::string::npos);
}

}  // TEST_SUITE
