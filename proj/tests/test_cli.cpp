#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "casimir/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "casimir");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = casimir::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("basis text") {
  const Run r = cli({"basis", "--kind", "t0", "--n", "4", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "x_41\nx_31*x_42 - x_32*x_41\n");
}

TEST_CASE("basis json and latex") {
  const Run j = cli({"basis", "--kind", "t", "--n", "3", "--json"});
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["count"] == 2);
  CHECK(doc["elements"][0]["text"] == "x_11 + x_22 + x_33");
  const Run l = cli({"basis", "--kind", "t0", "--n", "4", "--format", "latex"});
  CHECK(l.out.find("\\left|\\begin{array}") != std::string::npos);
}

TEST_CASE("invalid arguments exit with 2") {
  const Run r = cli({"basis", "--kind", "t0", "--n", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("n must be >= 2") != std::string::npos);
  CHECK(cli({"basis", "--kind", "gl", "--n", "3"}).code == 2);
  CHECK(cli({"basis", "--n", "3"}).code == 2);
  CHECK(cli({"lifted", "--kind", "st", "--n", "3"}).code == 2);
  CHECK(cli({"lifted", "--kind", "t", "--n", "3", "--entry", "1", "2"}).code == 2);
  CHECK(cli({"verify", "--kind", "t", "--n", "3", "--trials", "0"}).code == 2);
  CHECK(cli({}).code == 2);
}

TEST_CASE("verify") {
  const Run r = cli({"verify", "--kind", "t", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2 invariants, rank 2") != std::string::npos);
  const Run j = cli({"verify", "--kind", "st", "--n", "5", "--json", "--trials", "5", "--seed", "9"});
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["pass"] == true);
  CHECK(doc["jacobian_rank"] == 2);
  CHECK(doc["elements"].size() == 2);
  CHECK(doc["elements"][0]["group"]["trials_run"] == 5);
  const Run s = cli({"verify", "--kind", "t0", "--n", "5", "--symbolic-only", "--json"});
  CHECK(nlohmann::json::parse(s.out)["elements"][0]["group"].is_null());
}

TEST_CASE("algebra json schema") {
  const Run r = cli({"algebra", "--kind", "t0", "--n", "3", "--json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["kind"] == "t0");
  CHECK(doc["dim"] == 3);
  REQUIRE(doc["brackets"].size() == 1);
  CHECK(doc["brackets"][0]["a"] == "e_12");
  CHECK(doc["brackets"][0]["b"] == "e_23");
  CHECK(doc["brackets"][0]["result"][0]["c"] == "e_13");
  CHECK(doc["brackets"][0]["result"][0]["coeff"] == "1");
  const Run t = cli({"algebra", "--kind", "t0", "--n", "3"});
  CHECK(t.out.find("[e_12, e_23] = e_13\n") != std::string::npos);
}

TEST_CASE("lifted and normalize") {
  const Run e = cli({"lifted", "--kind", "t0", "--n", "2", "--entry", "2", "1"});
  CHECK(e.code == 0);
  CHECK(e.out == "x_21\n");
  const Run m = cli({"lifted", "--kind", "t", "--n", "3", "--json"});
  CHECK(nlohmann::json::parse(m.out)["entries"].size() == 6);
  const Run n = cli({"normalize", "--kind", "t0", "--n", "4", "--show-steps"});
  CHECK(n.code == 0);
  CHECK(n.out.find("S1+S2") != std::string::npos);
  CHECK(n.out.find("x_31*x_42 - x_32*x_41") != std::string::npos);
  CHECK(n.out.find("x_41 != 0") != std::string::npos);
}

TEST_CASE("casimir-check") {
  const Run r = cli({"casimir-check", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("k=1  pass  e_14") != std::string::npos);
}

TEST_CASE("output is deterministic and --output writes a file") {
  const std::vector<std::string> args = {"verify", "--kind", "t", "--n", "4", "--json"};
  CHECK(cli(args).out == cli(args).out);
  const std::string path = "cli_output_test.txt";
  const Run r = cli({"basis", "--kind", "t0", "--n", "4", "--output", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == "x_41\nx_31*x_42 - x_32*x_41\n");
  std::remove(path.c_str());
}
