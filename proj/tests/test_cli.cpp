// Copyright (c) 2026 The zetabe authors
// SPDX-License-Identifier: Apache-2.0

#include <unistd.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "zetabe/special_functions.hpp"

namespace {

struct command_result {
  int exit_code = -1;
  std::string output;
};

command_result run_cli(const std::string& args) {
  const std::string cmd = std::string(ZETABE_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  command_result result;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe) != nullptr)
    result.output += buf.data();
  const int status = pclose(pipe);
  result.exit_code = WEXITSTATUS(status);
  return result;
}

std::string temp_path(const std::string& name) {
  return "/tmp/zetabe-test-" + std::to_string(getpid()) + "-" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double parse_scalar(const std::string& text) {
  return std::stod(text);
}

}  // namespace

TEST_CASE("eval prints full-precision scalars") {
  auto r = run_cli("eval f x=2 a=1 b=4");
  CHECK(r.exit_code == 0);
  CHECK(std::abs(parse_scalar(r.output) - 0.25) <= 1e-12);

  r = run_cli("eval cumulant n=1 a=2 b=1");
  CHECK(r.exit_code == 0);
  CHECK(std::abs(parse_scalar(r.output) - 1.5) <= 1e-12);

  r = run_cli("eval hazard x=1 a=1 b=3");
  CHECK(r.exit_code == 0);
  CHECK(std::abs(parse_scalar(r.output) - 3.0) <= 1e-11);

  // 17 significant digits round-trip to the exact binary value.
  r = run_cli("eval zeta x=2 s=1");
  CHECK(r.exit_code == 0);
  CHECK(parse_scalar(r.output) == zetabe::hurwitz_zeta(2.0, 1.0).value);
}

TEST_CASE("eval rejects bad input with exit 2") {
  CHECK(run_cli("eval nosuch x=1").exit_code == 2);
  CHECK(run_cli("eval f x=2 a=1").exit_code == 2);          // missing b
  CHECK(run_cli("eval f x=2 a=1 b=zzz").exit_code == 2);    // non-numeric
  CHECK(run_cli("eval zeta x=0.5 s=1").exit_code == 2);     // domain error
  CHECK(run_cli("eval polygamma m=1.5 s=1").exit_code == 2);
  CHECK(run_cli("--no-such-flag").exit_code == 2);
}

TEST_CASE("eval reports numerical failure with exit 3") {
  const auto r = run_cli("eval polygamma m=60 s=1e-5");
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("numerical failure") != std::string::npos);
}

TEST_CASE("figure left panel") {
  const std::string out1 = temp_path("left1.csv");
  const std::string out2 = temp_path("left2.csv");
  CHECK(run_cli("figure --panel left --out " + out1).exit_code == 0);
  CHECK(run_cli("figure --panel left --out " + out2).exit_code == 0);
  const std::string csv = slurp(out1);
  CHECK(csv == slurp(out2));  // byte-identical reruns
  CHECK(csv.rfind("a,n,b,value\n", 0) == 0);
  CHECK(csv.back() == '\n');

  // a=1 rows must carry value 1/b; count rows while at it.
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);  // header
  int rows = 0;
  double prev_b = 0.0;
  while (std::getline(lines, line)) {
    ++rows;
    double a, b, value;
    int n;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%d,%lf,%lf", &a, &n, &b, &value) == 4);
    if (a == 1.0) CHECK(std::abs(value * b - 1.0) <= 1e-12);
    if (a == 0.1 && n == 1) {
      CHECK(b >= prev_b);  // rows sorted by (a, n, b)
      prev_b = b;
    }
  }
  CHECK(rows == 3 * 3 * 191);
  std::remove(out1.c_str());
  std::remove(out2.c_str());
}

TEST_CASE("figure right panel matches the unit exponential at a=1") {
  const std::string out = temp_path("right.csv");
  CHECK(run_cli("figure --panel right --out " + out).exit_code == 0);
  std::ifstream in(out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "a,x,density");
  while (std::getline(in, line)) {
    double a, x, density;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf", &a, &x, &density) == 3);
    if (a == 1.0) CHECK(std::abs(density - std::exp(-x)) <= 1e-12);
  }
  std::remove(out.c_str());
}

TEST_CASE("figure rejects bad ranges and unwritable paths") {
  CHECK(run_cli("figure --panel left --range 5:1:0.1 --out /tmp/x.csv").exit_code == 2);
  CHECK(run_cli("figure --panel left --range 1:5:0 --out /tmp/x.csv").exit_code == 2);
  CHECK(run_cli("figure --panel left --range 0:5:0.1 --out /tmp/x.csv").exit_code == 2);
  CHECK(run_cli("figure --panel middle --out /tmp/x.csv").exit_code == 2);
  CHECK(run_cli("figure --panel left --out /no-such-dir/x.csv").exit_code == 4);
}

TEST_CASE("verify emits deterministic JSON and meaningful exit codes") {
  const std::string out1 = temp_path("lemma1.json");
  const std::string out2 = temp_path("lemma2.json");
  CHECK(run_cli("verify --suite lemma --seed 42 --out " + out1).exit_code == 0);
  CHECK(run_cli("verify --suite lemma --seed 42 --out " + out2).exit_code == 0);
  CHECK(slurp(out1) == slurp(out2));
  CHECK(slurp(out1).find("\"pass\": true") != std::string::npos);

  CHECK(run_cli("verify --suite chains --out " + out1).exit_code == 0);
  CHECK(run_cli("verify --suite nosuch").exit_code == 2);
  std::remove(out1.c_str());
  std::remove(out2.c_str());
}
