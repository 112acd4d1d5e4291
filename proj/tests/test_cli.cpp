#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(PEXC_TEST_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(f);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string data(const std::string& rel) { return (std::filesystem::path(PEXC_TEST_DATA_DIR) / rel).string(); }

}  // namespace

TEST_CASE("jordan and binom") {
  const auto j = run("jordan --a 3 --b 5 --p 7");
  REQUIRE(j.status == 0);
  CHECK(nlohmann::json::parse(j.out)["blocks"] == nlohmann::json::array({7, 5, 3}));
  CHECK(run("jordan --a 2 --b 9 --p 3").status == 2);
  const auto b = run("binom --n 8 --k 4 --p 3");
  REQUIRE(b.status == 0);
  CHECK(nlohmann::json::parse(b.out)["valuation"] == 0);
  CHECK(nlohmann::json::parse(run("binom --n 8 --k 4 --p 2").out)["valuation"] == 1);
}

TEST_CASE("concealed") {
  const auto r = run("concealed --perm " + data("perm/D10.json") + " --p 2");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["concealed"] == true);
  CHECK(j["order"] == 10);
  const auto s5 = nlohmann::json::parse(run("concealed --perm S5 --p 2").out);
  CHECK(s5["concealed"] == false);
  CHECK(s5["witness_size"] == 10);
}

TEST_CASE("orbits and verdicts") {
  const auto r = run("orbits --entry M23_GL11_2 --p 2");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["orbit_sizes"] == nlohmann::json({{"1", 1}, {"23", 1}, {"253", 1}, {"1771", 1}}));
  CHECK(j["verdict"]["status"] == "P_EXCEPTIONAL");
  const auto bad = nlohmann::json::parse(run("pexc --entry deleted_A5_F2").out);
  CHECK(bad["verdict"]["status"] == "BAD_ORBIT");
  const auto h = run("--format table half --recipe '{\"kind\":\"general_linear\",\"n\":2,\"q\":3}'");
  CHECK(h.status == 0);
  CHECK(h.out.find("yes") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("catalog verify --name no_such_entry").status == 2);
  CHECK(run("orbits").status == 2);
  CHECK(run("no-such-command").status == 2);
  CHECK(run("orbits --group " + data("missing.json")).status == 2);
  CHECK(run("catalog list").status == 0);

  const auto dir = std::filesystem::temp_directory_path() / "pexc_cli_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir / "catalog");
  std::ofstream(dir / "catalog" / "wrong.json") << R"({
    "name": "wrong", "recipe": {"kind": "general_linear", "n": 2, "q": 3},
    "p": 3, "dim": 2, "expected_orbit_sizes": {"1": 1, "4": 2},
    "provenance": "derived", "claim": "deliberately wrong"})";
  const auto r = run("--data-dir " + dir.string() + " catalog verify --all");
  CHECK(r.status == 1);
  CHECK(nlohmann::json::parse(r.out)["pass"] == false);
  std::filesystem::remove_all(dir);
}

TEST_CASE("output is deterministic") {
  const std::string args = "--seed 0 catalog verify --name M11_GL5_3 --name SL25_GL4_3 --name X312_D12_GL3_4";
  const auto a = run(args), b = run("--threads 1 " + args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("elapsed_ms") == std::string::npos);
}
