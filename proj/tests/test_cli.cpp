#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "subord/bounds.hpp"

namespace {

struct Run {
  int status;
  std::string out;
};

// stdout only; diagnostics are discarded.
Run run(const std::string& args) {
  const std::string cmd = std::string(SUBORD_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("beta0 command") {
  const auto r = run("beta0");
  CHECK(r.status == 0);
  const auto j = parse(r);
  CHECK(std::abs(j["beta0"].get<double>() - 0.473519) < 5e-6);
  CHECK(j["quartic_residual"].get<double>() < 1e-10);
  CHECK(j["beta0_source"] == "computed-root");
}

TEST_CASE("bound command") {
  auto j = parse(run("bound --theorem T1b --A 1 --B 0 --k 0"));
  CHECK(std::abs(j["min_beta"].get<double>() - (std::numbers::e - 1)) < 1e-15);
  j = parse(run("bound --theorem T1a --A 1 --B -1 --k 1"));
  CHECK(j["theorem"] == "T1a");
  CHECK(j["case"] == "k<=2");
  CHECK(std::abs(j["min_beta"].get<double>() - 2 * subord::beta0()) < 1e-15);
  j = parse(run("bound --theorem T3-a0 --A 0.5 --B -0.5 --k 2"));
  CHECK(j["theorem"] == "T3a0");
}

TEST_CASE("condition command") {
  auto r = run("condition --theorem S1b --A 0.8 --B 0.2 --gamma 12 --beta 1");
  CHECK(r.status == 0);
  auto j = parse(r);
  CHECK(j["holds"] == true);
  CHECK(j["slack"].get<double>() > 0);
  r = run("condition --theorem S1a --A 0.5 --B 0 --gamma 10 --beta 1");
  CHECK(r.status == 2);
  r = run("condition --theorem S1a --A 0.5 --B 0 --gamma 10 --beta 1 --b0-limit");
  CHECK(r.status == 0);
  CHECK(parse(r)["extension"] == true);
}

TEST_CASE("regions csv") {
  const auto r = run("regions --curve --A 0.5 --B -0.5 --n 16 --format csv");
  CHECK(r.status == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "theta,k,d,g");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    if (rows == 9) CHECK(std::abs(std::stod(line.substr(line.find(',') + 1)) - 1.0 / 3.0) < 1e-15);
  }
  CHECK(rows == 16);
  CHECK(run("regions --boundary sigmoid --n 64 --format svg").out.rfind("<svg", 0) == 0);
}

TEST_CASE("verify exit codes") {
  auto r = run("verify --theorem S1a --A 0.8 --B 0.2 --gamma 12 --beta 1 --n-theta 512");
  CHECK(r.status == 0);
  auto j = parse(r);
  CHECK(j["kind"] == "verification");
  CHECK(j["pass"] == true);

  r = run("verify --theorem T1a --A 1 --B -1 --k 1 --beta 0");
  CHECK(r.status == 1);
  CHECK(parse(r)["pass"] == false);

  // Default beta is the printed bound.
  r = run("verify --theorem T1a --A 1 --B -1 --k 1 --n-theta 1024 --m-list 1,2,100");
  CHECK(r.status == 0);
  j = parse(r);
  CHECK(j["grid"]["m_values"].size() == 3);
  CHECK(j["grid"]["n_theta"] == 1024);
}

TEST_CASE("probe command") {
  const auto r = run("probe --theorem T1a --A 1 --B -1 --k 0 --n-theta 512");
  CHECK(r.status == 0);
  const auto j = parse(r);
  CHECK(j["threshold"].get<double>() <= j["printed_bound"].get<double>() + 1e-6);
  CHECK(j["threshold"].get<double>() > 0.0);
}

TEST_CASE("subcheck and starlike") {
  auto r = run("subcheck --theorem T1a --A 1 --B -1 --k 0 --family janowski:A=1,B=-1 --n-theta 256");
  CHECK(r.status == 0);
  CHECK(parse(r)["refutes"] == false);

  r = run("starlike --f koebe --A 1 --B -1");
  CHECK(r.status == 0);
  CHECK(parse(r)["holds"] == true);
  r = run("starlike --f koebe --A 0.5 --B -0.5");
  CHECK(r.status == 1);
  CHECK(parse(r)["holds"] == false);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("bound --theorem T9 --A 1 --B 0 --k 0").status == 2);
  CHECK(run("bound --theorem T1a --A 1 --B 0").status == 2);
  CHECK(run("bound --theorem T1a --A 0 --B 1 --k 0").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("verify --theorem T1a --A 1 --B 0 --k 0 --n-theta 4").status == 2);
  CHECK(run("regions --curve --A 0.5 --B -0.5 --format xml").status == 2);
}

TEST_CASE("error names reach stderr verbatim") {
  const std::string cmd = std::string(SUBORD_CLI_PATH) + " bound --theorem T4 --A 1 --B 0 --k 0 2>&1 >/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[1024] = {};
  const std::size_t n = fread(buf, 1, sizeof buf - 1, pipe);
  pclose(pipe);
  CHECK(std::string(buf, n).find("DegenerateInput") != std::string::npos);
}

TEST_CASE("--out writes the same bytes and runs are reproducible") {
  const auto dir = std::filesystem::temp_directory_path() / "subord_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "report.json";
  const std::string args = "verify --theorem S2 --A 0.6 --B -0.3 --gamma 9 --beta 1 --n-theta 256";
  CHECK(run(args + " --out " + path.string()).status == 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == run(args).out);
  CHECK(run(args).out == run(args).out);
  std::filesystem::remove_all(dir);
}

TEST_CASE("schema and theorem list") {
  const auto r = run("schema");
  CHECK(r.status == 0);
  const auto j = parse(r);
  CHECK(j.dump().find("computed-root") != std::string::npos);
  const auto l = run("--list-theorems");
  CHECK(l.status == 0);
  for (const char* id : {"T1a", "T3a0", "S1c", "S2"}) CHECK(l.out.find(id) != std::string::npos);
}
