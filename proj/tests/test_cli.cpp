#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "twa/cli.hpp"

using namespace twa;
using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "twa");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "twa_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int process_exit_code(const std::string& args) {
  const std::string cmd = std::string(TWA_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("verify runs the full suite", "[cli]") {
  const Run r = run({"verify", "--moduli", "2,3"});
  INFO(r.err);
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["moduli"] == json::array({2, 3}));
  CHECK(j["order"] == 6);
  CHECK(j["num_classes"] == 4);
  CHECK(j["base_points"].size() == 6);
  CHECK(j["dim_T"] == 18);
  CHECK(j["dim_formula"] == 18);
  CHECK(j["matrix_block"] == 4);
  CHECK(j["one_dim_count"] == 2);
  CHECK(j["version"] == cli::kVersion);
  std::vector<std::string> names;
  for (const auto& c : j["checks"]) {
    CHECK(c["status"] == "pass");
    CHECK_FALSE(c.contains("millis"));
    names.push_back(c["name"]);
  }
  for (const auto& n : cli::verify_check_names()) CHECK(std::find(names.begin(), names.end(), n) != names.end());
}

TEST_CASE("verify with a single check on the depth-one limit", "[cli]") {
  const Run r = run({"verify", "--moduli", "2", "--checks", "decomposition"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["dim_T"] == 4);
  CHECK(j["one_dim_count"] == 0);
  CHECK(j["checks"][0]["name"] == "decomposition");
}

TEST_CASE("check selection runs in canonical order", "[cli]") {
  const Run r = run({"verify", "--moduli", "2,2", "--checks", "vanishing,axioms", "--base-points", "1,0,1"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["checks"].size() == 2);
  CHECK(j["checks"][0]["name"] == "axioms");
  CHECK(j["checks"][1]["name"] == "vanishing");
  CHECK(j["base_points"] == json::array({0, 1}));
  CHECK(j["dim_T"].is_null());
}

TEST_CASE("text format and timings", "[cli]") {
  const Run r = run({"verify", "--moduli", "2,2", "--checks", "matrix-units", "--format", "text"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("PASS matrix-units") != std::string::npos);
  const Run t = run({"verify", "--moduli", "2,2", "--checks", "axioms", "--timings"});
  CHECK(json::parse(t.out)["checks"][0].contains("millis"));
}

TEST_CASE("usage and configuration errors exit with 2", "[cli]") {
  CHECK(run({"verify", "--moduli", "2,3,5,7"}).code == 2);
  CHECK(run({"verify", "--moduli", "2,1"}).code == 2);
  CHECK(run({"verify", "--moduli", "2,x"}).code == 2);
  CHECK(run({"verify", "--moduli", ""}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "--moduli", "2,2", "--checks", "bogus"}).code == 2);
  CHECK(run({"verify", "--moduli", "2,2", "--format", "yaml"}).code == 2);
  CHECK(run({"verify", "--moduli", "2,2", "--base-points", "4"}).code == 2);
  CHECK(run({"verify", "--moduli", "2,2", "--max-order", "3"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("max order: flag beats environment", "[cli]") {
  ::setenv(cli::kMaxOrderEnv, "4", 1);
  CHECK(run({"verify", "--moduli", "2,3", "--checks", "axioms"}).code == 2);
  CHECK(run({"verify", "--moduli", "2,3", "--checks", "axioms", "--max-order", "6"}).code == 0);
  ::setenv(cli::kMaxOrderEnv, "100", 1);
  CHECK(run({"verify", "--moduli", "2,3,5", "--checks", "axioms"}).code == 0);
  CHECK(run({"verify", "--moduli", "2,3,5", "--checks", "axioms", "--max-order", "29"}).code == 2);
  ::unsetenv(cli::kMaxOrderEnv);
  CHECK(run({"verify", "--moduli", "2,3,5,3", "--checks", "axioms"}).code == 2);
}

TEST_CASE("oracle on ingested tables", "[cli]") {
  const Run c4 = run({"oracle", TWA_DATA_DIR "/c4.txt"});
  INFO(c4.err);
  REQUIRE(c4.code == 0);
  const json j = json::parse(c4.out);
  CHECK(j["triply_regular"] == true);
  CHECK(j["commutative"] == true);
  CHECK(j["dim_T"] == 16);
  CHECK(j["checks"][0]["name"] == "axioms");

  const Run pet = run({"oracle", TWA_DATA_DIR "/petersen.txt", "--base-points", "0"});
  CHECK(pet.code == 1);
  const json pj = json::parse(pet.out);
  CHECK(pj["triply_regular"] == false);
  CHECK(pj["checks"][0]["status"] == "pass");
  CHECK(pj["checks"][1]["status"] == "fail");
  CHECK(pj["checks"][2]["name"] == "t0-consistency");
  CHECK(pj["checks"][2]["status"] == "pass");
  CHECK(run({"oracle", TWA_DATA_DIR "/petersen.txt", "--checks", "axioms,t0-consistency"}).code == 0);
}

TEST_CASE("oracle on corrupted or malformed input", "[cli]") {
  const auto bad = scratch("bad_partition.txt");
  std::ofstream(bad) << "3 2\n0 1 2\n2 0 1\n1 5 0\n";
  const Run r = run({"oracle", bad.string()});
  CHECK(r.code == 1);
  const json j = json::parse(r.out);
  CHECK(j["checks"][0]["status"] == "fail");
  CHECK(j["checks"][0]["witness"].get<std::string>().find("axiom 2") != std::string::npos);

  const auto garbled = scratch("garbled.txt");
  std::ofstream(garbled) << "3 2\n0 1 2\n2 0\n";
  CHECK(run({"oracle", garbled.string()}).code == 2);
  CHECK(run({"oracle", scratch("missing.txt").string()}).code == 3);
}

TEST_CASE("export, re-ingest, compare", "[cli]") {
  const Run c2 = run({"export", "--moduli", "2"});
  REQUIRE(c2.code == 0);
  CHECK(c2.out == "2 1\n0 1\n1 0\n");

  const auto table = scratch("c2c2.txt");
  const auto dump = scratch("c2c2_matrices.json");
  REQUIRE(run({"export", "--moduli", "2,2", "--out", table.string(), "--matrices", dump.string()}).code == 0);
  const Scheme s = parse_scheme(slurp(table));
  CHECK(s.order() == 4);
  CHECK(s.num_classes() == 3);

  const json oracle = json::parse(run({"oracle", table.string()}).out);
  const json verify = json::parse(run({"verify", "--moduli", "2,2"}).out);
  CHECK(oracle["dim_T"] == verify["dim_T"]);
  CHECK(oracle["triply_regular"] == true);

  const json d = json::parse(slurp(dump));
  CHECK(d["base_point"] == 0);
  // 3 A, 3 E*, 9 G, 1 F.
  CHECK(d["matrices"].size() == 16);
  const json& f = d["matrices"][15];
  CHECK(f["name"] == "F_{(2,1)(1,1)}");
  CHECK(f["entries"][2][2]["conductor"] == 2);
  CHECK(f["entries"][2][2]["coeffs"] == json::array({"1/2"}));
  CHECK(f["entries"][2][3]["coeffs"] == json::array({"-1/2"}));
  CHECK(run({"export", "--moduli", "2,2", "--out", "/nonexistent-dir/x.txt"}).code == 3);
}

TEST_CASE("report is byte-identical across runs", "[cli]") {
  const Run a = run({"verify", "--moduli", "2,2,2"});
  const Run b = run({"verify", "--moduli", "2,2,2"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto p1 = scratch("r1.json"), p2 = scratch("r2.json");
  REQUIRE(run({"verify", "--moduli", "3,2", "--out", p1.string()}).code == 0);
  REQUIRE(run({"verify", "--moduli", "3,2", "--out", p2.string()}).code == 0);
  CHECK(slurp(p1) == slurp(p2));
}

TEST_CASE("installed binary honours the exit-code contract", "[cli]") {
  CHECK(process_exit_code("verify --moduli 2,2") == 0);
  CHECK(process_exit_code("verify --moduli 2,3,5,7") == 2);
  CHECK(process_exit_code("oracle " TWA_DATA_DIR "/petersen.txt --base-points 0") == 1);
  CHECK(process_exit_code("oracle /nonexistent/file.txt") == 3);
  CHECK(process_exit_code("--version") == 0);
}
