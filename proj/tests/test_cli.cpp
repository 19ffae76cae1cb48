#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::filesystem::path kTmp = std::filesystem::temp_directory_path() / "berge_cli_tests";

auto run(const std::string& args, std::string* out = nullptr) -> int {
  std::filesystem::create_directories(kTmp);
  const auto capture = kTmp / "stdout.txt";
  const std::string cmd = std::string(BERGE_CLI_PATH) + " " + args + " > " + capture.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  if (out) {
    std::ifstream in(capture);
    std::stringstream ss;
    ss << in.rdbuf();
    *out = ss.str();
  }
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

auto run_with_env(const std::string& env, const std::string& args) -> int {
  const std::string cmd = env + " " + std::string(BERGE_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

auto write(const std::string& name, const std::string& text) -> std::string {
  std::filesystem::create_directories(kTmp);
  const auto path = kTmp / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("detect exit codes") {
  const auto kr = (kTmp / "kr12.txt").string();
  REQUIRE(run("construct kr --n 12 --r 3 --output " + kr) == 0);
  CHECK(run("detect " + kr + " --pattern K3") == 1);
  std::string out;
  CHECK(run("--json detect " + write("tri.txt", "n=4\n0 1 2\n1 2 3\n0 2 3\n") + " --pattern K_3", &out) == 0);
  CHECK(out.find("\"witness\"") != std::string::npos);
  CHECK(run("detect " + (kTmp / "missing.txt").string()) == 2);
  CHECK(run("detect " + write("bad.txt", "n=3\n0 0 1\n")) == 2);
  CHECK(run("--budget-nodes 2 detect " + kr) == 3);
  CHECK(run("detect " + kr + " --pattern Q9") == 2);
}

TEST_CASE("environment overrides") {
  const auto kr = (kTmp / "kr12.txt").string();
  REQUIRE(run("construct kr --n 12 --r 3 --output " + kr) == 0);
  CHECK(run("detect " + kr) == 1);
  CHECK(run("detect " + kr + " --pattern K3 --json", nullptr) == 1);
  CHECK(run_with_env("BERGE_BUDGET_NODES=2", "detect " + kr) == 3);
  CHECK(run_with_env("BERGE_PATTERN=K4", "detect " + kr) == 1);
  CHECK(run_with_env("BERGE_JSON=1", "detect " + write("tri2.txt", "n=3\n0 1 2\n0 1 2\n0 1 2\n")) == 0);
}

TEST_CASE("verify") {
  std::string out;
  const auto g = (kTmp / "greedy.txt").string();
  REQUIRE(run("--seed 5 construct greedy --n 10 --pattern C4 --s-min 4 --s-max 6 --output " + g) == 0);
  CHECK(run("verify " + g + " --pattern C4", &out) == 0);
  CHECK(out.find("ok") != std::string::npos);
  CHECK(run("verify " + write("heavy.txt", "n=3\n0 1 2\n0 1 2\n0 1 2\n") + " --pattern K3") == 1);
  CHECK(run("verify " + write("empty.txt", "n=5\n") + " --pattern K3") == 0);
}

TEST_CASE("ramsey") {
  std::string out;
  CHECK(run("ramsey --pattern K3 --all-edges", &out) == 0);
  CHECK(out.find("minimum 5") != std::string::npos);
  CHECK(run("ramsey --pattern P3", &out) == 0);
  CHECK(out.find("minimum 3") != std::string::npos);
  CHECK(run("ramsey --pattern K3 --second K3", &out) == 0);
  CHECK(out.find("R = 6") != std::string::npos);
  CHECK(run("ramsey --pattern K4 --cap 7", &out) == 1);
  CHECK(out.find(">= 8") != std::string::npos);
  CHECK(run("ramsey --pattern K3 --edge 0 1 --witness-dir " + (kTmp / "w").string()) == 0);
  CHECK(std::filesystem::exists(kTmp / "w" / "witness_0_1.txt"));
}

TEST_CASE("construct, classify, search and sweep") {
  std::string out;
  CHECK(run("construct kr --n 12 --r 3", &out) == 0);
  CHECK(out.find("predicted sum_size n^2/r = 48") != std::string::npos);
  CHECK(out.find("measured sum_size = 48") != std::string::npos);
  CHECK(run("construct kr --n 10 --r 3") == 2);
  CHECK(run("classify " + write("fan.txt", "n=5\n0 1 2\n0 1 3\n0 1 4\n") + " --pattern K3", &out) == 0);
  CHECK(out.find("0,1,3,0") != std::string::npos);
  CHECK(run("search --graph --n 5 --pattern K3", &out) == 0);
  CHECK(out.find("optimum 6") != std::string::npos);
  CHECK(run("search --n 3 --s-min 3 --s-max 3 --pattern K3 --json", &out) == 0);
  CHECK(out.find("\"optimum\": 6") != std::string::npos);
  CHECK(run("search --pattern K3 --margin-max 6") == 0);
  CHECK(run("--budget-nodes 10 search --n 7 --s-min 2 --s-max 4 --pattern C4") == 3);
  CHECK(run("sweep --generator kr --r 3 --n 6,12,18", &out) == 0);
  CHECK(out.find("\n12,kr,1,size,16,48,") != std::string::npos);
  std::string first, second;
  const std::string greedy = "sweep --generator greedy --pattern K3 --s-min 5 --s-max n/4 --n 20,24 --seeds 1,2";
  CHECK(run(greedy, &first) == 0);
  CHECK(run("--threads 2 " + greedy, &second) == 0);
  CHECK(first == second);
  CHECK(run("sweep --generator kr --n 6,5") == 2);
  CHECK(run("") == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("--help") == 0);
  CHECK(run("--isa scalar detect " + (kTmp / "kr12.txt").string()) == 1);
}
