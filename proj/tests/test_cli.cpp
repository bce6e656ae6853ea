#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct TmpDir {
  fs::path p;
  TmpDir() {
    p = fs::temp_directory_path() / ("rbl_cli_test_" + std::to_string(::getpid()));
    fs::remove_all(p);
    fs::create_directories(p);
  }
  ~TmpDir() { fs::remove_all(p); }
  std::string operator/(const std::string& f) const { return (p / f).string(); }
};

int rbl(const std::string& args) {
  std::string cmd = std::string(RBL_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cli exit codes") {
  TmpDir d;
  CHECK(rbl("--help") == 0);
  CHECK(rbl("") == 1);
  CHECK(rbl("frobnicate") == 1);
  CHECK(rbl("gen --n 10") == 1);  // --out missing
  CHECK(rbl("gen --n 0 --out " + d / "x.rbc") == 1);
  CHECK(!fs::exists(d / "x.rbc"));
  CHECK(rbl("gen --paley 7 --out " + d / "x.rbc") == 1);
  CHECK(rbl("run-book --in " + d / "missing.rbc --k 4 --ell 4 --out " + d / "t.json") == 1);
  CHECK(!fs::exists(d / "t.json"));
  CHECK(rbl("tables --k-range 5-9") == 1);
  CHECK(rbl("verify-bounds --appendix E") == 1);

  CHECK(rbl("gen --n 300 --seed 3 --out " + d / "g.rbc") == 0);
  CHECK(slurp(d / "g.rbc").rfind("RBC1 300\n", 0) == 0);
  CHECK(rbl("run-book --in " + d / "g.rbc --k 12 --ell 12 --mu 0.6 --epsilon 0.3 --x-min 5 --w-min 300 --out " +
            d / "t.json") == 0);
  CHECK(rbl("check-trace --colouring " + d / "g.rbc --trace " + d / "t.json --out " + d / "r.json") == 0);
  auto rep = nlohmann::json::parse(slurp(d / "r.json"));
  CHECK(rep["checks"]["2"]["status"] == "pass");

  // tamper with the first recorded density
  auto tr = nlohmann::json::parse(slurp(d / "t.json"));
  REQUIRE(!tr["steps"].empty());
  tr["steps"][0]["p"] = "1/3";
  std::ofstream(d / "bad.json") << tr.dump();
  CHECK(rbl("check-trace --colouring " + d / "g.rbc --trace " + d / "bad.json --out " + d / "r2.json") == 2);

  // trace against a different colouring of another size
  CHECK(rbl("gen --n 50 --seed 3 --out " + d / "h.rbc") == 0);
  CHECK(rbl("check-trace --colouring " + d / "h.rbc --trace " + d / "t.json") == 2);

  CHECK(rbl("clique --in " + d / "g.rbc --colour blue --out " + d / "q.txt") == 0);
  CHECK(slurp(d / "q.txt").rfind("colour blue\nsize ", 0) == 0);
  CHECK(rbl("tables --k-range 10:12 --out " + d / "tab.csv") == 0);
  CHECK(rbl("verify-bounds --appendix A --out " + d / "a.csv") == 0);
  CHECK(slurp(d / "a.csv").find(",fail") == std::string::npos);

  // atomic writes leave no temporaries behind
  for (const auto& e : fs::directory_iterator(d.p)) {
    auto name = e.path().filename().string();
    CHECK(name.find(".tmp") == std::string::npos);
  }
}

TEST_CASE("cli output does not depend on jobs") {
  TmpDir d;
  CHECK(rbl("--jobs 1 verify-bounds --appendix B --out " + d / "b1.csv") == 0);
  CHECK(rbl("--jobs 8 verify-bounds --appendix B --out " + d / "b8.csv") == 0);
  CHECK(slurp(d / "b1.csv") == slurp(d / "b8.csv"));
}
