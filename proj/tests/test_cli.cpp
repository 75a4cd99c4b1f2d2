#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "egstab/graph6.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const char* bin = std::getenv("EGSTAB_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) res.out.append(buf, got);
  int status = pclose(pipe);
  res.code = WEXITSTATUS(status);
  return res;
}

int count_lines(const std::string& text) {
  int n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

json strip_timing(json j) {
  j.erase("timing");
  return j;
}

}  // namespace

TEST_CASE("formulas table emits the expected CSV sweep") {
  auto res = run("formulas --table h_s --k 9 --a 3 --s 2 --n 9..15");
  CHECK(res.code == 0);
  std::istringstream in(res.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,k,a,s,value");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    auto last = line.rfind(',');
    int n = std::stoi(line.substr(0, line.find(',')));
    CHECK(std::stoi(line.substr(last + 1)) == 3 * n - 3);
  }
  CHECK(rows == 7);
}

TEST_CASE("gen emits one decodable record for single constructions") {
  auto res = run("gen --family h --n 12 --k 9 --a 3");
  CHECK(res.code == 0);
  CHECK(count_lines(res.out) == 1);
  auto g = egstab::graph6_decode(res.out.substr(0, res.out.size() - 1));
  CHECK(g.n == 12);
  CHECK(g.edge_count() == 33);  // h_2(12,9,3)
}

TEST_CASE("gen writes a descriptor sidecar next to --out") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "egstab-cli-test";
  fs::create_directories(dir);
  auto out = (dir / "f0.g6").string();
  auto res = run("gen --family F0 --m 12 --k 12 --r 3 --out " + out);
  CHECK(res.code == 0);
  CHECK(fs::exists(out));
  CHECK(fs::exists(out + ".desc"));
  std::ifstream desc(out + ".desc");
  std::string text((std::istreambuf_iterator<char>(desc)), std::istreambuf_iterator<char>());
  CHECK(text.find("type=II") != std::string::npos);
  CHECK(text.find("special=F0") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("enumerate prints the header and the class list") {
  auto res = run("enumerate --n 5");
  CHECK(res.code == 0);
  CHECK(res.out.rfind("#egstab-enum n=5 twoconnected\n", 0) == 0);
  CHECK(count_lines(res.out) == 11);  // header + 10 classes
}

TEST_CASE("solve emits one json record per input line") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "egstab-cli-solve";
  fs::create_directories(dir);
  auto in = (dir / "in.g6").string();
  {
    std::ofstream f(in);
    f << "Dhc\nD~{\n";  // C5 and K5
  }
  auto res = run("solve --op circ --in " + in);
  CHECK(res.code == 0);
  std::istringstream lines(res.out);
  std::string line;
  int idx = 0;
  while (std::getline(lines, line)) {
    json rec = json::parse(line);
    CHECK(rec["index"] == idx);
    CHECK(rec["result"] == 5);
    ++idx;
  }
  CHECK(idx == 2);

  auto posa = run("solve --op posa --in " + in);
  CHECK(posa.code == 0);
  json rec = json::parse(posa.out.substr(0, posa.out.find('\n')));
  CHECK(rec["result"].get<int>() >= rec["witness"]["guarantee"].get<int>());
  fs::remove_all(dir);
}

TEST_CASE("verify emits a report and a clean exit code") {
  auto res = run("verify --suite kopylov_luo --n-max 6");
  CHECK(res.code == 0);
  json rep = json::parse(res.out);
  CHECK(rep["suite"] == "kopylov_luo");
  CHECK(rep["counts"]["failures"] == 0);
  CHECK(rep["counts"]["points"] ==
        rep["counts"]["passes"].get<long long>() + rep["counts"]["skips"].get<long long>());
}

TEST_CASE("verify reports are byte-identical across jobs counts") {
  auto one = run("verify --suite fan --n-max 6 --r 4..6 --jobs 1");
  auto eight = run("verify --suite fan --n-max 6 --r 4..6 --jobs 8");
  REQUIRE(one.code == 0);
  REQUIRE(eight.code == 0);
  json a = strip_timing(json::parse(one.out));
  json b = strip_timing(json::parse(eight.out));
  a["config"].erase("jobs");
  b["config"].erase("jobs");
  CHECK(a.dump() == b.dump());
}

TEST_CASE("report summarizes and replays byte-identically") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "egstab-cli-report";
  fs::create_directories(dir);
  auto rep = (dir / "r.json").string();
  auto rep2 = (dir / "r2.json").string();
  CHECK(run("verify --suite erdos_gallai --n-max 6 --k 4..6 --out " + rep).code == 0);
  auto sum = run("report --in " + rep + " --summary -");
  CHECK(sum.code == 0);
  CHECK(sum.out.rfind("suite,", 0) == 0);
  CHECK(sum.out.find("erdos_gallai") != std::string::npos);

  CHECK(run("report --in " + rep + " --replay " + rep2).code == 0);
  std::ifstream f1(rep), f2(rep2);
  json a = json::parse(f1), b = json::parse(f2);
  CHECK(strip_timing(a).dump() == strip_timing(b).dump());
  fs::remove_all(dir);
}

TEST_CASE("enumeration cache round trip through EGSTAB_CACHE_DIR") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "egstab-cli-cache";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const char* bin = std::getenv("EGSTAB_BIN");
  REQUIRE(bin != nullptr);
  std::string env = "EGSTAB_CACHE_DIR=" + dir.string() + " ";
  auto run_env = [&](const std::string& args) {
    std::string cmd = env + std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    pclose(pipe);
    return out;
  };
  std::string first = run_env("enumerate --n 6");
  CHECK(fs::exists(dir / "twoconnected-n6.g6"));
  std::string second = run_env("enumerate --n 6");  // loads the cache this time
  CHECK(first == second);
  CHECK(count_lines(first) == 57);  // header + 56 classes
  fs::remove_all(dir);
}

TEST_CASE("exit codes") {
  CHECK(run("verify --no-such-flag").code == 64);
  CHECK(run("nope").code == 64);
  CHECK(run("formulas --table nope --n 5 --k 5").code == 64);
  CHECK(run("gen --family h --n 8 --k 9 --a 3").code == 64);  // n < k: domain error
  CHECK(run("verify --suite fan --n-max 5 --out /proc/nonexistent/r.json").code == 74);
  CHECK(run("solve --op circ --in /no/such/file.g6").code == 74);
}
