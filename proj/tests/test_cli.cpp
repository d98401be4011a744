#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"

#include "hyperfuzz/cli.hpp"

namespace fs = std::filesystem;

namespace {

constexpr const char* kLeftZero = "elements: a b\na a : a\na b : a\nb a : b\nb b : b\n";
constexpr const char* kRightZero = "elements: a b\na a : a\na b : b\nb a : a\nb b : b\n";
constexpr const char* kBad = "elements: a b\na a : a\na b : a\nb a : b\nb b : a\n";
constexpr const char* kMixed = "elements: a b\na a : a\na b : a b\nb a : b\nb b : b\n";

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() / ("hyperfuzz_cli_" + std::to_string(++counter) + "_" +
                                        std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const std::string& name, const std::string& content) const {
    const fs::path p = path / name;
    std::ofstream out(p);
    out << content;
    return p.string();
  }
};

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hyperfuzz::run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("check reports the associativity verdict through exit codes") {
  TempDir dir;
  const std::string lz = dir.file("lz.hg", kLeftZero);
  const std::string bad = dir.file("bad.hg", kBad);

  const RunResult pass = run({"check", lz});
  CHECK(pass.code == 0);
  CHECK(pass.out == "associative: yes\n");

  const RunResult fail = run({"check", bad});
  CHECK(fail.code == 1);
  CHECK(fail.out ==
        "associative: no\n"
        "counterexample: x=b y=a z=b\n"
        "  (x o y)*{z} = {a}\n"
        "  {x}*(y o z) = {b}\n");

  const RunResult js = run({"--json", "check", bad});
  CHECK(js.code == 1);
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j["command"] == "check");
  CHECK(j["associative"] == false);
  CHECK(j["witness"]["x"] == "b");
  CHECK(j["witness"]["lhs"] == nlohmann::json::array({"a"}));
}

TEST_CASE("compose writes the fz format to stdout or a file") {
  TempDir dir;
  const std::string hg = dir.file("m.hg", kMixed);
  const std::string f = dir.file("f.fz", "a 1/2\nb 1\n");
  const std::string g = dir.file("g.fz", "a 1\nb 1/4\n");

  const RunResult to_stdout = run({"compose", hg, f, g});
  CHECK(to_stdout.code == 0);
  CHECK(to_stdout.out == "a 1/2\nb 1\n");

  const std::string out_path = (dir.path / "out.fz").string();
  const RunResult to_file = run({"compose", hg, f, g, "--out", out_path});
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  std::ifstream in(out_path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == "a 1/2\nb 1\n");
}

TEST_CASE("ideal runs one or both methods") {
  TempDir dir;
  const std::string lz = dir.file("lz.hg", kLeftZero);
  const std::string rz = dir.file("rz.hg", kRightZero);
  const std::string bad = dir.file("bad.hg", kBad);
  const std::string f10 = dir.file("f.fz", "a 1\nb 0\n");

  const RunResult both = run({"ideal", lz, f10, "--kind", "right", "--method", "both"});
  CHECK(both.code == 0);
  CHECK(both.out ==
        "kind: right\n"
        "method: definition\n"
        "verdict: pass\n"
        "method: characterization\n"
        "verdict: pass\n"
        "agreement: yes\n");

  const RunResult fail = run({"ideal", rz, f10, "--kind", "right", "--method", "definition"});
  CHECK(fail.code == 1);
  CHECK(fail.out ==
        "kind: right\n"
        "method: definition\n"
        "verdict: fail\n"
        "counterexample: x=a y=b u=b\n"
        "  f(u) = 0\n"
        "  f(x) = 1\n");

  // default method is both
  const RunResult dflt = run({"ideal", lz, f10, "--kind", "right"});
  CHECK(dflt.code == 0);
  CHECK(dflt.out == both.out);

  const RunResult bi = run({"ideal", bad, f10, "--kind", "bi"});
  CHECK(bi.code == 2);
  CHECK(bi.err.find("error:") != std::string::npos);

  const RunResult typo = run({"ideal", lz, f10, "--kind", "right", "--method", "quick"});
  CHECK(typo.code == 2);

  const RunResult js = run({"--json", "ideal", rz, f10, "--kind", "right"});
  CHECK(js.code == 1);
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j["kind"] == "right");
  CHECK(j["agree"] == true);
  CHECK(j["checks"].size() == 2);
  CHECK(j["checks"][0]["pass"] == false);
  CHECK(j["checks"][1]["witness"]["type"] == "characterization");
}

TEST_CASE("classify prints the profile") {
  TempDir dir;
  const std::string lz = dir.file("lz.hg", kLeftZero);
  const std::string bad = dir.file("bad.hg", kBad);
  const std::string f10 = dir.file("f.fz", "a 1\nb 0\n");

  const RunResult res = run({"classify", lz, f10});
  CHECK(res.code == 0);
  CHECK(res.out ==
        "associative: yes\n"
        "right: pass\n"
        "left: fail\n"
        "quasi: pass\n"
        "bi: pass\n");

  const RunResult off = run({"classify", bad, f10});
  CHECK(off.code == 0);
  CHECK(off.out.find("bi: n/a") != std::string::npos);

  const RunResult js = run({"--json", "classify", bad, f10});
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j["associative"] == false);
  CHECK(j["bi"].is_null());
}

TEST_CASE("verify wires scopes through to the harness") {
  const RunResult t4 = run({"verify", "--theorem", "T4", "--size", "2", "--grid", "2", "--no-time"});
  CHECK(t4.code == 0);
  CHECK(t4.out ==
        "theorem: T4\n"
        "scope: n=2 k=2 exhaustive\n"
        "tables: 81\n"
        "instances: 729\n"
        "disagreements: 0\n");

  const RunResult t11_bare = run({"verify", "--theorem", "T11", "--size", "2", "--grid", "2"});
  CHECK(t11_bare.code == 2);

  const RunResult t11 = run(
      {"verify", "--theorem", "T11", "--size", "2", "--grid", "2", "--assoc-only", "--no-time"});
  CHECK(t11.code == 0);
  CHECK(t11.out.find("tables: 30\n") != std::string::npos);
  CHECK(t11.out.find("disagreements: 0\n") != std::string::npos);

  // sampling requires an explicit seed
  const RunResult no_seed =
      run({"verify", "--theorem", "T4", "--size", "3", "--grid", "2", "--samples", "10"});
  CHECK(no_seed.code == 2);

  const RunResult sampled = run({"--json", "verify", "--theorem", "T4", "--size", "3", "--grid",
                                 "2", "--samples", "25", "--seed", "9", "--no-time"});
  CHECK(sampled.code == 0);
  const auto j = nlohmann::json::parse(sampled.out);
  CHECK(j["instances"] == 25);
  CHECK(j["disagreements"] == 0);
  CHECK(j["scope"]["mode"] == "sampled");
  CHECK(j["scope"]["seed"] == 9);
  CHECK(j.count("wall_ms") == 0);
}

TEST_CASE("enumerate writes stable files and honors filters") {
  TempDir dir;
  auto count_files = [](const fs::path& p) {
    int c = 0;
    for (const auto& entry : fs::directory_iterator(p)) {
      (void)entry;
      ++c;
    }
    return c;
  };

  const std::string all_dir = (dir.path / "all").string();
  const RunResult all = run({"enumerate", "--size", "2", "--out", all_dir});
  CHECK(all.code == 0);
  CHECK(count_files(all_dir) == 81);
  CHECK(fs::exists(fs::path(all_dir) / "n2-000.hg"));
  CHECK(fs::exists(fs::path(all_dir) / "n2-080.hg"));

  const std::string assoc_dir = (dir.path / "assoc").string();
  const RunResult assoc = run({"enumerate", "--size", "2", "--assoc-only", "--out", assoc_dir});
  CHECK(assoc.code == 0);
  CHECK(count_files(assoc_dir) == 30);

  const std::string canon_dir = (dir.path / "canon").string();
  const RunResult canon = run({"enumerate", "--size", "2", "--canonical", "--out", canon_dir});
  CHECK(canon.code == 0);
  CHECK(count_files(canon_dir) == 45);

  const RunResult budget = run({"enumerate", "--size", "3"});
  CHECK(budget.code == 2);
  CHECK(budget.err.find("budget") != std::string::npos);
}

TEST_CASE("usage and input errors exit with 2 and positioned diagnostics") {
  TempDir dir;
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check", (dir.path / "missing.hg").string()}).code == 2);

  const std::string broken = dir.file("broken.hg", "elements: a b\na a :\na b : a\nb a : b\nb b : b\n");
  const RunResult res = run({"check", broken});
  CHECK(res.code == 2);
  CHECK(res.err.find(":2:5:") != std::string::npos);
}
