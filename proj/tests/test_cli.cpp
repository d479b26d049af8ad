#include "corpus.hpp"
#include "inscover/cli.hpp"
#include "inscover/io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using inscover::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  args.insert(args.begin(), "inscover");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("inscover_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(file(name), std::ios::binary) << text;
    return file(name);
  }

 private:
  fs::path path_;
};

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("solve cover reproduces S(3,4,3) = 12 and the output re-verifies") {
  TempDir dir;
  const auto res = cli({"solve", "cover", "--n", "3", "--k", "4", "--r", "3", "--exact", "--out", dir.file("c.code")});
  CHECK(res.code == 0);
  CHECK(contains(res.out, "optimum: 12\n"));
  CHECK(contains(res.out, "status: proved_optimal\n"));
  const auto verify = cli({"verify", "cover", dir.file("c.code"), "--k", "4"});
  CHECK(verify.code == 0);
  CHECK(contains(verify.out, "covered: yes"));
}

TEST_CASE("solve --all-optimal finds a single class") {
  const auto res = cli({"solve", "cover", "--n", "3", "--k", "4", "--r", "3", "--all-optimal"});
  CHECK(res.code == 0);
  CHECK(contains(res.out, "classes: 1\n"));
  CHECK(cli({"solve", "turan", "--n", "5", "--k", "4", "--r", "3", "--all-optimal"}).code == 2);
}

TEST_CASE("JSON report keys are stable") {
  for (const char* kind : {"cover", "turan", "packing"}) {
    const auto res = cli({"solve", kind, "--n", "4", "--r", "2", "--json"});
    REQUIRE(res.code == 0);
    const auto doc = nlohmann::json::parse(res.out);
    std::set<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it) keys.insert(it.key());
    CHECK(keys == std::set<std::string>{"params", "optimum", "status", "solution", "certificate", "stats"});
    CHECK(doc["certificate"]["verified"] == true);
  }
}

TEST_CASE("output does not depend on the thread count") {
  for (auto kind : {"cover", "turan"}) {
    const auto one = cli({"solve", kind, "--n", "4", "--k", "4", "--r", "3", "--threads", "1"});
    const auto many = cli({"solve", kind, "--n", "4", "--k", "4", "--r", "3", "--threads", "3"});
    CHECK(one.code == 0);
    CHECK(one.out == many.out);
    auto a = nlohmann::json::parse(cli({"solve", kind, "--n", "5", "--r", "2", "--json", "--threads", "1"}).out);
    auto b = nlohmann::json::parse(cli({"solve", kind, "--n", "5", "--r", "2", "--json", "--threads", "4"}).out);
    a.erase("stats");
    b.erase("stats");
    CHECK(a == b);
  }
}

TEST_CASE("INSCOVER_THREADS is the fallback for --threads") {
  ::setenv("INSCOVER_THREADS", "2", 1);
  const auto env = cli({"solve", "cover", "--n", "3", "--k", "4", "--r", "3"});
  ::setenv("INSCOVER_THREADS", "zero", 1);
  const auto bad = cli({"solve", "cover", "--n", "3", "--k", "4", "--r", "3"});
  ::unsetenv("INSCOVER_THREADS");
  CHECK(env.code == 0);
  CHECK(env.out == cli({"solve", "cover", "--n", "3", "--k", "4", "--r", "3"}).out);
  CHECK(bad.code == 2);
}

TEST_CASE("solver outputs round trip through verify") {
  TempDir dir;
  CHECK(cli({"solve", "turan", "--n", "7", "--k", "4", "--r", "3", "--out", dir.file("t.sys")}).code == 0);
  CHECK(cli({"verify", "turan", dir.file("t.sys")}).code == 0);
  CHECK(cli({"solve", "packing", "--n", "3", "--r", "3", "--out", dir.file("p.code")}).code == 0);
  const auto packing = cli({"verify", "packing", dir.file("p.code")});
  CHECK(packing.code == 0);
  CHECK(contains(packing.out, "11 words"));
  CHECK(cli({"solve", "cover", "--n", "4", "--r", "2", "--greedy", "--out", dir.file("g.code")}).code == 0);
  CHECK(cli({"verify", "cover", dir.file("g.code")}).code == 0);
}

TEST_CASE("verification failures exit 1 with a witness") {
  TempDir dir;
  const auto path = dir.write("weak.code", "n=2 k=3 r=2\n0 0\n");
  const auto res = cli({"verify", "cover", path, "--k", "3"});
  CHECK(res.code == 1);
  CHECK(contains(res.out, "uncovered: (0,1,1)"));
  const auto sys = dir.write("weak.sys", "n=5 k=4 r=3\n0 1 2\n");
  const auto t = cli({"verify", "turan", sys});
  CHECK(t.code == 1);
  CHECK(contains(t.out, "uncovered: (0,1,3,4)"));
  const auto clash = dir.write("clash.code", "n=2 k=3 r=2\n0 0 1\n0 1 1\n");
  CHECK(cli({"verify", "packing", clash}).code == 1);
}

TEST_CASE("malformed input is a usage error with a line number") {
  TempDir dir;
  const auto path = dir.write("bad.code", "n=3 k=4 r=3\n0 0 0\n0 0\n");
  const auto res = cli({"verify", "cover", path});
  CHECK(res.code == 2);
  CHECK(contains(res.err, "line 3"));
  CHECK(cli({"verify", "cover", dir.file("missing.code")}).code == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"solve", "cover", "--r", "2"}).code == 2);
  CHECK(cli({"solve", "cover", "--n", "3", "--k", "2", "--r", "2"}).code == 2);
  CHECK(cli({"solve", "cover", "--n", "3", "--r", "2", "--exact", "--greedy"}).code == 2);
  CHECK(cli({"solve", "packing", "--n", "3", "--k", "5", "--r", "2"}).code == 2);
  CHECK(cli({"diagnose", "bonferroni", "--trials", "10"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("an exhausted budget exits 3 with the best known code") {
  const auto res = cli({"solve", "cover", "--n", "4", "--k", "4", "--r", "3", "--time-limit", "0"});
  CHECK(res.code == 3);
  CHECK(contains(res.out, "status: best_known"));
  CHECK(contains(res.out, "verified: yes"));
}

TEST_CASE("bounds table") {
  const auto res = cli({"bounds", "--r", "3", "--t-lower", "0.438334"});
  CHECK(res.code == 0);
  CHECK(contains(res.out, "0.3333429"));
  CHECK(contains(res.out, "consistent: yes"));
  const auto json = cli({"bounds", "--r", "2,3,4", "--n", "4", "--json"});
  CHECK(json.code == 0);
  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["rows"].size() == 3);
  for (const auto& row : doc["rows"]) CHECK(row["consistent"] == true);
}

TEST_CASE("constructions") {
  TempDir dir;
  const auto mantel = cli({"construct", "mantel", "--n", "5"});
  CHECK(mantel.code == 0);
  CHECK(mantel.out == "n=5 k=3 r=2\n0 1\n2 3\n2 4\n3 4\n");

  CHECK(cli({"construct", "turan43", "--n", "9", "--out", dir.file("t43.sys")}).code == 0);
  CHECK(inscover::read_system_file(dir.file("t43.sys")).system.size() == 30);
  CHECK(cli({"verify", "turan", dir.file("t43.sys")}).code == 0);

  CHECK(cli({"construct", "turan-to-code", dir.file("t43.sys"), "--out", dir.file("t43.code")}).code == 0);
  CHECK(cli({"verify", "cover", dir.file("t43.code")}).code == 0);
  const auto back = cli({"construct", "code-to-turan", dir.file("t43.code")});
  CHECK(back.code == 0);
  std::ifstream original(dir.file("t43.sys"));
  CHECK(back.out == std::string(std::istreambuf_iterator<char>(original), {}));

  const auto pair = dir.write("pair.code", "n=2 k=3 r=2\n0 0\n1 1\n");
  CHECK(cli({"construct", "lift", pair, "--m", "5", "--out", dir.file("lift.code")}).code == 0);
  CHECK(cli({"verify", "cover", dir.file("lift.code")}).code == 0);
  CHECK(cli({"construct", "lift", pair, "--map", "0,1,1,0", "--out", dir.file("map.code")}).code == 0);
  CHECK(cli({"verify", "cover", dir.file("map.code")}).code == 0);

  const auto a = cli({"construct", "random-lift", pair, "--n", "6", "--seed", "9"});
  const auto b = cli({"construct", "random-lift", pair, "--n", "6", "--seed", "9"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(cli({"construct", "random-lift", pair, "--n", "6"}).code == 2);

  CHECK(cli({"construct", "half-cube", "--n", "6", "--out", dir.file("hc.code")}).code == 0);
  CHECK(cli({"verify", "cover", dir.file("hc.code")}).code == 0);
  CHECK(cli({"construct", "symmetrize", pair}).code == 0);

  const auto not_sym = dir.write("g.code", inscover::format_code_file({3, 4, 3, testing_support::grozea_code()}));
  CHECK(cli({"construct", "code-to-turan", not_sym}).code == 2);
  const auto weak = dir.write("weak.sys", "n=5 k=3 r=2\n0 1\n");
  CHECK(cli({"construct", "turan-to-code", weak}).code == 1);
}

TEST_CASE("diagnose subcommands") {
  TempDir dir;
  const auto g = dir.write("g.code", inscover::format_code_file({3, 4, 3, testing_support::grozea_code()}));
  const auto atoms = cli({"diagnose", "atoms", g});
  CHECK(atoms.code == 0);
  CHECK(contains(atoms.out, "residue bound: 2/9 <= 20/27 holds"));
  const auto fuzz = cli({"diagnose", "bonferroni", "--trials", "300", "--seed", "1"});
  CHECK(fuzz.code == 0);
  CHECK(contains(fuzz.out, "violations: 0"));
  CHECK(cli({"diagnose", "bonferroni", "--trials", "100", "--seed", "1", "--star"}).code == 0);
  const auto opt = dir.write("o.code", "n=2 k=5 r=4\n0 0 0 0\n0 0 1 1\n0 1 1 0\n1 0 0 1\n1 1 0 0\n1 1 1 1\n");
  const auto inter = cli({"diagnose", "intersections", opt});
  CHECK(inter.code == 1);
  CHECK(contains(inter.out, "pairwise adjacent pairs: holds"));
  const auto weak = dir.write("weak.code", "n=2 k=3 r=2\n0 0\n");
  CHECK(cli({"diagnose", "atoms", weak}).code == 1);
}
