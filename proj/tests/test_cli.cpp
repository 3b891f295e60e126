#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "acymatch/cli.hpp"
#include "acymatch/gen.hpp"
#include "acymatch/io.hpp"

using namespace acym;
namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path dir;
  TempDir() {
    dir = fs::temp_directory_path() / ("acymatch_test_" + std::to_string(::getpid()) + "_" +
                                       std::to_string(counter++));
    fs::create_directories(dir);
  }
  ~TempDir() { fs::remove_all(dir); }
  std::string file(const std::string& name) const { return (dir / name).string(); }
  static inline int counter = 0;
};

std::string fixture(const std::string& name) {
  return std::string(ACYMATCH_DATA_DIR) + "/fixtures/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("solve subcommand on the committed C5 fixture") {
  TempDir tmp;
  Run r = cli({"solve", "--in", fixture("c5.el"), "--out", tmp.file("m.txt"), "--report",
               tmp.file("r.json"), "--trace"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["n0"] == 5);
  CHECK(j["size"] == 2);
  CHECK(j["bound_ok"] == true);
  CHECK(j["stages"][0]["rule"] == "LowDegreeComponent");
  CHECK(slurp(tmp.file("m.txt")) == "0 1\n2 3\n");
  CHECK(json::parse(slurp(tmp.file("r.json"))) == j);
}

TEST_CASE("solve report bytes are pinned on the C5 fixture") {
  Run r = cli({"solve", "--in", fixture("c5.el")});
  const std::string expected = R"({
  "n0": 5,
  "m0": 5,
  "delta": 2,
  "size": 2,
  "bound_ok": true,
  "isolated_dropped": 0,
  "matching": [
    [
      0,
      1
    ],
    [
      2,
      3
    ]
  ],
  "stages": [
    {
      "rule": "LowDegreeComponent",
      "m_edges": [
        [
          0,
          1
        ],
        [
          2,
          3
        ]
      ],
      "removed": 5,
      "vm": [
        0,
        1,
        2,
        3
      ],
      "nm": [
        4
      ],
      "im": [],
      "budget_ok": true
    }
  ]
}
)";
  CHECK(r.out == expected);
}

TEST_CASE("solve warns and still succeeds when only isolated vertices remain") {
  TempDir tmp;
  std::ofstream(tmp.file("iso.el")) << "3 0\n";
  Run r = cli({"solve", "--in", tmp.file("iso.el")});
  CHECK(r.code == 0);
  CHECK(r.err.find("warning") != std::string::npos);
  json j = json::parse(r.out);
  CHECK(j["size"] == 0);
  CHECK(j["isolated_dropped"] == 3);
}

TEST_CASE("solve rejects malformed input with exit 1") {
  TempDir tmp;
  std::ofstream(tmp.file("bad.el")) << "2 1\n0 zero\n";
  Run r = cli({"solve", "--in", tmp.file("bad.el")});
  CHECK(r.code == 1);
  CHECK(r.err.find("ParseError") != std::string::npos);
  Run missing = cli({"solve", "--in", tmp.file("nope.el")});
  CHECK(missing.code == 1);
}

TEST_CASE("exact subcommand") {
  Run r = cli({"exact", "--in", fixture("c5.el"), "--kind", "acyclic"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["optimum"] == 2);
  CHECK(j["nodes"].get<long long>() > 0);

  Run missing_k = cli({"exact", "--in", fixture("c5.el"), "--kind", "degenerate"});
  CHECK(missing_k.code == 1);
  CHECK(missing_k.err.find("MissingK") != std::string::npos);

  Run big = cli({"exact", "--in", fixture("c5.el"), "--cap", "3"});
  CHECK(big.code == 1);
  CHECK(big.err.find("TooLarge") != std::string::npos);
}

TEST_CASE("verify subcommand and exit codes") {
  TempDir tmp;
  std::ofstream(tmp.file("pm.txt")) << "0 1\n2 3\n";
  Run bad = cli({"verify", "--graph", fixture("c4.el"), "--matching", tmp.file("pm.txt"),
                 "--kind", "acyclic"});
  CHECK(bad.code == 1);
  json jb = json::parse(bad.out);
  CHECK(jb["ok"] == false);
  CHECK(jb["reason"] == "induced_cycle");
  CHECK(jb["witness_edges"].size() == 4);

  Run ok = cli({"verify", "--graph", fixture("c4.el"), "--matching", tmp.file("pm.txt"),
                "--kind", "plain"});
  CHECK(ok.code == 0);

  std::ofstream(tmp.file("one.txt")) << "0 1\n";
  Run ind = cli({"verify", "--graph", fixture("triangle.el"), "--matching", tmp.file("one.txt"),
                 "--kind", "induced"});
  CHECK(ind.code == 0);

  Run cor = cli({"verify", "--graph", fixture("p4.el"), "--matching", tmp.file("pm.txt"),
                 "--kind", "corona"});
  CHECK(cor.code == 0);
}

TEST_CASE("gen subcommand writes reproducible instances") {
  TempDir tmp;
  Run a = cli({"gen", "--family", "random_capped", "--n", "60", "--delta", "5", "--m", "100",
               "--seed", "11", "--out", tmp.file("a.el")});
  CHECK(a.code == 0);
  Run b = cli({"gen", "--family", "random_capped", "--n", "60", "--delta", "5", "--m", "100",
               "--seed", "11", "--out", tmp.file("b.el")});
  CHECK(b.code == 0);
  CHECK(slurp(tmp.file("a.el")) == slurp(tmp.file("b.el")));
  CHECK(slurp(tmp.file("a.el")).find("prng=mt19937_64-mod-v1") != std::string::npos);

  Graph g = read_edge_list(tmp.file("a.el"));
  CHECK(g.vertex_count() == 60);
  CHECK(g.edge_count() == 100);
  CHECK(g.max_degree() <= 5);
  CHECK(g.min_degree() >= 1);

  Run joos = cli({"gen", "--family", "joos", "--delta", "6", "--copies", "2", "--out",
                  tmp.file("j.el")});
  CHECK(joos.code == 0);
  CHECK(read_edge_list(tmp.file("j.el")).vertex_count() == 2 * 4 * 4);

  Run bad = cli({"gen", "--family", "nope", "--out", tmp.file("x.el")});
  CHECK(bad.code == 1);
}

TEST_CASE("bounds subcommand") {
  Run r = cli({"bounds", "--n", "9", "--m", "9", "--delta", "4", "--k", "3"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["thm1"].get<double>() == doctest::Approx(54.0 / 112.0));
  CHECK(j["joos"].get<double>() == doctest::Approx(1.0));
  CHECK(j["edge_lb"].get<double>() == doctest::Approx(0.5625));
  CHECK(j["kdeg_coefficient"]["num"] == 8);
  CHECK(j["kdeg_coefficient"]["den"] == 1);

  Run nok = cli({"bounds", "--n", "10", "--delta", "1"});
  json j2 = json::parse(nok.out);
  CHECK(j2["regular_ub"].is_null());
  CHECK(j2["kdeg_conjecture"].is_null());
}

TEST_CASE("baseline subcommand") {
  Run p4 = cli({"baseline", "--in", fixture("p4.el")});
  CHECK(p4.code == 0);
  json j = json::parse(p4.out);
  CHECK(j["size"] == 2);
  CHECK(j.find("bound_ok") == j.end());
  CHECK(j["stages"].empty());

  CHECK(json::parse(cli({"baseline", "--in", fixture("k4.el")}).out)["size"] == 1);
  CHECK(json::parse(cli({"baseline", "--in", fixture("c4.el")}).out)["size"] == 1);
}

TEST_CASE("bench subcommand") {
  TempDir tmp;
  fs::create_directories(tmp.file("corpus"));
  for (int i = 0; i < 4; ++i) {
    Graph g = gen_random_capped(12 + 2 * i, 4, 20 + i, 100 + i);
    save_edge_list(tmp.file("corpus/i" + std::to_string(i) + ".el"), g);
  }
  save_edge_list(tmp.file("corpus/joos.el"), gen_joos(4, 1));

  Run r = cli({"bench", "--dir", tmp.file("corpus"), "--csv", tmp.file("rows.csv"), "--oracle",
               "--oracle-cap", "14"});
  CHECK(r.code == 0);
  CHECK(r.out.find("instances=5") != std::string::npos);
  CHECK(r.out.find("bound_ok=all") != std::string::npos);

  std::string csv = slurp(tmp.file("rows.csv"));
  CHECK(csv.find("instance,n,m,delta,size,bound,bound_ok,optimum,ratio_bound,ratio_opt,millis") ==
        0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);  // header + 5 rows

  // every row with an oracle column keeps ratio_opt <= 1
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  while (std::getline(lines, line)) {
    auto last_comma = line.rfind(',');
    auto prev_comma = line.rfind(',', last_comma - 1);
    std::string ratio_opt = line.substr(prev_comma + 1, last_comma - prev_comma - 1);
    if (!ratio_opt.empty()) CHECK(std::stod(ratio_opt) <= 1.0 + 1e-9);
  }

  fs::create_directories(tmp.file("empty"));
  Run empty = cli({"bench", "--dir", tmp.file("empty")});
  CHECK(empty.code == 1);
  CHECK(empty.err.find("no instances") != std::string::npos);
}

TEST_CASE("usage errors exit 1 and --help exits 0") {
  CHECK(cli({"frobnicate"}).code == 1);
  CHECK(cli({"solve"}).code == 1);  // missing --in
  CHECK(cli({}).code == 1);
  CHECK(cli({"--help"}).code == 0);
}
