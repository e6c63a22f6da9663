#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cointersect/cli.hpp"

using coint::run_cli;
using Json = nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string temp_path(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "cointersect_cli_tests";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

}  // namespace

TEST_CASE("exact on K2,2,2") {
  const Run r = run({"exact", "--family", "complete_multipartite", "--parts", "2,2,2"});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  CHECK(j["result"]["theta_c"] == 5);
  CHECK(j["result"]["witness"]["vertices"].size() == 6);
  CHECK(j["version"] == "0.1.0");
  CHECK(j["command"] == "exact");
  CHECK(j["config"]["parts"] == Json::array({"2", "2", "2"}));
  CHECK(j["config"]["seed"] == "0");
}

TEST_CASE("global options may follow the subcommand") {
  const Run r = run({"exact", "--fixture", "tadpole", "--format", "text"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("# cointersect 0.1.0 exact", 0) == 0);
  CHECK(r.out.find("theta_c 4") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"exact", "--fixture", "tadpole", "--nope"}).code == 2);
  CHECK(run({"anneal", "--fixture", "p13", "--alpha", "3", "--beta", "4", "--b", "10", "--rounds", "100"}).code == 2);
  CHECK(run({"anneal", "--fixture", "p13", "--alpha", "3", "--beta", "4", "--rounds", "0"}).code == 2);
  CHECK(run({"anneal", "--alpha", "3", "--beta", "4"}).code == 2);  // no graph
  CHECK(run({"gen", "--family", "path", "--fixture", "p5"}).code == 2);
  CHECK(run({"communities", "--cir", "x.json", "--format", "yaml"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("domain errors exit with 1") {
  CHECK(run({"construct", "--kind", "path", "--n", "13", "--alpha", "3", "--beta", "3"}).code == 1);
  CHECK(run({"verify", "--fixture", "p5", "--cir", temp_path("missing.json")}).code == 1);
  CHECK(run({"dnf-bound", "--formula", "x1 &", "--theta1", "4"}).code == 1);
}

TEST_CASE("construct, gen and verify round trip") {
  const std::string cir = temp_path("p13.json");
  const std::string graph = temp_path("p13.txt");
  REQUIRE(run({"construct", "--kind", "path", "--n", "13", "--alpha", "3", "--beta", "4", "--out", cir}).code == 0);
  REQUIRE(run({"gen", "--family", "path", "--n", "13", "--format", "text", "--out", graph}).code == 0);
  const Run ok = run({"verify", "--graph", graph, "--cir", cir});
  CHECK(ok.code == 0);
  CHECK(ok.json()["result"]["valid"] == true);
  const Run bad = run({"verify", "--family", "cycle", "--n", "13", "--cir", cir});
  CHECK(bad.code == 1);
  CHECK(bad.json()["result"]["valid"] == false);
  const Run sc = run({"score", "--graph", graph, "--cir", cir});
  CHECK(sc.json()["result"]["score"]["matched"] == 78);
  const Run general = run({"verify", "--graph", graph, "--cir", cir, "--formula", "x1 & x2"});
  CHECK(general.code == 0);
}

TEST_CASE("synth output feeds exact") {
  const std::string path = temp_path("synth.json");
  REQUIRE(run({"synth", "--n", "12", "--alpha", "4", "--beta", "5", "--seed", "17", "--out", path}).code == 0);
  const Run r = run({"exact", "--graph", path});
  REQUIRE(r.code == 0);
  CHECK(r.json()["result"]["theta_c"].get<int>() <= 9);
  CHECK(run({"verify", "--graph", path, "--cir", path}).code == 0);
}

TEST_CASE("identical invocations give identical bytes") {
  const std::vector<std::string> anneal{"anneal", "--fixture", "p13", "--alpha", "3", "--beta", "4", "--seed", "9",
                                        "--restarts", "3"};
  CHECK(run(anneal).out == run(anneal).out);
  const std::vector<std::string> synth{"synth", "--n", "10", "--alpha", "3", "--beta", "3", "--seed", "2"};
  CHECK(run(synth).out == run(synth).out);
  CHECK(run(synth).out != run({"synth", "--n", "10", "--alpha", "3", "--beta", "3", "--seed", "3"}).out);
}

TEST_CASE("anneal output and trace") {
  const std::string trace = temp_path("trace.csv");
  const Run r = run({"anneal", "--fixture", "p13", "--alpha", "3", "--beta", "4", "--seed", "1", "--trace", trace,
                     "--trace-every", "10", "--rounds", "200", "--no-early-stop"});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  CHECK(j["result"]["rounds_run"] == 200);
  CHECK(j["config"]["rounds"] == "200");
  std::ifstream in(trace);
  std::string header;
  std::getline(in, header);
  CHECK(header == "round,current,best");
  int lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  CHECK(lines == 20);
}

TEST_CASE("bounds, packing and dnf-bound") {
  const Run b = run({"bounds", "--family", "complete_bipartite", "--parts", "3,3"});
  REQUIRE(b.code == 0);
  CHECK(b.json()["result"]["theta1"] == 9);
  CHECK(b.json()["result"]["best_upper"] == 6);
  const Run p = run({"packing", "--k", "3"});
  CHECK(p.json()["result"]["design"] == true);
  CHECK(p.json()["result"]["packing"]["classes"].size() == 4);
  const std::string pk = temp_path("packing.json");
  REQUIRE(run({"packing", "--k", "4", "--kind", "three", "--out", pk}).code == 0);
  {
    // Re-check the packing payload alone.
    std::ifstream in(pk);
    const Json doc = Json::parse(in);
    std::ofstream f(pk);
    f << doc["result"]["packing"].dump();
  }
  const Run check = run({"packing", "--check", pk});
  CHECK(check.json()["result"]["valid"] == true);
  CHECK(check.json()["result"]["design"] == false);
  const Run d = run({"dnf-bound", "--formula", "x1 | x2 & x3", "--theta1", "5"});
  CHECK(d.json()["result"]["bound"]["value"] == 5);
  CHECK(d.json()["result"]["bound"]["alphas"] == Json::array({1, 2, 2}));
}

TEST_CASE("dimacs export and model decoding") {
  const Run text = run({"export-dimacs", "--family", "cycle", "--n", "6", "--alpha", "2", "--beta", "3",
                        "--format", "text"});
  REQUIRE(text.code == 0);
  CHECK(text.out.rfind("c cointersect 0.1.0 export-dimacs", 0) == 0);
  CHECK(text.out.find("\np cnf ") != std::string::npos);
  const std::string model = temp_path("model.txt");
  {
    std::ofstream f(model);
    f << "s SATISFIABLE\nv 0\n";
  }
  CHECK(run({"export-dimacs", "--family", "cycle", "--n", "6", "--alpha", "2", "--beta", "3", "--model", model}).code ==
        1);
}

TEST_CASE("communities, align and the hidden oracle") {
  const std::string cir = temp_path("k66.json");
  REQUIRE(run({"construct", "--kind", "knn", "--n", "6", "--t", "2", "--s", "3", "--out", cir}).code == 0);
  const Run c = run({"communities", "--cir", cir});
  CHECK(c.json()["result"]["A"].size() == 2);
  const Run dot = run({"communities", "--cir", cir, "--format", "dot"});
  CHECK(dot.out.find("graph communities {") != std::string::npos);
  const Run a = run({"align", "--reference", cir, "--candidate", cir});
  CHECK(a.json()["result"]["average_jaccard"] == 1.0);
  const Run o = run({"oracle", "--family", "path", "--n", "5", "--alpha", "2", "--beta", "2"});
  CHECK(o.json()["result"]["classes"] == 1);
  CHECK(run({"--help"}).out.find("oracle") == std::string::npos);
}
