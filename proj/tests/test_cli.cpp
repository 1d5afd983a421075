#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "planeproj/cli.hpp"
#include "planeproj/ppe.hpp"
#include "planeproj/verify.hpp"

using namespace planeproj;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "planeproj");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("planeproj-cli-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& text = {}) const {
    const fs::path p = path / name;
    if (!text.empty()) std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Unit square with both diagonals in one plane.
const char* kCrossing = R"({"dimension": 2,
  "vertices": [{"id": 0, "coords": [[0, 1], [0, 1]]}, {"id": 1, "coords": [[1, 1], [0, 1]]},
               {"id": 2, "coords": [[1, 1], [1, 1]]}, {"id": 3, "coords": [[0, 1], [1, 1]]}],
  "edges": [{"u": 0, "v": 2, "planes": [[0, 1]]}, {"u": 1, "v": 3, "planes": [[0, 1]]}]})";

}  // namespace

TEST_CASE("construct and verify round trip") {
  TempDir tmp;
  const std::string ppe = tmp.file("k8.ppe");
  const Run c = run({"construct", "complete", "--n", "8", "--out", ppe});
  CHECK(c.code == kExitOk);
  CHECK(c.out.find("edges 28") != std::string::npos);
  CHECK(verify(read_ppe_file(ppe)).ok());

  const Run v = run({"verify", ppe});
  CHECK(v.code == kExitOk);
  CHECK(v.out == "OK\n");

  const Run j = run({"--json", "verify", ppe});
  CHECK(nlohmann::json::parse(j.out)["ok"] == true);
}

TEST_CASE("construct kinds") {
  TempDir tmp;
  CHECK(run({"construct", "extremal", "--n", "16"}).out.find("edges 81") != std::string::npos);
  const Run cp = run({"construct", "convex-points", "--n", "6", "--d", "3", "--json"});
  CHECK(cp.code == kExitOk);
  CHECK(nlohmann::json::parse(cp.out)["dimension"] == 3);

  const std::string c6 = tmp.file("c6.txt", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
  const Run ff = run({"construct", "from-forests", "--in", c6, "--k", "2", "--json"});
  CHECK(ff.code == kExitOk);
  CHECK(nlohmann::json::parse(ff.out)["dimension"] == 3);
  CHECK(run({"construct", "from-forests", "--in", c6, "--mode", "paper", "--seed", "3"}).code != kExitUsage);

  const std::string tri = tmp.file("tri.txt", "5 3\n0 1\n1 2\n0 2\n");
  const std::string path = tmp.file("path.txt", "5 2\n2 3\n3 4\n");
  const Run pp = run({"construct", "planar-plus-paths", "--in", tri, "--path", path, "--json"});
  CHECK(pp.code == kExitOk);
  CHECK(nlohmann::json::parse(pp.out)["dimension"] == 3);

  const std::string layout = tmp.file(
      "layout.json", R"({"positions": [[0, 0], [3, 0], [0, 3], [[3, 2], 1]], "layers": [[[0, 1], [1, 2]], [[0, 3]]]})");
  const Run lift = run({"construct", "lift", "--layout", layout, "--json"});
  CHECK(lift.code == kExitOk);
  CHECK(nlohmann::json::parse(lift.out)["dimension"] == 4);
}

TEST_CASE("verify reports a crossing with exit 1") {
  TempDir tmp;
  const Run v = run({"verify", tmp.file("x.ppe", kCrossing)});
  CHECK(v.code == kExitFailure);
  CHECK(v.out == "plane (0,1) EDGE_CROSSING 0 2 1 3\n");
  const Run j = run({"verify", tmp.file("y.ppe", kCrossing), "--json"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["ok"] == false);
  CHECK(doc["failures"][0]["kind"] == "EDGE_CROSSING");
}

TEST_CASE("saturate and export-svg") {
  TempDir tmp;
  const std::string in = tmp.file("c.ppe");
  REQUIRE(run({"construct", "convex-points", "--n", "5", "--d", "2", "--out", in}).code == kExitOk);
  const std::string sat = tmp.file("s.ppe");
  const Run s = run({"saturate", in, "--plane", "0", "1", "--out", sat});
  CHECK(s.code == kExitOk);
  // Five points in convex position saturate to a triangulated pentagon.
  CHECK(s.out.rfind("7 edges added\n", 0) == 0);
  CHECK(read_ppe_file(sat).graph().edge_count() == 7);

  const Run svg = run({"export-svg", sat, "--plane", "0", "1"});
  CHECK(svg.code == kExitOk);
  CHECK(svg.out.find("<svg") != std::string::npos);
  CHECK(svg.out.find("</svg>") != std::string::npos);
  CHECK(run({"export-svg", sat, "--plane", "0", "2"}).code == kExitUsage);
  CHECK(run({"saturate", tmp.file("x.ppe", kCrossing), "--plane", "0", "1"}).code == kExitFailure);
}

TEST_CASE("bounds") {
  CHECK(run({"bounds", "kn-thickness", "9"}).out.rfind("3\n", 0) == 0);
  CHECK(run({"bounds", "two-plane-max", "14"}).out.rfind("69\n", 0) == 0);
  CHECK(run({"bounds", "kn-upper", "14"}).out.rfind("4\n", 0) == 0);
  const auto doc = nlohmann::json::parse(run({"bounds", "three-plane-max", "10", "--json"}).out);
  CHECK(doc["value"] == 66);
  CHECK(run({"bounds", "kn-upper", "0"}).code == kExitUsage);
  CHECK(run({"bounds", "nonsense", "4"}).code == kExitUsage);
}

TEST_CASE("usage errors exit 2") {
  TempDir tmp;
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"construct", "complete"}).code == kExitUsage);
  CHECK(run({"construct", "extremal", "--n", "13"}).code == kExitUsage);
  CHECK(run({"construct", "teapot", "--n", "5"}).code == kExitUsage);
  CHECK(run({"verify", tmp.file("missing.ppe")}).code == kExitUsage);
  CHECK(run({"verify", tmp.file("bad.ppe", "{not json")}).code == kExitUsage);
  CHECK(run({"construct", "from-forests", "--in", tmp.file("k5.txt", "5 10\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n"),
             "--k", "1"})
            .code == kExitFailure);
  const Run r = run({"construct", "planar-plus-paths", "--in",
                     tmp.file("k5b.txt", "5 10\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n")});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("not planar") != std::string::npos);
}

TEST_CASE("output is deterministic for a fixed seed") {
  TempDir tmp;
  const std::string g = tmp.file("g.txt", "7 9\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 0\n0 3\n2 5\n");
  std::string ppe[2], svg[2];
  for (int i = 0; i < 2; ++i) {
    const std::string out = tmp.file("run" + std::to_string(i) + ".ppe");
    const std::string pic = tmp.file("run" + std::to_string(i) + ".svg");
    REQUIRE(run({"--seed", "11", "construct", "from-forests", "--in", g, "--out", out}).code == kExitOk);
    REQUIRE(run({"export-svg", out, "--plane", "0", "1", "--out", pic}).code == kExitOk);
    ppe[i] = slurp(out);
    svg[i] = slurp(pic);
  }
  CHECK(ppe[0] == ppe[1]);
  CHECK(svg[0] == svg[1]);
}
