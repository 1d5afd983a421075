#include "planeproj/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "planeproj/bounds.hpp"
#include "planeproj/constructors.hpp"
#include "planeproj/error.hpp"
#include "planeproj/planar_drawing.hpp"
#include "planeproj/ppe.hpp"
#include "planeproj/saturate.hpp"
#include "planeproj/svg.hpp"
#include "planeproj/verify.hpp"

namespace planeproj {

namespace {

using Json = nlohmann::ordered_json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotVerified:
    case ErrorCode::kConstructionFailed:
    case ErrorCode::kFailedHeuristic:
      return kExitFailure;
    default:
      return kExitUsage;
  }
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  return read_edge_list(in);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kBadInput, "cannot write " + path);
  out << text;
}

Rational rational_from_json(const Json& j) {
  auto as_text = [](const Json& v) -> std::string {
    if (v.is_number_integer()) return v.dump();
    if (v.is_string()) return v.get<std::string>();
    throw Error(ErrorCode::kParseError, "expected integer, got " + v.dump());
  };
  try {
    if (j.is_array() && j.size() == 2) {
      mpq_class q(as_text(j[0]) + "/" + as_text(j[1]));
      if (q.get_den() == 0) throw Error(ErrorCode::kParseError, "zero denominator");
      return Rational(q);
    }
    return Rational(mpq_class(as_text(j)));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::kParseError, "bad number " + j.dump());
  }
}

// {"positions": [[x, y], ...], "layers": [[[u, v], ...], ...]}; numbers are
// integers or [num, den] pairs.
GeomThicknessLayout read_layout(const std::string& path) {
  Json doc;
  try {
    doc = Json::parse(read_text(path));
    GeomThicknessLayout layout;
    for (const Json& p : doc.at("positions")) {
      if (!p.is_array() || p.size() != 2) throw Error(ErrorCode::kParseError, "position must be [x, y]");
      layout.positions.push_back({rational_from_json(p[0]), rational_from_json(p[1])});
    }
    for (const Json& layer : doc.at("layers")) {
      std::vector<Edge> edges;
      for (const Json& e : layer) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
      layout.layers.push_back(std::move(edges));
    }
    return layout;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

std::string plane_text(PlanePair p) { return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")"; }

void print_summary(const PlaneProjection& pp, const std::string& out_path, bool json, std::ostream& out) {
  std::map<PlanePair, int> per_plane;
  for (const auto& [e, planes] : pp.assignment())
    for (const PlanePair& p : planes) ++per_plane[p];
  if (json) {
    Json doc;
    doc["dimension"] = pp.dimension();
    doc["vertices"] = pp.graph().vertex_count();
    doc["edges"] = pp.graph().edge_count();
    Json planes = Json::array();
    for (const auto& [p, c] : per_plane) planes.push_back({{"plane", {p.i, p.j}}, {"edges", c}});
    doc["planes"] = std::move(planes);
    if (!out_path.empty()) doc["out"] = out_path;
    out << doc.dump() << "\n";
    return;
  }
  out << "dimension " << pp.dimension() << "\n"
      << "vertices " << pp.graph().vertex_count() << "\n"
      << "edges " << pp.graph().edge_count() << "\n";
  for (const auto& [p, c] : per_plane) out << "plane " << plane_text(p) << " " << c << " edges\n";
  if (!out_path.empty()) out << "wrote " << out_path << "\n";
}

Json failure_json(const Failure& f) {
  Json j;
  j["plane"] = f.plane ? Json::array({f.plane->i, f.plane->j}) : Json(nullptr);
  j["kind"] = std::string(failure_kind_name(f.kind));
  j["witness"] = f.witness;
  return j;
}

struct Options {
  bool json = false;
  std::uint64_t seed = 0;
  // construct
  std::string kind;
  int n = 0;
  int d = 0;
  int k = 3;
  std::string in;
  std::string out;
  std::string mode = "guaranteed";
  std::string forest = "linear";
  std::string search = "exact";
  std::vector<std::string> path_files;
  std::string layout;
  // saturate / export-svg
  std::vector<int> plane;
  // bounds
  std::string query;
  std::int64_t value = 0;
};

PlaneProjection construct(const Options& o) {
  auto need_n = [&](int min_n) {
    if (o.n < min_n) throw Error(ErrorCode::kBadInput, "--n must be at least " + std::to_string(min_n));
  };
  if (o.kind == "complete") {
    need_n(3);
    return complete_graph_embedding(o.n);
  }
  if (o.kind == "extremal") {
    need_n(14);
    return extremal_two_plane(o.n);
  }
  if (o.kind == "convex-points") {
    need_n(3);
    return PlaneProjection(Graph(o.n), convex_projection_points(o.n, o.d));
  }
  if (o.kind == "from-forests") {
    if (o.in.empty()) throw Error(ErrorCode::kBadInput, "from-forests needs --in <edge list>");
    const Graph g = read_graph_file(o.in);
    const ForestKind kind = o.forest == "caterpillar" ? ForestKind::kCaterpillar : ForestKind::kLinear;
    const SearchMode search = o.search == "heuristic" ? SearchMode::kHeuristic : SearchMode::kExact;
    const auto parts = decompose_forests(g, o.k, kind, search);
    if (!parts) {
      throw Error(ErrorCode::kFailedHeuristic, "no decomposition into " + std::to_string(o.k) + " forests found");
    }
    const LiftMode mode = o.mode == "paper" ? LiftMode::kPaperPlanes : LiftMode::kGuaranteed;
    return forests_to_embedding(g, *parts, mode, {.seed = o.seed});
  }
  if (o.kind == "planar-plus-paths") {
    if (o.in.empty()) throw Error(ErrorCode::kBadInput, "planar-plus-paths needs --in <planar edge list>");
    PlanarDrawing planar{read_graph_file(o.in), {}};
    planar.positions = straight_line_planar_drawing(planar.graph);
    std::vector<Graph> paths;
    for (const std::string& f : o.path_files) paths.push_back(read_graph_file(f));
    return planar_plus_paths(planar, paths);
  }
  if (o.kind == "lift") {
    if (o.layout.empty()) throw Error(ErrorCode::kBadInput, "lift needs --layout <json>");
    return lift_geometric_thickness(read_layout(o.layout));
  }
  throw Error(ErrorCode::kBadInput, "unknown construction '" + o.kind + "'");
}

PlanePair plane_arg(const Options& o) {
  if (o.plane.size() != 2) throw Error(ErrorCode::kBadPlane, "--plane takes two axes");
  return {o.plane[0], o.plane[1]};
}

int cmd_construct(const Options& o, std::ostream& out) {
  const PlaneProjection pp = construct(o);
  if (!o.out.empty()) write_ppe_file(o.out, pp);
  print_summary(pp, o.out, o.json, out);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const VerificationReport r = verify(read_ppe_file(o.in));
  if (o.json) {
    Json doc;
    doc["ok"] = r.ok();
    Json fs = Json::array();
    for (const Failure& f : r.failures) fs.push_back(failure_json(f));
    doc["failures"] = std::move(fs);
    out << doc.dump() << "\n";
  } else if (r.ok()) {
    out << "OK\n";
  } else {
    for (const Failure& f : r.failures) {
      out << (f.plane ? "plane " + plane_text(*f.plane) : std::string("global")) << " "
          << failure_kind_name(f.kind);
      for (int w : f.witness) out << " " << w;
      out << "\n";
    }
  }
  return r.ok() ? kExitOk : kExitFailure;
}

int cmd_saturate(const Options& o, std::ostream& out) {
  const PlaneProjection pp = read_ppe_file(o.in);
  const PlanePair plane = plane_arg(o);
  const PlaneProjection sat = saturate(pp, plane);
  const int added = static_cast<int>(sat.edges_in(plane).size() - pp.edges_in(plane).size());
  if (!o.out.empty()) write_ppe_file(o.out, sat);
  if (o.json) {
    out << Json{{"plane", {plane.i, plane.j}}, {"added", added}, {"edges", sat.graph().edge_count()}}.dump()
        << "\n";
  } else {
    out << added << " edges added\n" << "edges " << sat.graph().edge_count() << "\n";
  }
  return kExitOk;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const BoundReport r = evaluate_bound(o.query, o.value);
  const char* kind = r.kind == BoundKind::kLower ? "lower" : r.kind == BoundKind::kUpper ? "upper" : "exact";
  if (o.json) {
    out << Json{{"query", o.query}, {"argument", o.value}, {"quantity", r.quantity},
                {"kind", kind}, {"value", r.value}, {"source", r.source}}
               .dump()
        << "\n";
  } else {
    out << r.value << "\n" << r.quantity << " (" << kind << "): " << r.source << "\n";
  }
  return kExitOk;
}

int cmd_export_svg(const Options& o, std::ostream& out) {
  const PlaneProjection pp = read_ppe_file(o.in);
  const PlanePair plane = plane_arg(o);
  const std::string svg = render_svg(pp, plane);
  if (o.out.empty()) {
    out << svg;
    return kExitOk;
  }
  write_text(o.out, svg);
  if (o.json) {
    out << Json{{"plane", {plane.i, plane.j}}, {"edges", pp.edges_in(plane).size()}, {"out", o.out}}.dump() << "\n";
  } else {
    out << "wrote " << o.out << " (" << pp.edges_in(plane).size() << " edges)\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Plane-projecting embeddings: construct, verify, saturate, bound, draw."};
  app.name("planeproj");
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_option("--seed", o.seed, "pseudo-random seed")->capture_default_str();

  CLI::App* construct_cmd = app.add_subcommand("construct", "build an embedding and write it as PPE");
  construct_cmd->add_option("kind", o.kind, "complete|extremal|convex-points|from-forests|planar-plus-paths|lift")
      ->required()
      ->check(CLI::IsMember({"complete", "extremal", "convex-points", "from-forests", "planar-plus-paths", "lift"}));
  construct_cmd->add_option("--n", o.n, "vertex count");
  construct_cmd->add_option("--d", o.d, "dimension (convex-points)");
  construct_cmd->add_option("--k", o.k, "number of forests (from-forests)")->capture_default_str();
  construct_cmd->add_option("--in", o.in, "edge-list input");
  construct_cmd->add_option("--path", o.path_files, "extra path edge list (planar-plus-paths, repeatable)");
  construct_cmd->add_option("--layout", o.layout, "geometric-thickness layout JSON (lift)");
  construct_cmd->add_option("--mode", o.mode, "guaranteed|paper")
      ->check(CLI::IsMember({"guaranteed", "paper"}))
      ->capture_default_str();
  construct_cmd->add_option("--forest", o.forest, "linear|caterpillar")
      ->check(CLI::IsMember({"linear", "caterpillar"}))
      ->capture_default_str();
  construct_cmd->add_option("--search", o.search, "exact|heuristic")
      ->check(CLI::IsMember({"exact", "heuristic"}))
      ->capture_default_str();
  construct_cmd->add_option("--out", o.out, "output PPE path");

  CLI::App* verify_cmd = app.add_subcommand("verify", "check a PPE file");
  verify_cmd->add_option("in", o.in, "PPE file")->required();

  CLI::App* saturate_cmd = app.add_subcommand("saturate", "add non-crossing edges to one plane");
  saturate_cmd->add_option("in", o.in, "PPE file")->required();
  saturate_cmd->add_option("--plane", o.plane, "axes i j")->required()->expected(2);
  saturate_cmd->add_option("--out", o.out, "output PPE path");

  CLI::App* bounds_cmd = app.add_subcommand("bounds", "evaluate a closed-form bound");
  bounds_cmd->add_option("query", o.query,
                         "kn-upper|kn-lower|kn-thickness|two-plane-max|three-plane-max|from-thickness|"
                         "from-geom-thickness|from-max-degree")
      ->required();
  bounds_cmd->add_option("value", o.value, "argument")->required();

  CLI::App* svg_cmd = app.add_subcommand("export-svg", "draw one plane as SVG");
  svg_cmd->add_option("in", o.in, "PPE file")->required();
  svg_cmd->add_option("--plane", o.plane, "axes i j")->required()->expected(2);
  svg_cmd->add_option("--out", o.out, "output SVG path (stdout if omitted)");

  // Global flags are accepted after the subcommand too.
  for (CLI::App* sub : {construct_cmd, verify_cmd, saturate_cmd, bounds_cmd, svg_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (construct_cmd->parsed()) return cmd_construct(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (saturate_cmd->parsed()) return cmd_saturate(o, out);
    if (bounds_cmd->parsed()) return cmd_bounds(o, out);
    return cmd_export_svg(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace planeproj
