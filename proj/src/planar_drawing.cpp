#include "planeproj/planar_drawing.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/chrobak_payne_drawing.hpp>
#include <boost/graph/make_biconnected_planar.hpp>
#include <boost/graph/make_connected.hpp>
#include <boost/graph/make_maximal_planar.hpp>
#include <boost/graph/planar_canonical_ordering.hpp>
#include <map>

#include "gate.hpp"

namespace planeproj {

namespace {

using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                     boost::property<boost::vertex_index_t, int>,
                                     boost::property<boost::edge_index_t, int>>;
using BEdge = boost::graph_traits<BGraph>::edge_descriptor;
using BVertex = boost::graph_traits<BGraph>::vertex_descriptor;
using EmbeddingStorage = std::vector<std::vector<BEdge>>;

struct GridPoint {
  std::size_t x = 0;
  std::size_t y = 0;
};

BGraph to_boost(const Graph& g) {
  BGraph bg(g.vertex_count());
  for (const Edge& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  return bg;
}

void reindex_edges(BGraph& bg) {
  auto index = boost::get(boost::edge_index, bg);
  int i = 0;
  for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(index, *it, i++);
}

bool embed(BGraph& bg, EmbeddingStorage& storage) {
  reindex_edges(bg);
  storage.assign(boost::num_vertices(bg), {});
  return boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                             boost::boyer_myrvold_params::embedding = &storage[0]);
}

}  // namespace

std::optional<RotationSystem> planar_rotation_system(const Graph& g) {
  BGraph bg = to_boost(g);
  EmbeddingStorage storage;
  if (g.vertex_count() == 0) return RotationSystem{};
  if (!embed(bg, storage)) return std::nullopt;
  RotationSystem rot(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (const BEdge& e : storage[v]) {
      const int s = static_cast<int>(boost::source(e, bg));
      const int t = static_cast<int>(boost::target(e, bg));
      rot[v].push_back(s == v ? t : s);
    }
  }
  return rot;
}

bool is_planar_rotation_system(const Graph& g, const RotationSystem& rot) {
  const int n = g.vertex_count();
  if (static_cast<int>(rot.size()) != n) return false;
  std::vector<std::map<int, int>> pos(n);
  for (int v = 0; v < n; ++v) {
    if (static_cast<int>(rot[v].size()) != g.degree(v)) return false;
    for (int i = 0; i < static_cast<int>(rot[v].size()); ++i) {
      const int u = rot[v][i];
      if (u < 0 || u >= n || !g.has_edge(u, v) || !pos[v].emplace(u, i).second) return false;
    }
  }
  // Trace faces: after arriving at v from u, leave along the successor of u.
  std::map<std::pair<int, int>, bool> seen;
  long faces = 0;
  for (int u = 0; u < n; ++u) {
    for (int v : rot[u]) {
      if (seen[{u, v}]) continue;
      ++faces;
      int a = u, b = v;
      while (!seen[{a, b}]) {
        seen[{a, b}] = true;
        const auto& around = rot[b];
        const int next = around[(pos[b].at(a) + 1) % around.size()];
        a = b;
        b = next;
      }
    }
  }
  long vertices = 0, comps = 0;
  for (const auto& c : g.components()) {
    if (c.size() > 1) {
      vertices += static_cast<long>(c.size());
      ++comps;
    }
  }
  return vertices - g.edge_count() + faces == 2 * comps;
}

std::vector<Point2> straight_line_planar_drawing(const Graph& g, const RotationSystem& rot) {
  if (!is_planar_rotation_system(g, rot)) {
    throw Error(ErrorCode::kNotPlanar, "rotation system is not a planar embedding of the graph");
  }
  const int n = g.vertex_count();
  std::vector<Point2> out;
  if (n < 3) {
    for (int v = 0; v < n; ++v) out.push_back({Rational(v), Rational(0)});
    return out;
  }

  // The certificate is checked above; Boost re-embeds after each
  // augmentation step since added edges invalidate any given rotation.
  BGraph bg = to_boost(g);
  EmbeddingStorage storage;
  reindex_edges(bg);
  boost::make_connected(bg);
  if (!embed(bg, storage)) throw Error(ErrorCode::kNotPlanar, "graph is not planar");
  auto emap = [&] {
    return boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, bg));
  };
  boost::make_biconnected_planar(bg, emap());
  if (!embed(bg, storage)) throw Error(ErrorCode::kConstructionFailed, "biconnected augmentation lost planarity");
  boost::make_maximal_planar(bg, emap());
  if (!embed(bg, storage)) throw Error(ErrorCode::kConstructionFailed, "triangulation lost planarity");

  std::vector<BVertex> ordering;
  boost::planar_canonical_ordering(bg, emap(), std::back_inserter(ordering));
  std::vector<GridPoint> grid(n);
  boost::chrobak_payne_straight_line_drawing(
      bg, emap(), ordering.begin(), ordering.end(),
      boost::make_iterator_property_map(grid.begin(), boost::get(boost::vertex_index, bg)));

  for (const GridPoint& p : grid) {
    out.push_back({Rational(static_cast<std::int64_t>(p.x)), Rational(static_cast<std::int64_t>(p.y))});
  }
  const std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  const VerificationReport r = verify_drawing(out, edges);
  if (!r.ok()) {
    throw Error(ErrorCode::kConstructionFailed, "shift drawing: " + detail::describe(r.failures.front()));
  }
  return out;
}

std::vector<Point2> straight_line_planar_drawing(const Graph& g) {
  const auto rot = planar_rotation_system(g);
  if (!rot) throw Error(ErrorCode::kNotPlanar, "graph is not planar");
  return straight_line_planar_drawing(g, *rot);
}

}  // namespace planeproj
