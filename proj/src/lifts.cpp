#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "gate.hpp"
#include "planeproj/bounds.hpp"
#include "planeproj/constructors.hpp"

namespace planeproj {

namespace {

Graph part_graph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

// Forest parts[order[i]] in plane (0, i+1) against shared axis-0 values.
// Returns the coordinate rows (axis 0 first, then one axis per forest).
std::vector<std::vector<Rational>> forest_axes(int n, const std::vector<std::vector<Edge>>& parts,
                                               const std::vector<int>& order,
                                               const std::vector<Rational>& shared) {
  std::vector<std::vector<Rational>> rows(n);
  for (int v = 0; v < n; ++v) rows[v].push_back(shared[v]);
  for (int idx : order) {
    const std::vector<Rational> x = forest_x_coords(part_graph(n, parts[idx]), shared);
    for (int v = 0; v < n; ++v) rows[v].push_back(x[v]);
  }
  return rows;
}

PlaneProjection guaranteed_lift(const Graph& g, const ForestDecomposition& forests) {
  const int n = g.vertex_count();
  const int k = static_cast<int>(forests.parts.size());
  std::vector<Rational> shared;
  for (int v = 0; v < n; ++v) shared.emplace_back(v);
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  PlaneProjection pp(Graph(n), Embedding(k + 1, forest_axes(n, forests.parts, order, shared)));
  for (int i = 0; i < k; ++i)
    for (const Edge& e : forests.parts[i]) pp.assign(e, {0, i + 1});
  return detail::gated(std::move(pp), "forests_to_embedding");
}

}  // namespace

PlaneProjection forests_to_embedding(const Graph& g, const ForestDecomposition& forests, LiftMode mode,
                                     const LiftOptions& options) {
  if (forests.parts.empty() || !is_valid_decomposition(g, forests)) {
    throw Error(ErrorCode::kBadDecomposition, "parts do not decompose the graph into forests of that kind");
  }
  const int n = g.vertex_count();
  if (n < 1) throw Error(ErrorCode::kBadDecomposition, "empty graph");
  const int k = static_cast<int>(forests.parts.size());
  if (mode == LiftMode::kGuaranteed || k <= 2) return guaranteed_lift(g, forests);

  std::mt19937_64 rng(options.seed);
  std::vector<int> vertex_order(n), forest_order(k);
  std::iota(vertex_order.begin(), vertex_order.end(), 0);
  std::iota(forest_order.begin(), forest_order.end(), 0);
  for (int attempt = 0; attempt < options.retries; ++attempt) {
    if (attempt > 0) {
      std::shuffle(vertex_order.begin(), vertex_order.end(), rng);
      std::shuffle(forest_order.begin(), forest_order.end(), rng);
    }
    std::vector<Rational> shared(n);
    for (int v = 0; v < n; ++v) shared[v] = Rational(vertex_order[v]);
    const std::vector<int> first(forest_order.begin(), forest_order.end() - 1);
    const int last = forest_order.back();
    std::vector<std::vector<Rational>> rows = forest_axes(n, forests.parts, first, shared);

    // The last forest gets no free axis: it must already be planar in (1,2).
    std::vector<Point2> pts;
    for (int v = 0; v < n; ++v) pts.push_back({rows[v][1], rows[v][2]});
    if (!verify_drawing(pts, forests.parts[last], {1, 2}).ok()) continue;

    PlaneProjection pp(Graph(n), Embedding(k, std::move(rows)));
    for (int i = 0; i + 1 < k; ++i)
      for (const Edge& e : forests.parts[first[i]]) pp.assign(e, {0, i + 1});
    for (const Edge& e : forests.parts[last]) pp.assign(e, {1, 2});
    if (verify(pp).ok()) return pp;
  }
  throw Error(ErrorCode::kFailedHeuristic,
              "no planar placement of the last forest in " + std::to_string(options.retries) + " attempts");
}

PlaneProjection planar_plus_paths(const PlanarDrawing& planar, const std::vector<Graph>& paths) {
  const Graph& g = planar.graph;
  const int n = g.vertex_count();
  if (static_cast<int>(planar.positions.size()) != n) {
    throw Error(ErrorCode::kBadPlanarInput, "need one position per vertex");
  }
  const std::vector<Edge> planar_edges(g.edges().begin(), g.edges().end());
  if (n < 1 || !verify_drawing(planar.positions, planar_edges).ok()) {
    throw Error(ErrorCode::kBadPlanarInput, "planar part is not a crossing-free straight-line drawing");
  }
  std::set<Edge> used(planar_edges.begin(), planar_edges.end());
  for (const Graph& p : paths) {
    if (p.vertex_count() != n) throw Error(ErrorCode::kBadInput, "path graph must share the vertex set");
    if (!is_caterpillar_forest(p)) throw Error(ErrorCode::kBadInput, "extra part is not a path/caterpillar forest");
    for (const Edge& e : p.edges()) {
      if (!used.insert(e).second) throw Error(ErrorCode::kBadInput, "extra parts must be edge-disjoint");
    }
  }

  std::vector<Rational> axis0;
  if (paths.empty()) {
    for (const Point2& q : planar.positions) axis0.push_back(q.x);
  } else {
    Rational eps(1);
    for (int t = 0;; ++t, eps /= Rational(2)) {
      if (t > 256) throw Error(ErrorCode::kConstructionFailed, "no shear separates axis 0");
      axis0.clear();
      for (const Point2& q : planar.positions) axis0.push_back(q.x + eps * q.y);
      if (std::set<Rational>(axis0.begin(), axis0.end()).size() == axis0.size()) break;
    }
  }

  const int d = static_cast<int>(paths.size());
  std::vector<std::vector<Rational>> rows(n);
  for (int v = 0; v < n; ++v) rows[v] = {axis0[v], planar.positions[v].y};
  for (const Graph& p : paths) {
    const std::vector<Rational> x = forest_x_coords(p, axis0);
    for (int v = 0; v < n; ++v) rows[v].push_back(x[v]);
  }
  PlaneProjection pp(Graph(n), Embedding(d + 2, std::move(rows)));
  for (const Edge& e : planar_edges) pp.assign(e, {0, 1});
  for (int i = 0; i < d; ++i)
    for (const Edge& e : paths[i].edges()) pp.assign(e, {0, i + 2});
  return detail::gated(std::move(pp), "planar_plus_paths");
}

PlaneProjection lift_geometric_thickness(const GeomThicknessLayout& layout) {
  const int n = static_cast<int>(layout.positions.size());
  const int s = static_cast<int>(layout.layers.size());
  if (n < 1 || s < 1) throw Error(ErrorCode::kBadInput, "layout needs vertices and at least one layer");
  if (std::set<Point2>(layout.positions.begin(), layout.positions.end()).size() != layout.positions.size()) {
    throw Error(ErrorCode::kBadLayer, "two vertices share a position");
  }
  for (int l = 0; l < s; ++l) {
    for (const Edge& e : layout.layers[l]) {
      if (e.u < 0 || e.v >= n || e.u == e.v) throw Error(ErrorCode::kBadLayer, "layer edge out of range");
    }
    if (!verify_drawing(layout.positions, layout.layers[l]).ok()) {
      throw Error(ErrorCode::kBadLayer, "layer " + std::to_string(l) + " is not crossing-free");
    }
  }

  const int k = static_cast<int>(ceil_sqrt(s));
  std::vector<std::vector<Rational>> rows(n);
  for (int v = 0; v < n; ++v) {
    rows[v].assign(k, layout.positions[v].x);
    rows[v].insert(rows[v].end(), k, layout.positions[v].y);
  }
  PlaneProjection pp(Graph(n), Embedding(2 * k, std::move(rows)));
  for (int l = 0; l < s; ++l)
    for (const Edge& e : layout.layers[l]) pp.assign(e, {l / k, k + l % k});
  return detail::gated(std::move(pp), "lift_geometric_thickness");
}

}  // namespace planeproj
