#include <algorithm>
#include <set>

#include "gate.hpp"
#include "planeproj/constructors.hpp"

namespace planeproj {

namespace {

void require_distinct(const std::vector<Rational>& y, const std::vector<int>& vertices) {
  std::set<Rational> seen;
  for (int v : vertices) {
    if (!seen.insert(y[v]).second) {
      throw Error(ErrorCode::kTiedCoordinates, "two vertices share y = " + y[v].str());
    }
  }
}

bool valid_spine(const Graph& g, const std::vector<int>& component, const std::vector<int>& spine) {
  if (spine.empty()) return false;
  std::set<int> on_spine(spine.begin(), spine.end());
  if (on_spine.size() != spine.size()) return false;
  const std::set<int> members(component.begin(), component.end());
  for (std::size_t i = 0; i < spine.size(); ++i) {
    if (!members.count(spine[i])) return false;
    if (i + 1 < spine.size() && !g.has_edge(spine[i], spine[i + 1])) return false;
  }
  for (int v : component) {
    if (on_spine.count(v)) continue;
    if (g.degree(v) != 1 || !on_spine.count(*g.neighbors(v).begin())) return false;
  }
  return true;
}

// Writes x for one caterpillar component starting at `offset`; returns the
// largest x used relative to the offset.
int place_component(const Graph& g, const std::vector<int>& spine, const Rational& offset,
                    std::vector<Rational>& x) {
  std::vector<int> index(g.vertex_count(), 0);
  for (std::size_t i = 0; i < spine.size(); ++i) index[spine[i]] = static_cast<int>(i) + 1;
  int width = static_cast<int>(spine.size());
  for (std::size_t i = 0; i < spine.size(); ++i) {
    const int w = spine[i];
    x[w] = offset + Rational(static_cast<std::int64_t>(i) + 1);
    for (int leaf : g.neighbors(w)) {
      if (index[leaf] != 0) continue;
      x[leaf] = offset + Rational(static_cast<std::int64_t>(i) + 2);
      width = std::max(width, static_cast<int>(i) + 2);
    }
  }
  return width;
}

std::vector<Edge> edge_vector(const Graph& g) { return {g.edges().begin(), g.edges().end()}; }

void gate_drawing(const Graph& g, const std::vector<Rational>& x, const std::vector<Rational>& y,
                  const char* who) {
  std::vector<Point2> pts;
  for (int v = 0; v < g.vertex_count(); ++v) pts.push_back({x[v], y[v]});
  const std::vector<Edge> edges = edge_vector(g);
  const VerificationReport r = verify_drawing(pts, edges);
  if (!r.ok()) {
    throw Error(ErrorCode::kConstructionFailed, std::string(who) + ": " + detail::describe(r.failures.front()));
  }
}

}  // namespace

std::vector<Rational> caterpillar_x_coords(const CaterpillarLayoutRequest& req) {
  const Graph& g = req.caterpillar;
  const int n = g.vertex_count();
  if (n < 1) throw Error(ErrorCode::kBadInput, "empty caterpillar");
  if (static_cast<int>(req.y.size()) != n) throw Error(ErrorCode::kBadInput, "need one y per vertex");
  const auto comps = g.components();
  if (comps.size() != 1 || !is_caterpillar_forest(g)) {
    throw Error(ErrorCode::kNotACaterpillar, "input is not a single caterpillar");
  }
  require_distinct(req.y, comps[0]);

  std::vector<int> spine = req.spine;
  if (spine.empty()) {
    spine = caterpillar_spine(g, comps[0]);
  } else if (!valid_spine(g, comps[0], spine)) {
    throw Error(ErrorCode::kNotACaterpillar, "given spine does not dominate the caterpillar");
  }

  std::vector<Rational> x(n);
  place_component(g, spine, Rational(0), x);
  gate_drawing(g, x, req.y, "caterpillar_x_coords");
  return x;
}

std::vector<Rational> forest_x_coords(const Graph& forest, const std::vector<Rational>& y) {
  const int n = forest.vertex_count();
  if (static_cast<int>(y.size()) != n) throw Error(ErrorCode::kBadInput, "need one y per vertex");
  if (!is_caterpillar_forest(forest)) throw Error(ErrorCode::kNotACaterpillar, "not a caterpillar forest");
  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  require_distinct(y, all);

  std::vector<Rational> x(n);
  std::int64_t offset = 0;
  for (const auto& comp : forest.components()) {
    const std::vector<int> spine = caterpillar_spine(forest, comp);
    // One empty column between strips keeps them strictly apart.
    offset += place_component(forest, spine, Rational(offset), x) + 1;
  }
  gate_drawing(forest, x, y, "forest_x_coords");
  return x;
}

std::vector<Rational> cycle_x_coords(const std::vector<int>& cycle_order, const std::vector<Rational>& y) {
  const int n = static_cast<int>(cycle_order.size());
  if (n < 3) throw Error(ErrorCode::kBadInput, "cycle needs at least three vertices");
  if (static_cast<int>(y.size()) != n) throw Error(ErrorCode::kBadInput, "need one y per vertex");
  std::vector<char> seen(n, 0);
  for (int v : cycle_order) {
    if (v < 0 || v >= n || seen[v]) throw Error(ErrorCode::kBadInput, "cycle order must be a permutation");
    seen[v] = 1;
  }
  require_distinct(y, cycle_order);

  // v[0] is the lowest vertex; the cycle direction is kept.
  const auto low = std::min_element(cycle_order.begin(), cycle_order.end(),
                                    [&](int a, int b) { return y[a] < y[b]; });
  std::vector<int> v(low, cycle_order.end());
  v.insert(v.end(), cycle_order.begin(), low);

  Graph path(n);
  for (int i = 0; i + 2 < n; ++i) path.add_edge(v[i], v[i + 1]);
  std::vector<Rational> x(n);
  for (int i = 0; i + 1 < n; ++i) x[v[i]] = Rational(i + 1);

  // m = min slope from v1 to the other path vertices (all positive).
  const Rational& y1 = y[v[0]];
  Rational m = y[v[1]] - y1;
  for (int i = 2; i + 1 < n; ++i) m = std::min(m, (y[v[i]] - y1) / Rational(i));
  const Rational rise = y[v[n - 1]] - y1;
  Rational xn = Rational(1) + rise / (m / Rational(2));
  if (xn <= Rational(n - 1)) {
    // Slope rise/(n-1) is still below m and lands v_n at x = n.
    xn = Rational(n);
  }
  x[v[n - 1]] = xn;

  Graph cycle = path;
  cycle.add_edge(v[n - 2], v[n - 1]);
  cycle.add_edge(v[n - 1], v[0]);
  gate_drawing(cycle, x, y, "cycle_x_coords");
  return x;
}

}  // namespace planeproj
