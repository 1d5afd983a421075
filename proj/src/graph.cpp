#include "planeproj/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "planeproj/error.hpp"

namespace planeproj {

Graph::Graph(int n) : n_(n), adj_(n) {
  if (n < 0) throw Error(ErrorCode::kBadInput, "negative vertex count");
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw Error(ErrorCode::kBadInput, "vertex id " + std::to_string(v) + " out of range");
  }
}

bool Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorCode::kBadInput, "self-loop at " + std::to_string(u));
  if (!edges_.insert(Edge(u, v)).second) return false;
  adj_[u].insert(v);
  adj_[v].insert(u);
  return true;
}

bool Graph::remove_edge(int u, int v) {
  if (edges_.erase(Edge(u, v)) == 0) return false;
  adj_[u].erase(v);
  adj_[v].erase(u);
  return true;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return adj_[u].count(v) != 0;
}

int Graph::add_vertex() {
  adj_.emplace_back();
  return n_++;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& nb : adj_) best = std::max(best, static_cast<int>(nb.size()));
  return best;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<int> comp(n_, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n_; ++s) {
    if (comp[s] != -1) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int w : adj_[v]) {
        if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
  std::vector<int> index(n_, -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) index[vertices[i]] = i;
  Graph sub(static_cast<int>(vertices.size()));
  for (const Edge& e : edges_) {
    if (index[e.u] >= 0 && index[e.v] >= 0) sub.add_edge(index[e.u], index[e.v]);
  }
  return sub;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

namespace {

bool is_acyclic(const Graph& g) {
  return g.edge_count() == g.vertex_count() - static_cast<int>(g.components().size());
}

// Walks the path induced on `members` starting at one of its ends.
std::vector<int> walk_path(const Graph& g, const std::set<int>& members, int start) {
  std::vector<int> order{start};
  int prev = -1;
  int cur = start;
  while (true) {
    int next = -1;
    for (int w : g.neighbors(cur)) {
      if (w != prev && members.count(w)) {
        next = w;
        break;
      }
    }
    if (next == -1) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

}  // namespace

bool is_linear_forest(const Graph& g) {
  return g.max_degree() <= 2 && is_acyclic(g);
}

std::vector<int> caterpillar_spine(const Graph& g, const std::vector<int>& component) {
  if (component.empty()) return {};
  if (component.size() == 1) return {component.front()};
  if (component.size() == 2) return {component[0], component[1]};

  std::set<int> inner;
  for (int v : component) {
    if (g.degree(v) >= 2) inner.insert(v);
  }
  std::vector<int> ends;
  for (int v : inner) {
    int d = 0;
    for (int w : g.neighbors(v)) d += static_cast<int>(inner.count(w));
    if (d > 2) return {};
    if (d <= 1) ends.push_back(v);
  }
  if (inner.size() == 1) ends.push_back(*inner.begin());
  if (ends.size() != 2) return {};

  // Leaves hanging off the first spine vertex may be prepended to the spine.
  const int v0 = component.front();
  int first = ends[0];
  bool prepend = false;
  if (v0 == ends[0] || v0 == ends[1]) {
    first = v0;
  } else if (!inner.count(v0)) {
    const int attach = *g.neighbors(v0).begin();
    if (attach == ends[0] || attach == ends[1]) {
      first = attach;
      prepend = true;
    }
  }
  std::vector<int> path = walk_path(g, inner, first);
  if (path.size() != inner.size()) return {};
  if (!prepend) return path;
  std::vector<int> spine{v0};
  spine.insert(spine.end(), path.begin(), path.end());
  return spine;
}

bool is_caterpillar_forest(const Graph& g) {
  if (!is_acyclic(g)) return false;
  for (const auto& comp : g.components()) {
    if (caterpillar_spine(g, comp).empty()) return false;
  }
  return true;
}

Graph read_edge_list(std::istream& in) {
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) throw Error(ErrorCode::kParseError, "bad edge-list header");
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) throw Error(ErrorCode::kParseError, "truncated edge list");
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw Error(ErrorCode::kParseError, "invalid edge " + std::to_string(u) + " " + std::to_string(v));
    }
    if (!g.add_edge(static_cast<int>(u), static_cast<int>(v))) {
      throw Error(ErrorCode::kParseError, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
  }
  return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace planeproj
