#include "planeproj/decomposition.hpp"

#include <algorithm>
#include <set>

#include "planeproj/error.hpp"

namespace planeproj {

namespace {

bool connected_in(const Graph& g, int from, int to) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return false;
}

std::vector<int> component_of(const Graph& g, int start) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> stack{start};
  std::vector<int> out;
  seen[start] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Would adding e keep `part` a forest of `kind`? Leaves `part` unchanged.
bool fits(Graph& part, const Edge& e, ForestKind kind) {
  if (kind == ForestKind::kLinear) {
    if (part.degree(e.u) >= 2 || part.degree(e.v) >= 2) return false;
    return !connected_in(part, e.u, e.v);
  }
  if (connected_in(part, e.u, e.v)) return false;
  part.add_edge(e.u, e.v);
  const bool ok = !caterpillar_spine(part, component_of(part, e.u)).empty();
  part.remove_edge(e.u, e.v);
  return ok;
}

class ExactSearch {
 public:
  ExactSearch(const Graph& g, int k, ForestKind kind)
      : edges_(g.edges().begin(), g.edges().end()), kind_(kind),
        parts_(k, Graph(g.vertex_count())), owner_(edges_.size(), -1) {}

  bool run() { return assign(0, 0); }

  ForestDecomposition result() const {
    ForestDecomposition d;
    d.kind = kind_;
    d.parts.assign(parts_.size(), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) d.parts[owner_[i]].push_back(edges_[i]);
    return d;
  }

 private:
  bool assign(std::size_t index, int opened) {
    if (index == edges_.size()) return true;
    const Edge& e = edges_[index];
    const int limit = std::min(opened + 1, static_cast<int>(parts_.size()));
    for (int p = 0; p < limit; ++p) {
      if (!fits(parts_[p], e, kind_)) continue;
      parts_[p].add_edge(e.u, e.v);
      owner_[index] = p;
      if (assign(index + 1, std::max(opened, p + 1))) return true;
      parts_[p].remove_edge(e.u, e.v);
    }
    owner_[index] = -1;
    return false;
  }

  std::vector<Edge> edges_;
  ForestKind kind_;
  std::vector<Graph> parts_;
  std::vector<int> owner_;
};

std::optional<ForestDecomposition> heuristic(const Graph& g, int k, ForestKind kind) {
  std::vector<Edge> order(g.edges().begin(), g.edges().end());
  std::stable_sort(order.begin(), order.end(), [&](const Edge& a, const Edge& b) {
    return g.degree(a.u) + g.degree(a.v) > g.degree(b.u) + g.degree(b.v);
  });

  std::vector<Graph> parts(k, Graph(g.vertex_count()));
  for (const Edge& e : order) {
    bool placed = false;
    for (int p = 0; p < k && !placed; ++p) {
      if (fits(parts[p], e, kind)) {
        parts[p].add_edge(e.u, e.v);
        placed = true;
      }
    }
    // Exchange repair: evict a neighbouring edge f from part p so e fits
    // there, provided f fits in some other part.
    for (int p = 0; p < k && !placed; ++p) {
      std::vector<Edge> blockers;
      for (const Edge& f : parts[p].edges()) {
        if (f.u == e.u || f.u == e.v || f.v == e.u || f.v == e.v) blockers.push_back(f);
      }
      for (const Edge& f : blockers) {
        parts[p].remove_edge(f.u, f.v);
        if (fits(parts[p], e, kind)) {
          for (int q = 0; q < k; ++q) {
            if (q != p && fits(parts[q], f, kind)) {
              parts[q].add_edge(f.u, f.v);
              parts[p].add_edge(e.u, e.v);
              placed = true;
              break;
            }
          }
        }
        if (placed) break;
        parts[p].add_edge(f.u, f.v);
      }
    }
    if (!placed) return std::nullopt;
  }

  ForestDecomposition d;
  d.kind = kind;
  for (const Graph& part : parts) d.parts.emplace_back(part.edges().begin(), part.edges().end());
  return d;
}

}  // namespace

std::optional<ForestDecomposition> decompose_forests(const Graph& g, int k, ForestKind kind,
                                                     SearchMode mode,
                                                     const DecomposeOptions& options) {
  if (k < 1) throw Error(ErrorCode::kBadInput, "k must be at least 1");
  if (mode == SearchMode::kHeuristic) return heuristic(g, k, kind);

  if (g.edge_count() > options.exact_edge_budget) {
    throw Error(ErrorCode::kTooLargeForExact,
                std::to_string(g.edge_count()) + " edges exceed budget " +
                    std::to_string(options.exact_edge_budget));
  }
  // A linear forest part holds at most two edges per vertex.
  if (kind == ForestKind::kLinear && g.max_degree() > 2 * k) return std::nullopt;

  ExactSearch search(g, k, kind);
  if (!search.run()) return std::nullopt;
  return search.result();
}

bool is_valid_decomposition(const Graph& g, const ForestDecomposition& d) {
  std::set<Edge> seen;
  for (const auto& part : d.parts) {
    Graph pg(g.vertex_count());
    for (const Edge& e : part) {
      if (!g.has_edge(e.u, e.v) || !seen.insert(Edge(e.u, e.v)).second) return false;
      pg.add_edge(e.u, e.v);
    }
    const bool ok = d.kind == ForestKind::kLinear ? is_linear_forest(pg) : is_caterpillar_forest(pg);
    if (!ok) return false;
  }
  return static_cast<int>(seen.size()) == g.edge_count();
}

std::vector<std::vector<int>> hamiltonian_path_decomposition(int m) {
  if (m < 1) throw Error(ErrorCode::kBadInput, "m must be at least 1");
  const int n = 2 * m;
  std::vector<std::vector<int>> paths;
  for (int j = 0; j < m; ++j) {
    std::vector<int> path;
    for (int t = 0; t < n; ++t) {
      const int offset = (t % 2 == 1) ? (t + 1) / 2 : -(t / 2);
      path.push_back(((j + offset) % n + n) % n);
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

}  // namespace planeproj
