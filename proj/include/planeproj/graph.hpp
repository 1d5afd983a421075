#pragma once

#include <compare>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace planeproj {

/// Unordered vertex pair, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Adds {u,v}; returns false if it was already present. Throws BAD_INPUT on
  /// loops or out-of-range ids.
  bool add_edge(int u, int v);
  bool remove_edge(int u, int v);
  bool has_edge(int u, int v) const;

  /// Appends an isolated vertex and returns its id.
  int add_vertex();

  const std::set<Edge>& edges() const { return edges_; }
  const std::set<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  int max_degree() const;

  /// Connected components, each sorted, ordered by smallest member.
  std::vector<std::vector<int>> components() const;

  /// Subgraph on `vertices` relabelled 0..k-1 in the given order.
  Graph induced(const std::vector<int>& vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::set<Edge> edges_;
  std::vector<std::set<int>> adj_;
};

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

/// Every component is a path: max degree <= 2 and acyclic.
bool is_linear_forest(const Graph& g);

/// Every component is a caterpillar: acyclic, and stripping all leaves
/// leaves a path or nothing.
bool is_caterpillar_forest(const Graph& g);

/// Spine of the caterpillar component containing `vertices` (sorted, must
/// form one tree). Non-leaf vertices form a path; when the component's
/// lowest-id vertex can start a spine the spine begins there. Empty when the
/// component is not a caterpillar.
std::vector<int> caterpillar_spine(const Graph& g, const std::vector<int>& component);

/// Edge-list text: "n m" then m lines "u v", 0-based, LF endings.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace planeproj
