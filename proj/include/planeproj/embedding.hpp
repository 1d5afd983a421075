#pragma once

#include <map>
#include <set>
#include <vector>

#include "planeproj/geometry.hpp"
#include "planeproj/graph.hpp"
#include "planeproj/rational.hpp"

namespace planeproj {

/// Coordinate plane spanned by the retained axes i < j.
struct PlanePair {
  int i = 0;
  int j = 1;

  bool valid_for(int dimension) const { return 0 <= i && i < j && j < dimension; }

  friend bool operator==(const PlanePair&, const PlanePair&) = default;
  friend auto operator<=>(const PlanePair&, const PlanePair&) = default;
};

/// Injective placement of vertices 0..n-1 in R^d, d >= 2.
class Embedding {
 public:
  Embedding() = default;
  /// Throws BAD_INPUT on dimension < 2, ragged rows or two vertices sharing
  /// all coordinates.
  Embedding(int dimension, std::vector<std::vector<Rational>> coords);

  int dimension() const { return dimension_; }
  int vertex_count() const { return static_cast<int>(coords_.size()); }
  const std::vector<Rational>& coords(int v) const { return coords_.at(v); }
  const std::vector<std::vector<Rational>>& rows() const { return coords_; }

  /// Appends a vertex; throws BAD_INPUT if it duplicates an existing one.
  int add_vertex(std::vector<Rational> coords);

  friend bool operator==(const Embedding&, const Embedding&) = default;

 private:
  int dimension_ = 2;
  std::vector<std::vector<Rational>> coords_;
};

/// Image of every vertex in the given plane. Throws BAD_PLANE when the
/// plane is not valid for the embedding's dimension.
std::vector<Point2> project(const Embedding& e, PlanePair plane);

/// Graph + embedding + set-valued edge-to-plane assignment. Edges may be
/// shared by several planes; an edge missing from the assignment is
/// uncovered (reported by verify, not rejected here).
class PlaneProjection {
 public:
  PlaneProjection() = default;
  /// Throws BAD_INPUT when graph and embedding disagree on vertex count.
  PlaneProjection(Graph graph, Embedding embedding);

  const Graph& graph() const { return graph_; }
  const Embedding& embedding() const { return embedding_; }
  int dimension() const { return embedding_.dimension(); }

  /// Adds the edge to the graph if needed and assigns it to `plane`.
  void assign(Edge e, PlanePair plane);
  /// Adds a graph edge without assigning it to any plane.
  void add_unassigned_edge(Edge e);
  /// Appends a vertex to graph and embedding; returns its id.
  int add_vertex(std::vector<Rational> coords);

  const std::map<Edge, std::set<PlanePair>>& assignment() const { return assignment_; }
  const std::set<PlanePair>* planes_of(Edge e) const;

  /// Planes carrying at least one edge, ascending.
  std::set<PlanePair> used_planes() const;
  /// Edges assigned to `plane`, ascending.
  std::vector<Edge> edges_in(PlanePair plane) const;

  friend bool operator==(const PlaneProjection&, const PlaneProjection&) = default;

 private:
  Graph graph_;
  Embedding embedding_;
  std::map<Edge, std::set<PlanePair>> assignment_;
};

}  // namespace planeproj
