#include "planeproj/embedding.hpp"

#include <algorithm>
#include <string>

#include "planeproj/error.hpp"

namespace planeproj {

Embedding::Embedding(int dimension, std::vector<std::vector<Rational>> coords)
    : dimension_(dimension) {
  if (dimension < 2) throw Error(ErrorCode::kBadInput, "dimension must be at least 2");
  for (auto& row : coords) add_vertex(std::move(row));
}

int Embedding::add_vertex(std::vector<Rational> coords) {
  if (static_cast<int>(coords.size()) != dimension_) {
    throw Error(ErrorCode::kBadInput, "vertex has " + std::to_string(coords.size()) +
                                          " coordinates, expected " + std::to_string(dimension_));
  }
  for (std::size_t v = 0; v < coords_.size(); ++v) {
    if (coords_[v] == coords) {
      throw Error(ErrorCode::kBadInput, "vertex duplicates position of vertex " + std::to_string(v));
    }
  }
  coords_.push_back(std::move(coords));
  return static_cast<int>(coords_.size()) - 1;
}

std::vector<Point2> project(const Embedding& e, PlanePair plane) {
  if (!plane.valid_for(e.dimension())) {
    throw Error(ErrorCode::kBadPlane, "plane (" + std::to_string(plane.i) + "," +
                                          std::to_string(plane.j) + ") invalid in dimension " +
                                          std::to_string(e.dimension()));
  }
  std::vector<Point2> out;
  out.reserve(e.vertex_count());
  for (const auto& row : e.rows()) out.push_back({row[plane.i], row[plane.j]});
  return out;
}

PlaneProjection::PlaneProjection(Graph graph, Embedding embedding)
    : graph_(std::move(graph)), embedding_(std::move(embedding)) {
  if (graph_.vertex_count() != embedding_.vertex_count()) {
    throw Error(ErrorCode::kBadInput, "graph and embedding vertex counts differ");
  }
}

void PlaneProjection::assign(Edge e, PlanePair plane) {
  if (!plane.valid_for(dimension())) {
    throw Error(ErrorCode::kBadPlane, "plane (" + std::to_string(plane.i) + "," +
                                          std::to_string(plane.j) + ") invalid");
  }
  graph_.add_edge(e.u, e.v);
  assignment_[e].insert(plane);
}

void PlaneProjection::add_unassigned_edge(Edge e) { graph_.add_edge(e.u, e.v); }

int PlaneProjection::add_vertex(std::vector<Rational> coords) {
  const int id = embedding_.add_vertex(std::move(coords));
  graph_.add_vertex();
  return id;
}

const std::set<PlanePair>* PlaneProjection::planes_of(Edge e) const {
  auto it = assignment_.find(e);
  return it == assignment_.end() ? nullptr : &it->second;
}

std::set<PlanePair> PlaneProjection::used_planes() const {
  std::set<PlanePair> out;
  for (const auto& [edge, planes] : assignment_) out.insert(planes.begin(), planes.end());
  return out;
}

std::vector<Edge> PlaneProjection::edges_in(PlanePair plane) const {
  std::vector<Edge> out;
  for (const auto& [edge, planes] : assignment_) {
    if (planes.count(plane)) out.push_back(edge);
  }
  return out;
}

}  // namespace planeproj
