#pragma once

#include <optional>
#include <vector>

#include "planeproj/geometry.hpp"
#include "planeproj/graph.hpp"

namespace planeproj {

/// Neighbours of each vertex in cyclic order around it.
using RotationSystem = std::vector<std::vector<int>>;

/// A planar rotation system for g (Boyer-Myrvold), or nullopt if g is not
/// planar.
std::optional<RotationSystem> planar_rotation_system(const Graph& g);

/// True iff `rot` lists every neighbour of every vertex exactly once and its
/// face count satisfies Euler's formula on each component.
bool is_planar_rotation_system(const Graph& g, const RotationSystem& rot);

/// Crossing-free straight-line drawing on the integer grid
/// [0, 2n-4] x [0, n-2]: g is triangulated, drawn by the canonical-ordering
/// shift method, then restricted back to E(g). Throws NOT_PLANAR when `rot`
/// is not a planar rotation system of g.
std::vector<Point2> straight_line_planar_drawing(const Graph& g, const RotationSystem& rot);

/// As above with the rotation system computed first.
std::vector<Point2> straight_line_planar_drawing(const Graph& g);

}  // namespace planeproj
