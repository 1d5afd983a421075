#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "planeproj/embedding.hpp"

namespace planeproj {

enum class FailureKind { kCoincidentPoints, kVertexOnEdge, kEdgeCrossing, kUncoveredEdge };

std::string_view failure_kind_name(FailureKind kind);

/// One violated condition. Witness layout by kind:
///   COINCIDENT_POINTS  {u, v}
///   VERTEX_ON_EDGE     {w, a, b}   w strictly inside edge ab
///   EDGE_CROSSING      {a, b, c, d} edges ab and cd
///   UNCOVERED_EDGE     {u, v}      plane is empty
struct Failure {
  std::optional<PlanePair> plane;
  FailureKind kind = FailureKind::kCoincidentPoints;
  std::vector<int> witness;

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct VerificationReport {
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }
};

/// Checks every used plane for injectivity, vertex-on-edge and edge
/// crossings, then that every graph edge has a plane. Exact; reports the
/// lexicographically first witness of each kind per plane, planes ascending.
VerificationReport verify(const PlaneProjection& pp);

/// The same per-plane checks for one standalone straight-line drawing.
/// Failures are tagged with `tag`.
VerificationReport verify_drawing(std::span<const Point2> points, std::span<const Edge> edges,
                                  PlanePair tag = {0, 1});

}  // namespace planeproj
