#include "planeproj/verify.hpp"

#include <algorithm>

namespace planeproj {

namespace {

struct Box {
  const Rational* lo_x;
  const Rational* hi_x;
  const Rational* lo_y;
  const Rational* hi_y;
};

Box box_of(const Point2& a, const Point2& b) {
  return {a.x < b.x ? &a.x : &b.x, a.x < b.x ? &b.x : &a.x,
          a.y < b.y ? &a.y : &b.y, a.y < b.y ? &b.y : &a.y};
}

bool boxes_meet(const Box& p, const Box& q) {
  return !(*p.hi_x < *q.lo_x || *q.hi_x < *p.lo_x || *p.hi_y < *q.lo_y || *q.hi_y < *p.lo_y);
}

bool in_box(const Point2& p, const Box& b) {
  return *b.lo_x <= p.x && p.x <= *b.hi_x && *b.lo_y <= p.y && p.y <= *b.hi_y;
}

void check_plane(std::span<const Point2> pts, std::span<const Edge> edges, PlanePair plane,
                 std::vector<Failure>& out) {
  const int n = static_cast<int>(pts.size());

  [&] {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (pts[u] == pts[v]) {
          out.push_back({plane, FailureKind::kCoincidentPoints, {u, v}});
          return;
        }
  }();

  // Edges whose endpoints coincide are already reported above.
  std::vector<std::size_t> live;
  std::vector<Box> boxes(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Point2& a = pts[edges[i].u];
    const Point2& b = pts[edges[i].v];
    if (a == b) continue;
    live.push_back(i);
    boxes[i] = box_of(a, b);
  }

  [&] {
    for (int w = 0; w < n; ++w)
      for (std::size_t i : live) {
        const Edge& e = edges[i];
        if (w == e.u || w == e.v || !in_box(pts[w], boxes[i])) continue;
        if (point_on_segment_interior(pts[w], Segment2(pts[e.u], pts[e.v]))) {
          out.push_back({plane, FailureKind::kVertexOnEdge, {w, e.u, e.v}});
          return;
        }
      }
  }();

  [&] {
    for (std::size_t s = 0; s < live.size(); ++s)
      for (std::size_t t = s + 1; t < live.size(); ++t) {
        const std::size_t i = live[s];
        const std::size_t j = live[t];
        if (!boxes_meet(boxes[i], boxes[j])) continue;
        const Segment2 a(pts[edges[i].u], pts[edges[i].v]);
        const Segment2 b(pts[edges[j].u], pts[edges[j].v]);
        if (segments_cross(a, b) == SegmentRelation::kCrossing) {
          out.push_back({plane, FailureKind::kEdgeCrossing,
                         {edges[i].u, edges[i].v, edges[j].u, edges[j].v}});
          return;
        }
      }
  }();
}

}  // namespace

std::string_view failure_kind_name(FailureKind kind) {
  switch (kind) {
    case FailureKind::kCoincidentPoints: return "COINCIDENT_POINTS";
    case FailureKind::kVertexOnEdge: return "VERTEX_ON_EDGE";
    case FailureKind::kEdgeCrossing: return "EDGE_CROSSING";
    case FailureKind::kUncoveredEdge: return "UNCOVERED_EDGE";
  }
  return "UNKNOWN";
}

VerificationReport verify(const PlaneProjection& pp) {
  VerificationReport report;
  for (const PlanePair& plane : pp.used_planes()) {
    const std::vector<Point2> pts = project(pp.embedding(), plane);
    const std::vector<Edge> edges = pp.edges_in(plane);
    check_plane(pts, edges, plane, report.failures);
  }
  for (const Edge& e : pp.graph().edges()) {
    const auto* planes = pp.planes_of(e);
    if (planes == nullptr || planes->empty()) {
      report.failures.push_back({std::nullopt, FailureKind::kUncoveredEdge, {e.u, e.v}});
      break;
    }
  }
  return report;
}

VerificationReport verify_drawing(std::span<const Point2> points, std::span<const Edge> edges,
                                  PlanePair tag) {
  std::vector<Edge> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  VerificationReport report;
  check_plane(points, sorted, tag, report.failures);
  return report;
}

}  // namespace planeproj
