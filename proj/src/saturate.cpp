#include "planeproj/saturate.hpp"

#include <algorithm>
#include <numeric>

#include "planeproj/error.hpp"
#include "planeproj/verify.hpp"

namespace planeproj {

namespace {

bool addable(const std::vector<Point2>& pts, const std::vector<Edge>& plane_edges, Edge cand) {
  const Segment2 seg(pts[cand.u], pts[cand.v]);
  for (int w = 0; w < static_cast<int>(pts.size()); ++w) {
    if (w != cand.u && w != cand.v && point_on_segment_interior(pts[w], seg)) return false;
  }
  for (const Edge& e : plane_edges) {
    if (segments_cross(seg, Segment2(pts[e.u], pts[e.v])) == SegmentRelation::kCrossing) {
      return false;
    }
  }
  return true;
}

}  // namespace

PlaneProjection saturate(const PlaneProjection& pp, PlanePair plane,
                         const std::vector<Edge>& candidate_order) {
  if (!plane.valid_for(pp.dimension())) throw Error(ErrorCode::kBadPlane, "saturation plane invalid");
  if (!verify(pp).ok()) throw Error(ErrorCode::kNotVerified, "input projection does not verify");

  PlaneProjection out = pp;
  const std::vector<Point2> pts = project(pp.embedding(), plane);
  std::vector<Edge> plane_edges = pp.edges_in(plane);
  std::set<Edge> present(plane_edges.begin(), plane_edges.end());
  if (std::set<Point2>(pts.begin(), pts.end()).size() != pts.size()) {
    throw Error(ErrorCode::kNotVerified, "projection onto the saturation plane is not injective");
  }

  // A rejected pair stays rejected as edges accumulate, so one pass gives the
  // same result as restarting the scan after every insertion.
  for (const Edge& cand : candidate_order) {
    if (present.count(cand)) continue;
    if (!addable(pts, plane_edges, cand)) continue;
    plane_edges.push_back(cand);
    present.insert(cand);
    out.assign(cand, plane);
  }
  return out;
}

PlaneProjection saturate(const PlaneProjection& pp, PlanePair plane) {
  std::vector<Edge> order;
  const int n = pp.graph().vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) order.emplace_back(u, v);
  return saturate(pp, plane, order);
}

std::set<Edge> count_shared_extremal_edges(const PlaneProjection& pp, int axis) {
  const std::set<PlanePair> planes = pp.used_planes();
  if (planes.size() != 2) throw Error(ErrorCode::kBadInput, "projection must use exactly two planes");
  for (const PlanePair& p : planes) {
    if (p.i != axis && p.j != axis) throw Error(ErrorCode::kBadInput, "a plane drops the shared axis");
  }
  const int n = pp.graph().vertex_count();
  if (n < 2) throw Error(ErrorCode::kBadInput, "need at least two vertices");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  const auto& emb = pp.embedding();
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return emb.coords(a)[axis] < emb.coords(b)[axis]; });
  for (int t = 1; t < n; ++t) {
    if (emb.coords(order[t])[axis] == emb.coords(order[t - 1])[axis]) {
      throw Error(ErrorCode::kTiedCoordinates, "vertices " + std::to_string(order[t - 1]) + " and " +
                                                   std::to_string(order[t]) + " tie on the axis");
    }
  }

  const int a = order[0];
  const int c = order[1];
  const int b = order[n - 1];
  const int d = order[n - 2];
  std::set<Edge> out;
  for (const Edge& e : {Edge(a, c), Edge(b, d)}) {
    const auto* assigned = pp.planes_of(e);
    if (assigned == nullptr) continue;
    if (std::all_of(planes.begin(), planes.end(), [&](const PlanePair& p) { return assigned->count(p); })) {
      out.insert(e);
    }
  }
  return out;
}

}  // namespace planeproj
