#pragma once

// Independent oracles and random generators shared by the unit and
// acceptance tests. The oracles use raw mpq_class arithmetic rather than the
// library's predicates.

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "planeproj/embedding.hpp"
#include "planeproj/geometry.hpp"
#include "planeproj/graph.hpp"
#include "planeproj/saturate.hpp"
#include "planeproj/verify.hpp"

namespace testsupport {

using planeproj::Edge;
using planeproj::Graph;
using planeproj::PlanePair;
using planeproj::Point2;
using planeproj::Rational;
using Rng = std::mt19937_64;

inline int irand(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Point2 ipt(long x, long y) { return {Rational(x), Rational(y)}; }

struct Q2 {
  mpq_class x, y;
};

inline Q2 q2(const Point2& p) { return {p.x.raw(), p.y.raw()}; }

inline mpq_class cross(const Q2& o, const Q2& a, const Q2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

enum class Rel { kDisjoint, kSharedEndpoint, kCrossing };

// Solves p1 + t (p2 - p1) = q1 + s (q2 - q1) and classifies the solution set.
inline Rel intersection_oracle(const Point2& pa, const Point2& pb, const Point2& qa, const Point2& qb) {
  const Q2 p1 = q2(pa), p2 = q2(pb), r1 = q2(qa), r2 = q2(qb);
  const mpq_class dx1 = p2.x - p1.x, dy1 = p2.y - p1.y;
  const mpq_class dx2 = r2.x - r1.x, dy2 = r2.y - r1.y;
  const mpq_class det = dx1 * (-dy2) - dy1 * (-dx2);
  const mpq_class rx = r1.x - p1.x, ry = r1.y - p1.y;
  if (det != 0) {
    const mpq_class t = (rx * (-dy2) - ry * (-dx2)) / det;
    const mpq_class s = (dx1 * ry - dy1 * rx) / det;
    if (t < 0 || t > 1 || s < 0 || s > 1) return Rel::kDisjoint;
    const bool t_end = t == 0 || t == 1;
    const bool s_end = s == 0 || s == 1;
    return t_end && s_end ? Rel::kSharedEndpoint : Rel::kCrossing;
  }
  if (dx1 * ry - dy1 * rx != 0) return Rel::kDisjoint;  // parallel, distinct lines
  // Collinear: parametrise the second segment along the first.
  const mpq_class len2 = dx1 * dx1 + dy1 * dy1;
  mpq_class ta = (rx * dx1 + ry * dy1) / len2;
  mpq_class tb = ((r2.x - p1.x) * dx1 + (r2.y - p1.y) * dy1) / len2;
  if (ta > tb) std::swap(ta, tb);
  const mpq_class lo = std::max(mpq_class(0), ta);
  const mpq_class hi = std::min(mpq_class(1), tb);
  if (lo > hi) return Rel::kDisjoint;
  if (lo < hi) return Rel::kCrossing;
  // Single touching point: fine only if it ends both segments.
  const bool end_p = lo == 0 || lo == 1;
  const bool end_q = lo == ta || lo == tb;
  return end_p && end_q ? Rel::kSharedEndpoint : Rel::kCrossing;
}

inline bool on_interior_oracle(const Point2& p, const Point2& a, const Point2& b) {
  if (p == a || p == b) return false;
  const Q2 P = q2(p), A = q2(a), B = q2(b);
  if (cross(A, B, P) != 0) return false;
  const mpq_class dot = (P.x - A.x) * (B.x - A.x) + (P.y - A.y) * (B.y - A.y);
  const mpq_class len = (B.x - A.x) * (B.x - A.x) + (B.y - A.y) * (B.y - A.y);
  return dot > 0 && dot < len;
}

// Failures verify() should report for one plane, recomputed independently.
inline std::vector<planeproj::Failure> plane_failures_oracle(const std::vector<Point2>& pts,
                                                            std::vector<Edge> edges, PlanePair tag) {
  using planeproj::FailureKind;
  std::sort(edges.begin(), edges.end());
  std::vector<planeproj::Failure> out;
  const int n = static_cast<int>(pts.size());
  [&] {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (pts[u].x == pts[v].x && pts[u].y == pts[v].y) {
          out.push_back({tag, FailureKind::kCoincidentPoints, {u, v}});
          return;
        }
  }();
  std::vector<Edge> live;
  for (const Edge& e : edges)
    if (!(pts[e.u] == pts[e.v])) live.push_back(e);
  [&] {
    for (int w = 0; w < n; ++w)
      for (const Edge& e : live)
        if (w != e.u && w != e.v && on_interior_oracle(pts[w], pts[e.u], pts[e.v])) {
          out.push_back({tag, FailureKind::kVertexOnEdge, {w, e.u, e.v}});
          return;
        }
  }();
  [&] {
    for (std::size_t i = 0; i < live.size(); ++i)
      for (std::size_t j = i + 1; j < live.size(); ++j) {
        const Edge& a = live[i];
        const Edge& b = live[j];
        if (intersection_oracle(pts[a.u], pts[a.v], pts[b.u], pts[b.v]) == Rel::kCrossing) {
          out.push_back({tag, FailureKind::kEdgeCrossing, {a.u, a.v, b.u, b.v}});
          return;
        }
      }
  }();
  return out;
}

// Strictly convex position: no point lies in the closed convex hull of the
// others (checked against every triangle and segment of the others).
inline bool strictly_convex_oracle(const std::vector<Point2>& pts) {
  const int n = static_cast<int>(pts.size());
  for (int p = 0; p < n; ++p) {
    for (int a = 0; a < n; ++a) {
      if (a == p) continue;
      if (pts[a] == pts[p]) return false;
      for (int b = a + 1; b < n; ++b) {
        if (b == p) continue;
        if (on_interior_oracle(pts[p], pts[a], pts[b])) return false;
        for (int c = b + 1; c < n; ++c) {
          if (c == p) continue;
          const Q2 P = q2(pts[p]), A = q2(pts[a]), B = q2(pts[b]), C = q2(pts[c]);
          const int s1 = sgn(cross(A, B, P)), s2 = sgn(cross(B, C, P)), s3 = sgn(cross(C, A, P));
          const bool has_neg = s1 < 0 || s2 < 0 || s3 < 0;
          const bool has_pos = s1 > 0 || s2 > 0 || s3 > 0;
          if (!(has_neg && has_pos) && sgn(cross(A, B, C)) != 0) return false;
        }
      }
    }
  }
  return true;
}

// `order` is a CCW convex polygon: every other point strictly left of every
// directed side.
inline bool is_ccw_convex_order(const std::vector<Point2>& pts, const std::vector<int>& order) {
  const int n = static_cast<int>(pts.size());
  if (static_cast<int>(order.size()) != n) return false;
  if (std::set<int>(order.begin(), order.end()).size() != order.size()) return false;
  for (int i = 0; i < n; ++i) {
    const Q2 a = q2(pts[order[i]]), b = q2(pts[order[(i + 1) % n]]);
    for (int w = 0; w < n; ++w) {
      if (w == order[i] || w == order[(i + 1) % n]) continue;
      if (cross(a, b, q2(pts[w])) <= 0) return false;
    }
  }
  return true;
}

// No pair outside `plane` could be added without crossing or touching a
// vertex (brute force over every pair).
inline bool is_maximal_in_plane(const planeproj::PlaneProjection& pp, PlanePair plane) {
  const std::vector<Point2> pts = planeproj::project(pp.embedding(), plane);
  const std::vector<Edge> in_plane = pp.edges_in(plane);
  const std::set<Edge> present(in_plane.begin(), in_plane.end());
  const int n = static_cast<int>(pts.size());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (present.count(Edge(u, v))) continue;
      bool blocked = false;
      for (int w = 0; w < n && !blocked; ++w)
        blocked = w != u && w != v && on_interior_oracle(pts[w], pts[u], pts[v]);
      for (const Edge& e : in_plane) {
        if (blocked) break;
        blocked = intersection_oracle(pts[u], pts[v], pts[e.u], pts[e.v]) == Rel::kCrossing;
      }
      if (!blocked) return false;
    }
  return true;
}

// n distinct values in [0, range] per axis, in random order.
inline std::vector<long> distinct_values(Rng& rng, int n, int range) {
  std::vector<long> all(range + 1);
  for (int i = 0; i <= range; ++i) all[i] = i;
  std::shuffle(all.begin(), all.end(), rng);
  return {all.begin(), all.begin() + n};
}

// Random embedding in R^3 with pairwise distinct values on every axis, plus
// a few random edges greedily kept in each of `planes` (so it verifies).
inline planeproj::PlaneProjection random_plane_embedding(Rng& rng, int n, const std::vector<PlanePair>& planes,
                                                         int range = 1000) {
  const auto xs = distinct_values(rng, n, range);
  const auto ys = distinct_values(rng, n, range);
  const auto zs = distinct_values(rng, n, range);
  std::vector<std::vector<Rational>> rows;
  for (int v = 0; v < n; ++v) rows.push_back({Rational(xs[v]), Rational(ys[v]), Rational(zs[v])});
  planeproj::PlaneProjection pp(Graph(n), planeproj::Embedding(3, rows));
  for (const PlanePair& p : planes) {
    std::vector<Edge> cand;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) cand.emplace_back(u, v);
    std::shuffle(cand.begin(), cand.end(), rng);
    cand.resize(std::min<std::size_t>(cand.size(), static_cast<std::size_t>(irand(rng, 0, n))));
    pp = planeproj::saturate(pp, p, cand);
  }
  return pp;
}

// Random caterpillar: spine of length s, leaves hung on random spine
// vertices, ids shuffled.
inline Graph random_caterpillar(Rng& rng, int n) {
  const int spine = irand(rng, 1, n);
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  std::shuffle(ids.begin(), ids.end(), rng);
  Graph g(n);
  for (int i = 0; i + 1 < spine; ++i) g.add_edge(ids[i], ids[i + 1]);
  for (int i = spine; i < n; ++i) g.add_edge(ids[i], ids[irand(rng, 0, spine - 1)]);
  return g;
}

inline std::vector<Rational> random_distinct_rationals(Rng& rng, int n) {
  std::set<Rational> seen;
  std::vector<Rational> out;
  while (static_cast<int>(out.size()) < n) {
    Rational r(irand(rng, -1000, 1000), irand(rng, 1, 97));
    if (seen.insert(r).second) out.push_back(r);
  }
  return out;
}

// Random graph on n vertices with maximum degree <= max_deg.
inline Graph random_bounded_degree(Rng& rng, int n, int max_deg, int tries) {
  Graph g(n);
  for (int t = 0; t < tries; ++t) {
    const int u = irand(rng, 0, n - 1), v = irand(rng, 0, n - 1);
    if (u == v || g.has_edge(u, v) || g.degree(u) >= max_deg || g.degree(v) >= max_deg) continue;
    g.add_edge(u, v);
  }
  return g;
}

}  // namespace testsupport
