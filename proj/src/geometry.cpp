#include "planeproj/geometry.hpp"

#include <algorithm>
#include <numeric>

#include "planeproj/error.hpp"

namespace planeproj {

namespace {

int cross_sign(const Point2& p, const Point2& q, const Point2& r) {
  const mpq_class lhs = (q.x.raw() - p.x.raw()) * (r.y.raw() - p.y.raw());
  const mpq_class rhs = (q.y.raw() - p.y.raw()) * (r.x.raw() - p.x.raw());
  return cmp(lhs, rhs);
}

// p is known to be collinear with segment ab; is it within the closed box?
bool within_closed(const Point2& p, const Point2& a, const Point2& b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Sort key along a line: x unless the line is vertical.
const Rational& line_key(const Point2& p, bool vertical) { return vertical ? p.y : p.x; }

SegmentRelation collinear_relation(const Segment2& s1, const Segment2& s2) {
  const bool vertical = s1.a().x == s1.b().x;
  auto lo1 = std::min(line_key(s1.a(), vertical), line_key(s1.b(), vertical));
  auto hi1 = std::max(line_key(s1.a(), vertical), line_key(s1.b(), vertical));
  auto lo2 = std::min(line_key(s2.a(), vertical), line_key(s2.b(), vertical));
  auto hi2 = std::max(line_key(s2.a(), vertical), line_key(s2.b(), vertical));
  const Rational& lo = std::max(lo1, lo2);
  const Rational& hi = std::min(hi1, hi2);
  if (lo > hi) return SegmentRelation::kDisjoint;
  if (lo < hi) return SegmentRelation::kCrossing;
  // Touch in a single point; it is an endpoint of both segments by construction.
  return SegmentRelation::kSharedEndpointOnly;
}

}  // namespace

Segment2::Segment2(Point2 a, Point2 b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ == b_) throw Error(ErrorCode::kDegenerateInput, "segment endpoints coincide");
}

Orientation orientation(const Point2& p, const Point2& q, const Point2& r) {
  const int s = cross_sign(p, q, r);
  if (s > 0) return Orientation::kCCW;
  if (s < 0) return Orientation::kCW;
  return Orientation::kCollinear;
}

SegmentRelation segments_cross(const Segment2& s1, const Segment2& s2) {
  const Point2& a = s1.a();
  const Point2& b = s1.b();
  const Point2& c = s2.a();
  const Point2& d = s2.b();
  const int o1 = cross_sign(a, b, c);
  const int o2 = cross_sign(a, b, d);
  const int o3 = cross_sign(c, d, a);
  const int o4 = cross_sign(c, d, b);

  if (o1 == 0 && o2 == 0) return collinear_relation(s1, s2);

  const bool touch = o1 * o2 <= 0 && o3 * o4 <= 0;
  if (!touch) return SegmentRelation::kDisjoint;

  // Lines are distinct, so the intersection is a single point.
  const bool shares = a == c || a == d || b == c || b == d;
  return shares ? SegmentRelation::kSharedEndpointOnly : SegmentRelation::kCrossing;
}

bool point_on_segment_interior(const Point2& p, const Segment2& s) {
  if (p == s.a() || p == s.b()) return false;
  if (cross_sign(s.a(), s.b(), p) != 0) return false;
  return within_closed(p, s.a(), s.b());
}

std::optional<std::vector<int>> convex_cyclic_order(std::span<const Point2> points) {
  const int n = static_cast<int>(points.size());
  if (n < 3) throw Error(ErrorCode::kDegenerateInput, "convex order needs at least 3 points");

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int i, int j) { return points[i] < points[j]; });
  for (int t = 1; t < n; ++t) {
    if (points[idx[t]] == points[idx[t - 1]]) return std::nullopt;
  }

  // Monotone chain keeping strict turns only.
  std::vector<int> hull(2 * n);
  int k = 0;
  for (int t = 0; t < n; ++t) {
    while (k >= 2 && cross_sign(points[hull[k - 2]], points[hull[k - 1]], points[idx[t]]) <= 0) --k;
    hull[k++] = idx[t];
  }
  for (int t = n - 2, lower = k + 1; t >= 0; --t) {
    while (k >= lower && cross_sign(points[hull[k - 2]], points[hull[k - 1]], points[idx[t]]) <= 0) --k;
    hull[k++] = idx[t];
  }
  hull.resize(k - 1);
  if (static_cast<int>(hull.size()) != n) return std::nullopt;

  auto start = std::min_element(hull.begin(), hull.end());
  std::rotate(hull.begin(), start, hull.end());
  return hull;
}

}  // namespace planeproj
