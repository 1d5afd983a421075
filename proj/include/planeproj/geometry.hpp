#pragma once

#include <optional>
#include <span>
#include <vector>

#include "planeproj/rational.hpp"

namespace planeproj {

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
  friend auto operator<=>(const Point2&, const Point2&) = default;
};

/// Closed straight segment with distinct endpoints.
class Segment2 {
 public:
  Segment2(Point2 a, Point2 b);

  const Point2& a() const { return a_; }
  const Point2& b() const { return b_; }

 private:
  Point2 a_;
  Point2 b_;
};

enum class Orientation { kCCW, kCW, kCollinear };

enum class SegmentRelation { kDisjoint, kSharedEndpointOnly, kCrossing };

/// Sign of (q - p) x (r - p).
Orientation orientation(const Point2& p, const Point2& q, const Point2& r);

/// CROSSING when the closed segments meet anywhere other than a single
/// endpoint common to both; collinear overlaps count as crossings.
SegmentRelation segments_cross(const Segment2& s1, const Segment2& s2);

/// True iff p lies on s strictly between its endpoints.
bool point_on_segment_interior(const Point2& p, const Segment2& s);

/// Counterclockwise cyclic order of the points starting at index 0 when every
/// point is a strict vertex of the convex hull; nullopt otherwise.
/// Throws DEGENERATE_INPUT for fewer than three points.
std::optional<std::vector<int>> convex_cyclic_order(std::span<const Point2> points);

}  // namespace planeproj
