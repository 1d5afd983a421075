#pragma once

#include <set>
#include <vector>

#include "planeproj/embedding.hpp"

namespace planeproj {

/// Adds straight-line edges to `plane` until its drawing is maximally planar:
/// no pair missing from the plane can be joined without crossing an edge of
/// the plane or passing through a projected vertex. Candidates are scanned in
/// lexicographic order. New pairs are added to the graph and to `plane`
/// only. Throws NOT_VERIFIED unless verify(pp) is ok, BAD_PLANE for an
/// invalid plane.
PlaneProjection saturate(const PlaneProjection& pp, PlanePair plane);

/// As above with an explicit candidate order; pairs not listed are never
/// added.
PlaneProjection saturate(const PlaneProjection& pp, PlanePair plane,
                         const std::vector<Edge>& candidate_order);

/// With A, C the lowest and second-lowest vertices along `axis` and B, D the
/// highest and second-highest, returns those of {AC, BD} assigned to both
/// planes of a two-plane projection whose planes both retain `axis`.
/// Throws TIED_COORDINATES on repeated axis values, BAD_INPUT when the
/// projection does not use exactly two such planes.
std::set<Edge> count_shared_extremal_edges(const PlaneProjection& pp, int axis);

}  // namespace planeproj
