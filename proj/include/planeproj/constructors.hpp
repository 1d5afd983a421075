#pragma once

#include <cstdint>
#include <vector>

#include "planeproj/decomposition.hpp"
#include "planeproj/embedding.hpp"
#include "planeproj/graph.hpp"

namespace planeproj {

// Every constructor below runs verify() on its result before returning and
// throws CONSTRUCTION_FAILED if that gate ever rejects.

/// n points in R^d whose projections onto every coordinate plane are in
/// strictly convex position with one common cyclic order. Point k has
/// coordinate j ~ cos(2*pi*k/n + j*pi/(2d)), rounded to 2^-p with p raised
/// until the exact checks pass. Throws BAD_INPUT unless n >= 3, d >= 2.
Embedding convex_projection_points(int n, int d);

/// True iff every plane projection of `e` is in strictly convex position and
/// all planes report the same cyclic order.
bool has_common_convex_order(const Embedding& e);

/// Plane-projecting embedding of K_n in dimension pdim_upper_Kn(n'), n' the
/// next multiple of 4 at or above n. Vertices split into an inner set S and
/// an outer set T of n'/2 each; plane p carries the p-th zig-zag Hamiltonian
/// path of S and of T plus every edge from the diametric pair of T's path to
/// S. The outer set is scaled by 2, 4, 8, ... until the drawing verifies.
/// Throws BAD_INPUT for n < 3.
PlaneProjection complete_graph_embedding(int n);

/// Dimension complete_graph_embedding(n) uses.
int complete_graph_dimension(int n);

/// The frozen 14-vertex, 69-edge two-plane seed (planes (0,1) and (1,2),
/// shared axis 1).
PlaneProjection extremal_seed();

/// Two-plane embedding in R^3 with exactly 6n - 15 edges, grown from the
/// seed one vertex at a time: each new vertex sits at the centroid of a face
/// of the (0,1) drawing avoiding the three hull vertices of the (1,2)
/// drawing, and above everything on axis 2 where it joins those three hull
/// vertices. Throws BAD_INPUT for n < 14.
PlaneProjection extremal_two_plane(int n);

/// One caterpillar component with distinct y-values per vertex. `spine` may
/// be left empty to have it derived (see caterpillar_spine).
struct CaterpillarLayoutRequest {
  Graph caterpillar;
  std::vector<Rational> y;
  std::vector<int> spine;
};

/// x-coordinates drawing the caterpillar crossing-free at (x_v, y_v): spine
/// vertex i (1-based) at x = i, leaves of spine vertex i at x = i + 1.
/// Throws NOT_A_CATERPILLAR, TIED_COORDINATES, BAD_INPUT.
std::vector<Rational> caterpillar_x_coords(const CaterpillarLayoutRequest& req);

/// x-coordinates drawing the cycle `cycle_order` (a permutation of
/// 0..n-1, n >= 3) crossing-free at (x_v, y_v). The lowest vertex starts a
/// path laid out by caterpillar_x_coords; the closing vertex is pushed right
/// along a line through the lowest vertex shallower than every path vertex.
/// Throws TIED_COORDINATES, BAD_INPUT.
std::vector<Rational> cycle_x_coords(const std::vector<int>& cycle_order,
                                     const std::vector<Rational>& y);

/// x-coordinates for a whole caterpillar forest against shared distinct
/// y-values: each component is laid out by caterpillar_x_coords in its own
/// vertical strip, components left to right by smallest vertex id.
std::vector<Rational> forest_x_coords(const Graph& forest, const std::vector<Rational>& y);

enum class LiftMode { kGuaranteed, kPaperPlanes };

struct LiftOptions {
  std::uint64_t seed = 0;
  int retries = 64;
};

/// Embedding from a decomposition into k caterpillar (or linear) forests.
/// GUARANTEED: dimension k+1, axis 0 holds vertex ids, forest i lives in
/// plane (0, i). PAPER_PLANES: dimension k, forests in planes
/// (0,1)..(0,k-1) and the last in (1,2), retried under random vertex orders
/// and forest permutations; for k <= 2 it falls back to GUARANTEED.
/// Throws BAD_DECOMPOSITION, FAILED_HEURISTIC.
PlaneProjection forests_to_embedding(const Graph& g, const ForestDecomposition& forests,
                                     LiftMode mode, const LiftOptions& options = {});

struct PlanarDrawing {
  Graph graph;
  std::vector<Point2> positions;
};

/// Planar drawing in plane (0,1) plus one extra axis per path: axis 0 is
/// sheared (x + eps*y, eps = 2^-t) until distinct, path i is laid out in
/// plane (0, i+1). Paths must be caterpillar forests, pairwise edge-disjoint
/// and disjoint from the planar part. Throws BAD_PLANAR_INPUT, BAD_INPUT.
PlaneProjection planar_plus_paths(const PlanarDrawing& planar, const std::vector<Graph>& paths);

struct GeomThicknessLayout {
  std::vector<Point2> positions;
  std::vector<std::vector<Edge>> layers;
};

/// Repeats each coordinate k = ceil(sqrt(s)) times: (a, b) -> (a..a, b..b)
/// in R^{2k}; layer l goes to plane (l / k, k + l % k). Throws BAD_LAYER
/// when a layer is not a planar straight-line drawing on the positions.
PlaneProjection lift_geometric_thickness(const GeomThicknessLayout& layout);

}  // namespace planeproj
