#include <algorithm>
#include <array>
#include <optional>
#include <set>

#include "gate.hpp"
#include "planeproj/constructors.hpp"
#include "planeproj/ppe.hpp"

namespace planeproj {

namespace detail {
extern const char* const kExtremalSeedPpe;  // generated from data/extremal_seed_g14.ppe
}

namespace {

constexpr PlanePair kH{0, 1};
constexpr PlanePair kM{1, 2};

struct Designated {
  int a = 0;    // lowest on the shared axis
  int b = 0;    // highest on the shared axis
  int top = 0;  // highest on axis 2
};

Designated designated(const Embedding& e) {
  Designated d;
  for (int v = 1; v < e.vertex_count(); ++v) {
    if (e.coords(v)[1] < e.coords(d.a)[1]) d.a = v;
    if (e.coords(v)[1] > e.coords(d.b)[1]) d.b = v;
    if (e.coords(v)[2] > e.coords(d.top)[2]) d.top = v;
  }
  return d;
}

bool strictly_inside(const Point2& p, const Point2& a, const Point2& b, const Point2& c) {
  const Orientation o1 = orientation(a, b, p);
  const Orientation o2 = orientation(b, c, p);
  const Orientation o3 = orientation(c, a, p);
  return o1 != Orientation::kCollinear && o1 == o2 && o2 == o3;
}

// Every M-plane point other than A, B, top lies strictly inside triangle ABT.
bool m_hull_is_triangle(const Embedding& e, const Designated& d) {
  const std::vector<Point2> m = project(e, kM);
  for (int v = 0; v < e.vertex_count(); ++v) {
    if (v == d.a || v == d.b || v == d.top) continue;
    if (!strictly_inside(m[v], m[d.a], m[d.b], m[d.top])) return false;
  }
  return d.a != d.b && d.a != d.top && d.b != d.top;
}

// Triangular faces of the H drawing (empty triangles of H edges), ascending.
std::vector<std::array<int, 3>> h_faces(const PlaneProjection& pp, const std::vector<Point2>& h) {
  const int n = pp.graph().vertex_count();
  std::vector<std::set<int>> adj(n);
  for (const Edge& e : pp.edges_in(kH)) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  std::vector<std::array<int, 3>> faces;
  for (int a = 0; a < n; ++a) {
    for (int b : adj[a]) {
      if (b <= a) continue;
      for (int c : adj[b]) {
        if (c <= b || !adj[a].count(c)) continue;
        bool empty = true;
        for (int w = 0; w < n && empty; ++w) {
          if (w != a && w != b && w != c && strictly_inside(h[w], h[a], h[b], h[c])) empty = false;
        }
        if (empty) faces.push_back({a, b, c});
      }
    }
  }
  return faces;
}

// Smallest integer z above every current z that puts `top` strictly inside
// triangle (A, B, v) in the M plane, v = (y, z).
Rational lift_height(const Embedding& e, const Designated& d, const Rational& y) {
  const Rational ay = e.coords(d.a)[1], az = e.coords(d.a)[2];
  const Rational by = e.coords(d.b)[1], bz = e.coords(d.b)[2];
  const Rational ty = e.coords(d.top)[1], tz = e.coords(d.top)[2];
  Rational bound = tz;
  bound = std::max(bound, az + (y - ay) * (tz - az) / (ty - ay));
  bound = std::max(bound, bz + (by - y) * (tz - bz) / (by - ty));
  // floor(bound) + 1
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), bound.numerator().get_mpz_t(), bound.denominator().get_mpz_t());
  return Rational(mpq_class(fl + 1));
}

}  // namespace

PlaneProjection extremal_seed() {
  return detail::gated(read_ppe(std::string(detail::kExtremalSeedPpe)), "extremal_seed");
}

PlaneProjection extremal_two_plane(int n) {
  if (n < 14) throw Error(ErrorCode::kBadInput, "extremal_two_plane needs n >= 14");
  PlaneProjection pp = extremal_seed();
  Designated d = designated(pp.embedding());
  if (!m_hull_is_triangle(pp.embedding(), d)) {
    throw Error(ErrorCode::kConstructionFailed, "seed violates the hull invariant");
  }

  while (pp.graph().vertex_count() < n) {
    const Embedding& e = pp.embedding();
    const std::vector<Point2> h = project(e, kH);
    std::set<Rational> ys;
    for (int v = 0; v < e.vertex_count(); ++v) ys.insert(e.coords(v)[1]);

    // First admissible face, preferring one whose centroid keeps the shared
    // axis free of ties.
    std::optional<std::array<int, 3>> chosen;
    bool chosen_fresh = false;
    for (const auto& f : h_faces(pp, h)) {
      if (std::count_if(f.begin(), f.end(), [&](int v) { return v == d.a || v == d.b || v == d.top; })) {
        continue;
      }
      const Rational cy = (h[f[0]].y + h[f[1]].y + h[f[2]].y) / Rational(3);
      const bool fresh = !ys.count(cy);
      if (!chosen || (fresh && !chosen_fresh)) {
        chosen = f;
        chosen_fresh = fresh;
      }
      if (chosen_fresh) break;
    }
    if (!chosen) throw Error(ErrorCode::kConstructionFailed, "no admissible face in the (0,1) drawing");

    const auto [fa, fb, fc] = *chosen;
    const Rational x = (h[fa].x + h[fb].x + h[fc].x) / Rational(3);
    const Rational y = (h[fa].y + h[fb].y + h[fc].y) / Rational(3);
    const Rational z = lift_height(e, d, y);
    const Point2 vm{y, z};
    const std::vector<Point2> m = project(e, kM);
    if (!strictly_inside(m[d.top], m[d.a], m[d.b], vm)) {
      throw Error(ErrorCode::kConstructionFailed, "lift height does not cover the previous top");
    }

    const int v = pp.add_vertex({x, y, z});
    for (int c : {fa, fb, fc}) pp.assign(Edge(v, c), kH);
    for (int c : {d.a, d.b, d.top}) pp.assign(Edge(v, c), kM);
    d.top = v;
  }

  if (pp.graph().edge_count() != 6 * n - 15) {
    throw Error(ErrorCode::kConstructionFailed, "edge count drifted from 6n-15");
  }
  return detail::gated(std::move(pp), "extremal_two_plane");
}

}  // namespace planeproj
