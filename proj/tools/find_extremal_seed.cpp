// Searches for a 14-vertex two-plane seed with 69 edges: triangulations in
// planes (0,1) and (1,2) sharing only the three edges every such pair must
// share (AB, AC, BD along the common axis). Shared edges are removed by edge
// flips; the result is checked with the exact verifier and written as PPE.
//
//   find_extremal_seed <out.ppe> [rng-seed]

#include <algorithm>
#include <iostream>
#include <random>
#include <set>

#include "planeproj/ppe.hpp"
#include "planeproj/verify.hpp"

using namespace planeproj;

namespace {

constexpr int kN = 14;
using Rng = std::mt19937_64;
using Pt = std::pair<long, long>;
using EdgeSet = std::set<Edge>;

long cross(const Pt& o, const Pt& a, const Pt& b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

bool inside(const Pt& p, const Pt& a, const Pt& b, const Pt& c) {
  const long c1 = cross(a, b, p), c2 = cross(b, c, p), c3 = cross(c, a, p);
  return (c1 > 0 && c2 > 0 && c3 > 0) || (c1 < 0 && c2 < 0 && c3 < 0);
}

bool general_position(const std::vector<Pt>& pts) {
  for (int a = 0; a < kN; ++a)
    for (int b = a + 1; b < kN; ++b)
      for (int c = b + 1; c < kN; ++c)
        if (cross(pts[a], pts[b], pts[c]) == 0) return false;
  return true;
}

// Points in general position never overlap collinearly, so sharing an
// endpoint rules out a crossing.
bool crosses(const std::vector<Pt>& p, Edge e, Edge f) {
  if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) return false;
  const long d1 = cross(p[e.u], p[e.v], p[f.u]), d2 = cross(p[e.u], p[e.v], p[f.v]);
  const long d3 = cross(p[f.u], p[f.v], p[e.u]), d4 = cross(p[f.u], p[f.v], p[e.v]);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

struct Instance {
  std::vector<long> x, y, z;
  std::vector<Pt> h, m;  // (x, y) and (y, z)
};

// Vertex 0 = A (min y), 1 = B (max y), 2 = X (third H hull vertex),
// 3 = top (max z, third M hull vertex).
Instance sample(Rng& rng) {
  std::uniform_int_distribution<long> u(0, 1000);
  for (;;) {
    Instance in;
    in.x = {u(rng) % 300, u(rng) % 300, 1000, 0};
    in.y = {0, 1000, 200 + u(rng) % 600, 200 + u(rng) % 600};
    in.z = {u(rng) % 300, u(rng) % 300, 0, 1000};
    auto in_h = [&](long x, long y) { return inside({x, y}, {in.x[0], 0}, {in.x[1], 1000}, {1000, in.y[2]}); };
    auto in_m = [&](long y, long z) { return inside({y, z}, {0, in.z[0]}, {1000, in.z[1]}, {in.y[3], 1000}); };
    int tries = 0;
    while (!in_m(in.y[2], in.z[2]) && ++tries < 2000) in.z[2] = u(rng);
    while (!in_h(in.x[3], in.y[3]) && ++tries < 4000) in.x[3] = u(rng);
    if (tries >= 4000) continue;
    while (static_cast<int>(in.x.size()) < kN && ++tries < 100000) {
      const long x = u(rng), y = u(rng), z = u(rng);
      if (in_h(x, y) && in_m(y, z)) {
        in.x.push_back(x);
        in.y.push_back(y);
        in.z.push_back(z);
      }
    }
    if (static_cast<int>(in.x.size()) < kN) continue;
    if (std::set<long>(in.y.begin(), in.y.end()).size() != kN) continue;
    for (int v = 0; v < kN; ++v) {
      in.h.emplace_back(in.x[v], in.y[v]);
      in.m.emplace_back(in.y[v], in.z[v]);
    }
    if (general_position(in.h) && general_position(in.m)) return in;
  }
}

EdgeSet triangulate(const std::vector<Pt>& p, const EdgeSet& avoid, Rng& rng) {
  std::vector<Edge> fresh, reused;
  for (int a = 0; a < kN; ++a)
    for (int b = a + 1; b < kN; ++b) (avoid.count(Edge(a, b)) ? reused : fresh).emplace_back(a, b);
  std::shuffle(fresh.begin(), fresh.end(), rng);
  std::shuffle(reused.begin(), reused.end(), rng);
  fresh.insert(fresh.end(), reused.begin(), reused.end());
  EdgeSet t;
  for (const Edge& c : fresh) {
    if (std::none_of(t.begin(), t.end(), [&](const Edge& e) { return crosses(p, c, e); })) t.insert(c);
  }
  return t;
}

bool adjacent(const EdgeSet& t, int a, int b) { return t.count(Edge(a, b)) > 0; }

// Apexes of the two triangles on edge e, if e is interior.
std::optional<Edge> flip_target(const std::vector<Pt>& p, const EdgeSet& t, Edge e) {
  int left = -1, right = -1;
  for (int w = 0; w < kN; ++w) {
    if (w == e.u || w == e.v || !adjacent(t, e.u, w) || !adjacent(t, e.v, w)) continue;
    bool empty = true;
    for (int q = 0; q < kN && empty; ++q) {
      if (q != e.u && q != e.v && q != w && inside(p[q], p[e.u], p[e.v], p[w])) empty = false;
    }
    if (!empty) continue;
    (cross(p[e.u], p[e.v], p[w]) > 0 ? left : right) = w;
  }
  if (left < 0 || right < 0) return std::nullopt;
  // Convex quadrilateral: u and v on opposite sides of the new diagonal.
  if ((cross(p[left], p[right], p[e.u]) > 0) == (cross(p[left], p[right], p[e.v]) > 0)) return std::nullopt;
  return Edge(left, right);
}

bool try_flip(const std::vector<Pt>& p, EdgeSet& t, const EdgeSet& other, Edge e) {
  const auto f = flip_target(p, t, e);
  if (!f || other.count(*f)) return false;
  t.erase(e);
  t.insert(*f);
  return true;
}

EdgeSet intersect(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: find_extremal_seed <out.ppe> [rng-seed]\n";
    return 2;
  }
  Rng rng(argc > 2 ? std::stoull(argv[2]) : 1);
  for (long attempt = 1; attempt <= 100000; ++attempt) {
    const Instance in = sample(rng);
    EdgeSet h = triangulate(in.h, {}, rng);
    EdgeSet m = triangulate(in.m, h, rng);

    for (int step = 0; step < 20000 && intersect(h, m).size() > 3; ++step) {
      const EdgeSet shared = intersect(h, m);
      std::vector<Edge> pick(shared.begin(), shared.end());
      const Edge e = pick[rng() % pick.size()];
      if (try_flip(in.h, h, m, e) || try_flip(in.m, m, h, e)) continue;
      // Stuck on e: random walk through flips that keep the overlap.
      const bool in_h_plane = rng() % 2 == 0;
      EdgeSet& t = in_h_plane ? h : m;
      std::vector<Edge> all(t.begin(), t.end());
      try_flip(in_h_plane ? in.h : in.m, t, in_h_plane ? m : h, all[rng() % all.size()]);
    }
    if (intersect(h, m).size() != 3) {
      std::cerr << "attempt " << attempt << ": stuck\n";
      continue;
    }

    std::vector<std::vector<Rational>> rows;
    for (int v = 0; v < kN; ++v) rows.push_back({Rational(in.x[v]), Rational(in.y[v]), Rational(in.z[v])});
    PlaneProjection pp(Graph(kN), Embedding(3, rows));
    for (const Edge& e : h) pp.assign(e, {0, 1});
    for (const Edge& e : m) pp.assign(e, {1, 2});
    if (pp.graph().edge_count() != 69 || !verify(pp).ok()) {
      std::cerr << "attempt " << attempt << ": rejected by verify\n";
      continue;
    }
    write_ppe_file(argv[1], pp);
    std::cout << "seed found after " << attempt << " attempts: " << pp.graph().edge_count() << " edges\n";
    return 0;
  }
  std::cerr << "no seed found\n";
  return 1;
}
