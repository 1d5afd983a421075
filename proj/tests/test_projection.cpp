#include "doctest.h"
#include "planeproj/error.hpp"
#include "planeproj/ppe.hpp"
#include "planeproj/saturate.hpp"
#include "planeproj/verify.hpp"
#include "support.hpp"

using namespace planeproj;
using namespace testsupport;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

PlaneProjection one_plane(const std::vector<std::pair<long, long>>& pts, const std::vector<Edge>& edges) {
  std::vector<std::vector<Rational>> rows;
  for (auto [x, y] : pts) rows.push_back(ints({x, y}));
  PlaneProjection pp(Graph(static_cast<int>(pts.size())), Embedding(2, rows));
  for (const Edge& e : edges) pp.assign(e, {0, 1});
  return pp;
}

std::vector<Edge> k4_edges() { return {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}; }

}  // namespace

TEST_CASE("project examples") {
  const Embedding e3(3, {ints({1, 2, 3})});
  CHECK(project(e3, {0, 1})[0] == ipt(1, 2));
  CHECK(project(e3, {1, 2})[0] == ipt(2, 3));
  const Embedding e4(4, {ints({5, 0, 0, 7})});
  CHECK(project(e4, {0, 3})[0] == ipt(5, 7));
  CHECK_THROWS_AS(project(e3, {0, 3}), Error);
  CHECK_THROWS_AS(project(e3, {1, 1}), Error);
  CHECK_THROWS_AS(project(e3, {2, 1}), Error);
}

TEST_CASE("embedding invariants") {
  CHECK_THROWS_AS(Embedding(1, {ints({1})}), Error);
  CHECK_THROWS_AS(Embedding(2, {ints({1, 2}), ints({1})}), Error);
  CHECK_THROWS_AS(Embedding(2, {ints({1, 2}), ints({1, 2})}), Error);
  PlaneProjection pp(Graph(2), Embedding(2, {ints({0, 0}), ints({1, 0})}));
  CHECK_THROWS_AS(pp.assign(Edge(0, 1), {0, 2}), Error);
  CHECK_THROWS_AS(PlaneProjection(Graph(3), Embedding(2, {ints({0, 0})})), Error);
}

TEST_CASE("verify examples") {
  // K4 with vertex 3 at the centroid of the outer triangle.
  const PlaneProjection planar = one_plane({{0, 0}, {6, 0}, {0, 6}, {2, 2}}, k4_edges());
  CHECK(verify(planar).ok());

  const PlaneProjection convex = one_plane({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, k4_edges());
  const VerificationReport r = verify(convex);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].kind == FailureKind::kEdgeCrossing);
  CHECK(r.failures[0].witness == std::vector<int>{0, 2, 1, 3});
  CHECK(r.failures[0].plane == PlanePair{0, 1});

  PlaneProjection uncovered = one_plane({{0, 0}, {1, 0}, {0, 1}}, {{0, 1}});
  uncovered.add_unassigned_edge(Edge(1, 2));
  const VerificationReport u = verify(uncovered);
  REQUIRE(u.failures.size() == 1);
  CHECK(u.failures[0].kind == FailureKind::kUncoveredEdge);
  CHECK_FALSE(u.failures[0].plane.has_value());
  CHECK(u.failures[0].witness == std::vector<int>{1, 2});
}

TEST_CASE("verify degenerate kinds") {
  // Vertex 2 sits on edge 0-1 in plane (0,1).
  const PlaneProjection on_edge = one_plane({{0, 0}, {2, 0}, {1, 0}}, {{0, 1}});
  const VerificationReport r = verify(on_edge);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].kind == FailureKind::kVertexOnEdge);
  CHECK(r.failures[0].witness == std::vector<int>{2, 0, 1});

  // Injective in R^3 but coincident in plane (0,1).
  PlaneProjection coincident(Graph(2), Embedding(3, {ints({0, 0, 0}), ints({0, 0, 1})}));
  coincident.assign(Edge(0, 1), {0, 1});
  CHECK(verify(coincident).failures.front().kind == FailureKind::kCoincidentPoints);
  PlaneProjection fine(Graph(2), coincident.embedding());
  fine.assign(Edge(0, 1), {0, 2});
  CHECK(verify(fine).ok());

  // Tiny inputs verify trivially.
  CHECK(verify(one_plane({{0, 0}}, {})).ok());
  CHECK(verify(one_plane({{0, 0}, {1, 1}}, {{0, 1}})).ok());
}

TEST_CASE("verify matches the pairwise oracle on random single-plane drawings") {
  Rng rng(31);
  int failing = 0;
  for (int t = 0; t < 400; ++t) {
    const int n = irand(rng, 2, 8);
    std::vector<std::vector<Rational>> rows;
    std::vector<Point2> pts;
    std::set<std::pair<int, int>> used;
    while (static_cast<int>(pts.size()) < n) {
      const int x = irand(rng, 0, 8), y = irand(rng, 0, 8);
      if (!used.insert({x, y}).second) continue;
      pts.push_back(ipt(x, y));
    }
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (irand(rng, 0, 2) == 0) edges.emplace_back(u, v);
    const VerificationReport got = verify_drawing(pts, edges);
    CHECK(got.failures == plane_failures_oracle(pts, edges, {0, 1}));
    failing += !got.ok();
  }
  CHECK(failing > 50);
}

TEST_CASE("verify is invariant under translation and positive axis scaling") {
  Rng rng(32);
  for (int t = 0; t < 60; ++t) {
    const PlaneProjection pp = random_plane_embedding(rng, irand(rng, 4, 9), {{0, 1}, {1, 2}}, 20);
    const Rational shift(irand(rng, -50, 50), irand(rng, 1, 9));
    const Rational scale(irand(rng, 1, 50), irand(rng, 1, 9));
    const int axis = irand(rng, 0, 2);
    std::vector<std::vector<Rational>> rows = pp.embedding().rows();
    for (auto& r : rows) r[axis] = r[axis] * scale + shift;
    PlaneProjection moved(pp.graph(), Embedding(3, rows));
    for (const auto& [e, planes] : pp.assignment())
      for (const PlanePair& p : planes) moved.assign(e, p);
    CHECK(verify(moved).ok() == verify(pp).ok());
    CHECK(verify(moved).ok());
  }
}

TEST_CASE("saturate examples") {
  const PlaneProjection tri = one_plane({{0, 0}, {1, 0}, {0, 1}}, {});
  CHECK(saturate(tri, {0, 1}).graph().edge_count() == 3);

  const PlaneProjection quad = one_plane({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {});
  const PlaneProjection sq = saturate(quad, {0, 1});
  CHECK(sq.graph().edge_count() == 5);
  CHECK(saturate(sq, {0, 1}) == sq);

  const PlaneProjection crossing = one_plane({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, k4_edges());
  try {
    saturate(crossing, {0, 1});
    FAIL("expected NOT_VERIFIED");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotVerified);
  }
  CHECK_THROWS_AS(saturate(tri, {0, 2}), Error);

  // Collinear points: the outer pair is blocked by the middle vertex.
  const PlaneProjection line = one_plane({{0, 0}, {1, 0}, {2, 0}}, {});
  const PlaneProjection sl = saturate(line, {0, 1});
  CHECK(sl.graph().edge_count() == 2);
  CHECK_FALSE(sl.graph().has_edge(0, 2));
}

TEST_CASE("saturate output verifies and is maximal") {
  Rng rng(33);
  for (int t = 0; t < 80; ++t) {
    const PlaneProjection pp = random_plane_embedding(rng, irand(rng, 3, 10), {{0, 1}, {1, 2}}, 30);
    const PlaneProjection s1 = saturate(pp, {0, 1});
    const PlaneProjection s = saturate(s1, {1, 2});
    CHECK(verify(s).ok());
    CHECK(is_maximal_in_plane(s, {0, 1}));
    CHECK(is_maximal_in_plane(s, {1, 2}));
    // Pre-existing assignments survive; pairs new to a call land in its plane only.
    for (const auto& [e, planes] : pp.assignment())
      for (const PlanePair& p : planes) CHECK(s.planes_of(e)->count(p) == 1);
    for (const auto& [e, planes] : s1.assignment())
      if (!pp.graph().has_edge(e.u, e.v)) CHECK(planes == std::set<PlanePair>{{0, 1}});
  }
}

TEST_CASE("saturated two-plane embeddings share AC and BD and respect 6n-15") {
  Rng rng(34);
  for (int t = 0; t < 60; ++t) {
    const int n = irand(rng, 3, 12);
    const PlaneProjection pp = random_plane_embedding(rng, n, {{0, 1}, {1, 2}});
    const PlaneProjection s = saturate(saturate(pp, {0, 1}), {1, 2});
    CHECK(s.graph().edge_count() <= 6 * n - 15);
    CHECK(count_shared_extremal_edges(s, 1).size() == 2);
  }
}

TEST_CASE("count_shared_extremal_edges errors and small case") {
  PlaneProjection tri(Graph(3), Embedding(3, {ints({0, 0, 0}), ints({1, 1, 2}), ints({2, 2, 1})}));
  for (const Edge& e : {Edge(0, 1), Edge(0, 2), Edge(1, 2)}) {
    tri.assign(e, {0, 1});
    tri.assign(e, {1, 2});
  }
  // A = 0, C = D = 1, B = 2.
  CHECK(count_shared_extremal_edges(tri, 1) == std::set<Edge>{Edge(0, 1), Edge(1, 2)});

  PlaneProjection tied(Graph(3), Embedding(3, {ints({0, 0, 0}), ints({1, 0, 2}), ints({2, 2, 1})}));
  tied.assign(Edge(0, 2), {0, 1});
  tied.assign(Edge(1, 2), {1, 2});
  try {
    count_shared_extremal_edges(tied, 1);
    FAIL("expected TIED_COORDINATES");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTiedCoordinates);
  }
  PlaneProjection one(Graph(3), tri.embedding());
  one.assign(Edge(0, 1), {0, 1});
  CHECK_THROWS_AS(count_shared_extremal_edges(one, 1), Error);
  PlaneProjection wrong_axis(Graph(3), tri.embedding());
  wrong_axis.assign(Edge(0, 1), {0, 1});
  wrong_axis.assign(Edge(0, 2), {0, 2});
  CHECK_THROWS_AS(count_shared_extremal_edges(wrong_axis, 1), Error);
}

TEST_CASE("PPE round trip") {
  Rng rng(35);
  for (int t = 0; t < 40; ++t) {
    PlaneProjection pp = random_plane_embedding(rng, irand(rng, 1, 9), {{0, 1}, {0, 2}, {1, 2}}, 50);
    const std::string text = write_ppe(pp);
    const PlaneProjection back = read_ppe(text);
    CHECK(back == pp);
    CHECK(write_ppe(back) == text);
  }
}

TEST_CASE("PPE big integers and fractions") {
  const Rational big = Rational::from_canonical("123456789012345678901234567890", "11").value();
  PlaneProjection pp(Graph(2), Embedding(2, {{big, Rational(-1, 3)}, {Rational(0), Rational(5, 2)}}));
  pp.assign(Edge(0, 1), {0, 1});
  const std::string text = write_ppe(pp);
  CHECK(text.find("\"123456789012345678901234567890\"") != std::string::npos);
  CHECK(read_ppe(text) == pp);
}

TEST_CASE("PPE reader rejects bad input") {
  const char* bad[] = {
      "{",
      R"({"dimension": 2, "vertices": [{"id": 0, "coords": [[2, 4], [0, 1]]}], "edges": []})",
      R"({"dimension": 2, "vertices": [{"id": 0, "coords": [[1, -1], [0, 1]]}], "edges": []})",
      R"({"dimension": 2, "vertices": [{"id": 0, "coords": [[1, 0], [0, 1]]}], "edges": []})",
      R"({"dimension": 2, "vertices": [{"id": 1, "coords": [[1, 1], [0, 1]]}], "edges": []})",
      R"({"dimension": 2, "vertices": [{"id": 0, "coords": [[1, 1]]}], "edges": []})",
      R"({"dimension": 2, "vertices": [{"id": 0, "coords": [[0, 1], [0, 1]]}, {"id": 1, "coords": [[0, 1], [0, 1]]}], "edges": []})",
      R"({"dimension": 2, "vertices": [{"id": 0, "coords": [[0, 1], [0, 1]]}, {"id": 1, "coords": [[1, 1], [0, 1]]}], "edges": [{"u": 0, "v": 1, "planes": [[0, 2]]}]})",
      R"({"dimension": 2, "vertices": [{"id": 0, "coords": [[0, 1], [0, 1]]}, {"id": 1, "coords": [[1, 1], [0, 1]]}], "edges": [{"u": 0, "v": 0, "planes": []}]})",
      R"({"dimension": 2, "vertices": []})",
  };
  for (const char* text : bad) {
    try {
      read_ppe(std::string(text));
      FAIL("accepted: " << text);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kParseError);
    }
  }
}
