#include <cmath>
#include <numbers>

#include "gate.hpp"
#include "planeproj/bounds.hpp"
#include "planeproj/constructors.hpp"
#include "planeproj/decomposition.hpp"

namespace planeproj {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;

std::vector<PlanePair> all_planes(int d) {
  std::vector<PlanePair> out;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) out.push_back({i, j});
  return out;
}

}  // namespace

bool has_common_convex_order(const Embedding& e) {
  if (e.vertex_count() < 3) return false;
  std::optional<std::vector<int>> first;
  for (const PlanePair& p : all_planes(e.dimension())) {
    const std::vector<Point2> pts = project(e, p);
    auto order = convex_cyclic_order(pts);
    if (!order) return false;
    if (!first) first = std::move(order);
    else if (*first != *order) return false;
  }
  return true;
}

Embedding convex_projection_points(int n, int d) {
  if (n < 3 || d < 2) throw Error(ErrorCode::kBadInput, "convex_projection_points needs n >= 3, d >= 2");
  const long double delta = kPi / (2.0L * d);
  for (int bits : {8, 16, 32, 60}) {
    std::vector<std::vector<Rational>> rows(n);
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < d; ++j) {
        rows[k].push_back(Rational::dyadic_approx(std::cos(2.0L * kPi * k / n + j * delta), bits));
      }
    }
    // Low precision may merge points; that is just another failed round.
    bool distinct = true;
    for (int a = 0; a < n && distinct; ++a)
      for (int b = a + 1; b < n && distinct; ++b) distinct = rows[a] != rows[b];
    if (!distinct) continue;
    Embedding e(d, std::move(rows));
    if (has_common_convex_order(e)) return e;
  }
  throw Error(ErrorCode::kConstructionFailed,
              "no convex point set at 60-bit precision for n=" + std::to_string(n));
}

int complete_graph_dimension(int n) {
  if (n < 3) throw Error(ErrorCode::kBadInput, "complete_graph_embedding needs n >= 3");
  const int rounded = (n + 3) / 4 * 4;
  return static_cast<int>(pdim_upper_Kn(rounded));
}

PlaneProjection complete_graph_embedding(int n) {
  const int d = complete_graph_dimension(n);
  const int rounded = (n + 3) / 4 * 4;
  const int k = rounded / 2;  // |S| = |T| = k, k even
  const std::vector<PlanePair> planes = all_planes(d);
  const auto paths = hamiltonian_path_decomposition(k / 2);
  if (static_cast<int>(planes.size()) < k / 2) {
    throw Error(ErrorCode::kConstructionFailed, "fewer planes than Hamiltonian paths");
  }

  // T sits on the unit "ellipse" scaled by lambda. S is a small copy placed
  // next to T's centre, shifted toward the direction between two T points:
  // a concentric S would be cut by every diameter of T.
  const long double delta = kPi / (2.0L * d);
  const long double beta = kPi / k;
  const long double alpha = (k % 4 == 0 ? -1.0L : 1.0L) * kPi / (2.0L * k);
  const long double radius = 1.0L / (4.0L * k);
  constexpr int kBits = 52;

  std::vector<std::vector<Rational>> s_rows(k), t_unit(k);
  for (int s = 0; s < k; ++s) {
    for (int j = 0; j < d; ++j) {
      const long double c = std::cos(beta + j * delta) +
                            radius * std::cos(2.0L * kPi * s / k + alpha + j * delta);
      s_rows[s].push_back(Rational::dyadic_approx(c, kBits));
    }
  }
  for (int t = 0; t < k; ++t) {
    for (int j = 0; j < d; ++j) {
      t_unit[t].push_back(Rational::dyadic_approx(std::cos(2.0L * kPi * t / k + j * delta), kBits));
    }
  }

  std::string last_failure = "none";
  Rational lambda(2);
  for (int step = 1; step <= 40; ++step, lambda *= Rational(2)) {
    std::vector<std::vector<Rational>> rows;
    for (int v = 0; v < n; ++v) {
      if (v < k) {
        rows.push_back(s_rows[v]);
      } else {
        std::vector<Rational> r;
        for (const Rational& c : t_unit[v - k]) r.push_back(c * lambda);
        rows.push_back(std::move(r));
      }
    }
    PlaneProjection pp(Graph(n), Embedding(d, std::move(rows)));
    auto put = [&](int a, int b, PlanePair p) {
      if (a < n && b < n) pp.assign(Edge(a, b), p);
    };
    for (int p = 0; p < k / 2; ++p) {
      const auto& path = paths[p];
      int diam_a = -1, diam_b = -1;
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        put(path[i], path[i + 1], planes[p]);
        put(k + path[i], k + path[i + 1], planes[p]);
        if (std::abs(path[i] - path[i + 1]) == k / 2) {
          diam_a = path[i];
          diam_b = path[i + 1];
        }
      }
      if (diam_a < 0) throw Error(ErrorCode::kConstructionFailed, "path without a diametric pair");
      for (int s = 0; s < k; ++s) {
        put(k + diam_a, s, planes[p]);
        put(k + diam_b, s, planes[p]);
      }
    }
    const VerificationReport report = verify(pp);
    if (report.ok()) {
      if (pp.graph().edge_count() != n * (n - 1) / 2) {
        throw Error(ErrorCode::kConstructionFailed, "complete graph not fully covered");
      }
      return pp;
    }
    last_failure = detail::describe(report.failures.front());
  }
  throw Error(ErrorCode::kConstructionFailed,
              "K_" + std::to_string(n) + " did not verify up to scale 2^40; last: " + last_failure);
}

}  // namespace planeproj
