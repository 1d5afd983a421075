#include "planeproj/bounds.hpp"

#include "planeproj/error.hpp"

namespace planeproj {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kBadInput, what);
}

// Guards every search loop below against overflow.
constexpr std::int64_t kMaxArgument = std::int64_t{1} << 40;

}  // namespace

std::int64_t ceil_sqrt(std::int64_t x) {
  require(x >= 0 && x <= kMaxArgument, "ceil_sqrt argument out of range");
  std::int64_t lo = 0;
  std::int64_t hi = 1 << 21;
  while (lo < hi) {
    const std::int64_t mid = (lo + hi) / 2;
    if (mid * mid >= x) hi = mid; else lo = mid + 1;
  }
  return lo;
}

std::int64_t pdim_lower_from_thickness(std::int64_t r) {
  require(r >= 1 && r <= kMaxArgument, "thickness must be >= 1");
  std::int64_t d = 2;
  while (d * (d - 1) / 2 < r) ++d;
  return d;
}

std::int64_t pdim_upper_from_thickness(std::int64_t r) {
  require(r >= 1 && r <= kMaxArgument, "thickness must be >= 1");
  return 2 * r;
}

std::int64_t pdim_upper_from_geom_thickness(std::int64_t s) {
  require(s >= 1 && s <= kMaxArgument, "geometric thickness must be >= 1");
  return 2 * ceil_sqrt(s);
}

std::int64_t thickness_Kn(std::int64_t n) {
  require(n >= 1 && n <= kMaxArgument, "n must be >= 1");
  if (n <= 4) return 1;
  if (n <= 8) return 2;
  if (n <= 10) return 3;
  return (n + 2 + 5) / 6;
}

std::int64_t pdim_upper_Kn(std::int64_t n) {
  require(n >= 1 && n <= kMaxArgument, "n must be >= 1");
  std::int64_t d = 1;
  while ((2 * d - 1) * (2 * d - 1) < 2 * n + 7) ++d;
  return d;
}

std::int64_t pdim_lower_Kn(std::int64_t n) { return pdim_lower_from_thickness(thickness_Kn(n)); }

std::int64_t max_edges_two_planes(std::int64_t n) {
  require(n >= 3 && n <= kMaxArgument, "n must be >= 3");
  return 6 * n - 15;
}

std::int64_t max_edges_three_planes(std::int64_t n) {
  require(n >= 3 && n <= kMaxArgument, "n must be >= 3");
  return 9 * n - 24;
}

std::int64_t pdim_upper_from_max_degree(std::int64_t delta) {
  require(delta >= 1 && delta <= kMaxArgument, "max degree must be >= 1");
  return 2 * ((delta + 1) / 2);
}

BoundReport evaluate_bound(const std::string& query, std::int64_t value) {
  if (query == "kn-upper") {
    return {"pdim(K_n)", pdim_upper_Kn(value), BoundKind::kUpper,
            "complete graphs: pdim(K_n) <= ceil((sqrt(2n+7)+1)/2)"};
  }
  if (query == "kn-lower") {
    return {"pdim(K_n)", pdim_lower_Kn(value), BoundKind::kLower,
            "thickness of K_n with r <= C(pdim,2)"};
  }
  if (query == "kn-thickness") {
    return {"thickness(K_n)", thickness_Kn(value), BoundKind::kExact,
            "known thickness of K_n: 1, 2, 3, ceil((n+2)/6)"};
  }
  if (query == "two-plane-max") {
    return {"max |E| on two orthogonal planes", max_edges_two_planes(value), BoundKind::kUpper,
            "two-plane bound 6n-15 (tight for n >= 14)"};
  }
  if (query == "three-plane-max") {
    return {"max |E| in R^3", max_edges_three_planes(value), BoundKind::kUpper,
            "three-plane bound 9n-24"};
  }
  if (query == "from-thickness") {
    return {"pdim(G)", pdim_lower_from_thickness(value), BoundKind::kLower,
            "r <= C(pdim,2); upper bound 2r = " + std::to_string(pdim_upper_from_thickness(value))};
  }
  if (query == "from-geom-thickness") {
    return {"pdim(G)", pdim_upper_from_geom_thickness(value), BoundKind::kUpper,
            "pdim <= 2 ceil(sqrt(s)) via the repeated-coordinate lift"};
  }
  if (query == "from-max-degree") {
    return {"pdim(G)", pdim_upper_from_max_degree(value), BoundKind::kUpper,
            "thickness <= ceil(delta/2), so pdim <= 2 ceil(delta/2)"};
  }
  throw Error(ErrorCode::kBadInput, "unknown bound query '" + query + "'");
}

}  // namespace planeproj
