#pragma once

#include <cstdint>
#include <string>

namespace planeproj {

enum class BoundKind { kLower, kUpper, kExact };

struct BoundReport {
  std::string quantity;
  std::int64_t value = 0;
  BoundKind kind = BoundKind::kExact;
  std::string source;
};

// Closed-form bounds on the plane-projecting dimension (pdim) and on edge
// counts, all evaluated in exact integer arithmetic.

/// Smallest d with C(d,2) >= r. Throws BAD_INPUT for r < 1.
std::int64_t pdim_lower_from_thickness(std::int64_t r);
/// 2r. Throws BAD_INPUT for r < 1.
std::int64_t pdim_upper_from_thickness(std::int64_t r);
/// 2 * ceil(sqrt(s)). Throws BAD_INPUT for s < 1.
std::int64_t pdim_upper_from_geom_thickness(std::int64_t s);
/// Known thickness of K_n. Throws BAD_INPUT for n < 1.
std::int64_t thickness_Kn(std::int64_t n);
/// Smallest d with (2d-1)^2 >= 2n+7.
std::int64_t pdim_upper_Kn(std::int64_t n);
/// pdim_lower_from_thickness(thickness_Kn(n)).
std::int64_t pdim_lower_Kn(std::int64_t n);
/// 6n - 15; BAD_INPUT for n < 3.
std::int64_t max_edges_two_planes(std::int64_t n);
/// 9n - 24; BAD_INPUT for n < 3.
std::int64_t max_edges_three_planes(std::int64_t n);
/// 2 * ceil(delta / 2). Throws BAD_INPUT for delta < 1.
std::int64_t pdim_upper_from_max_degree(std::int64_t delta);

/// Exact integer ceil(sqrt(x)) for x >= 0.
std::int64_t ceil_sqrt(std::int64_t x);

/// Named query as exposed by the CLI ("kn-upper", "two-plane-max", ...).
/// Throws BAD_INPUT on an unknown query or out-of-range value.
BoundReport evaluate_bound(const std::string& query, std::int64_t value);

}  // namespace planeproj
