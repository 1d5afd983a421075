#pragma once

#include <string>

#include "planeproj/embedding.hpp"
#include "planeproj/error.hpp"
#include "planeproj/verify.hpp"

namespace planeproj::detail {

inline std::string describe(const Failure& f) {
  std::string s(failure_kind_name(f.kind));
  if (f.plane) s += " in plane (" + std::to_string(f.plane->i) + "," + std::to_string(f.plane->j) + ")";
  for (int w : f.witness) s += " " + std::to_string(w);
  return s;
}

// Final check every constructor runs on its output.
inline PlaneProjection gated(PlaneProjection pp, const char* who) {
  const VerificationReport r = verify(pp);
  if (!r.ok()) {
    throw Error(ErrorCode::kConstructionFailed, std::string(who) + ": " + describe(r.failures.front()));
  }
  return pp;
}

}  // namespace planeproj::detail
