#pragma once

#include <iosfwd>
#include <string>

#include "planeproj/embedding.hpp"

namespace planeproj {

// PPE interchange file (UTF-8 JSON):
//   {"dimension": d,
//    "vertices": [{"id": v, "coords": [[num, den], ...]}, ...],   sorted by id
//    "edges": [{"u": u, "v": v, "planes": [[i, j], ...]}, ...]}   sorted by (u, v)
// Rationals must be canonical. Integers beyond 64 bits are written as
// decimal strings; readers accept either form.

std::string write_ppe(const PlaneProjection& pp);
void write_ppe(std::ostream& out, const PlaneProjection& pp);

/// Throws PARSE_ERROR on malformed JSON, non-canonical rationals, bad ids,
/// duplicate positions or invalid planes.
PlaneProjection read_ppe(const std::string& text);
PlaneProjection read_ppe(std::istream& in);

PlaneProjection read_ppe_file(const std::string& path);
void write_ppe_file(const std::string& path, const PlaneProjection& pp);

}  // namespace planeproj
