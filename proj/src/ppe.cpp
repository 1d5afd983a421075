#include "planeproj/ppe.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include "json.hpp"
#include "planeproj/error.hpp"

namespace planeproj {

namespace {

using Json = nlohmann::ordered_json;

Json integer_to_json(const mpz_class& z) {
  if (mpz_fits_slong_p(z.get_mpz_t())) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

std::string integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? std::to_string(j.get<std::uint64_t>())
                                  : std::to_string(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
      throw Error(ErrorCode::kParseError, "integer string '" + s + "' is not decimal");
    }
    return s;
  }
  throw Error(ErrorCode::kParseError, "expected an integer, got " + j.dump());
}

int small_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(ErrorCode::kParseError, std::string(what) + " must be an integer");
  const auto v = j.get<std::int64_t>();
  if (v < 0 || v > 1'000'000'000) throw Error(ErrorCode::kParseError, std::string(what) + " out of range");
  return static_cast<int>(v);
}

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw Error(ErrorCode::kParseError, std::string("missing field '") + key + "'");
  }
  return obj.at(key);
}

PlaneProjection from_json(const Json& doc) {
  const int d = small_int(field(doc, "dimension"), "dimension");
  if (d < 2) throw Error(ErrorCode::kParseError, "dimension must be at least 2");

  const Json& verts = field(doc, "vertices");
  if (!verts.is_array()) throw Error(ErrorCode::kParseError, "'vertices' must be an array");
  const int n = static_cast<int>(verts.size());
  std::vector<std::vector<Rational>> rows(n);
  std::vector<char> seen(n, 0);
  for (const Json& vj : verts) {
    const int id = small_int(field(vj, "id"), "vertex id");
    if (id >= n || seen[id]) throw Error(ErrorCode::kParseError, "vertex ids must be 0..n-1, each once");
    seen[id] = 1;
    const Json& cj = field(vj, "coords");
    if (!cj.is_array() || static_cast<int>(cj.size()) != d) {
      throw Error(ErrorCode::kParseError, "vertex " + std::to_string(id) + " needs " + std::to_string(d) + " coords");
    }
    for (const Json& q : cj) {
      if (!q.is_array() || q.size() != 2) throw Error(ErrorCode::kParseError, "coordinate must be [num, den]");
      auto r = Rational::from_canonical(integer_from_json(q[0]), integer_from_json(q[1]));
      if (!r) throw Error(ErrorCode::kParseError, "non-canonical rational " + q.dump());
      rows[id].push_back(std::move(*r));
    }
  }

  Embedding emb;
  try {
    emb = Embedding(d, std::move(rows));
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  PlaneProjection pp(Graph(n), std::move(emb));

  const Json& edges = field(doc, "edges");
  if (!edges.is_array()) throw Error(ErrorCode::kParseError, "'edges' must be an array");
  for (const Json& ej : edges) {
    const int u = small_int(field(ej, "u"), "edge endpoint");
    const int v = small_int(field(ej, "v"), "edge endpoint");
    if (u >= n || v >= n || u == v) throw Error(ErrorCode::kParseError, "bad edge endpoints");
    if (pp.graph().has_edge(u, v)) throw Error(ErrorCode::kParseError, "duplicate edge");
    pp.add_unassigned_edge(Edge(u, v));
    const Json& planes = field(ej, "planes");
    if (!planes.is_array()) throw Error(ErrorCode::kParseError, "'planes' must be an array");
    for (const Json& pj : planes) {
      if (!pj.is_array() || pj.size() != 2) throw Error(ErrorCode::kParseError, "plane must be [i, j]");
      const PlanePair plane{small_int(pj[0], "axis"), small_int(pj[1], "axis")};
      if (!plane.valid_for(d)) throw Error(ErrorCode::kParseError, "invalid plane " + pj.dump());
      pp.assign(Edge(u, v), plane);
    }
  }
  return pp;
}

}  // namespace

void write_ppe(std::ostream& out, const PlaneProjection& pp) { out << write_ppe(pp); }

std::string write_ppe(const PlaneProjection& pp) {
  Json doc;
  doc["dimension"] = pp.dimension();
  Json verts = Json::array();
  for (int v = 0; v < pp.embedding().vertex_count(); ++v) {
    Json coords = Json::array();
    for (const Rational& r : pp.embedding().coords(v)) {
      coords.push_back(Json::array({integer_to_json(r.numerator()), integer_to_json(r.denominator())}));
    }
    verts.push_back({{"id", v}, {"coords", std::move(coords)}});
  }
  doc["vertices"] = std::move(verts);

  Json edges = Json::array();
  for (const Edge& e : pp.graph().edges()) {
    Json planes = Json::array();
    if (const auto* assigned = pp.planes_of(e)) {
      for (const PlanePair& p : *assigned) planes.push_back(Json::array({p.i, p.j}));
    }
    edges.push_back({{"u", e.u}, {"v", e.v}, {"planes", std::move(planes)}});
  }
  doc["edges"] = std::move(edges);
  return doc.dump(1) + "\n";
}

PlaneProjection read_ppe(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  try {
    return from_json(doc);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

PlaneProjection read_ppe(std::istream& in) {
  return read_ppe(std::string(std::istreambuf_iterator<char>(in), {}));
}

PlaneProjection read_ppe_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  return read_ppe(in);
}

void write_ppe_file(const std::string& path, const PlaneProjection& pp) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kBadInput, "cannot write " + path);
  write_ppe(out, pp);
}

}  // namespace planeproj
