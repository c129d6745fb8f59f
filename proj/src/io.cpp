#include "fano/io.hpp"

#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

namespace fano {

using nlohmann::json;

LatticePolytope3 parse_polytope_text(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_line = [&]() {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw input_error("line 1: empty input");
  std::istringstream head(line);
  int dim = 0, n = 0;
  if (!(head >> dim >> n) || dim != 3 || n < 4)
    throw input_error("line " + std::to_string(lineno) +
                      ": expected header '3 <n>' with n >= 4");
  std::vector<Vec3> verts(n);
  for (int row = 0; row < 3; ++row) {
    if (!next_line())
      throw input_error("line " + std::to_string(lineno + 1) +
                        ": missing coordinate row");
    std::istringstream ss(line);
    for (int c = 0; c < n; ++c) {
      Int v;
      if (!(ss >> v))
        throw input_error("line " + std::to_string(lineno) + ": expected " +
                          std::to_string(n) + " integers");
      (row == 0 ? verts[c].x : row == 1 ? verts[c].y : verts[c].z) = v;
    }
    Int extra;
    if (ss >> extra)
      throw input_error("line " + std::to_string(lineno) +
                        ": too many entries");
  }
  return convex_hull3(verts);
}

NamedPolytope parse_polytope_json(const json& j) {
  if (!j.is_object() || !j.contains("id") || !j.contains("vertices"))
    throw input_error("polytope JSON needs 'id' and 'vertices'");
  NamedPolytope np;
  np.id = j.at("id").get<std::string>();
  std::vector<Vec3> verts;
  for (const auto& v : j.at("vertices")) {
    if (!v.is_array() || v.size() != 3)
      throw input_error("vertex of '" + np.id + "' is not a 3-integer array");
    verts.push_back({v[0].get<Int>(), v[1].get<Int>(), v[2].get<Int>()});
  }
  np.poly = convex_hull3(verts);
  return np;
}

std::vector<NamedPolytope> read_polytopes(const std::string& path,
                                          const std::string& format) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open input file: " + path);
  if (format == "text") {
    NamedPolytope np;
    np.id = path;
    np.poly = parse_polytope_text(in);
    return {np};
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw input_error(path + ": " + e.what());
  }
  if (format == "json") return {parse_polytope_json(j)};
  if (format == "batch-json") {
    if (!j.is_array()) throw input_error(path + ": expected a JSON array");
    std::vector<NamedPolytope> out;
    for (const auto& item : j) out.push_back(parse_polytope_json(item));
    return out;
  }
  throw input_error("unknown format: " + format);
}

namespace {

json vec2_json(Vec2 v) { return json::array({v.x, v.y}); }
json vec3_json(Vec3 v) { return json::array({v.x, v.y, v.z}); }

}  // namespace

json subdivision_json(const FacetChoice& fc) {
  json cells = json::array();
  for (const auto& mc : fc.subdivision.cells) {
    json points = json::array(), faces = json::array();
    for (auto v : mc.cell) points.push_back(vec2_json(v));
    for (const auto& face : mc.summand_faces) {
      json fj = json::array();
      for (auto v : face) fj.push_back(vec2_json(v));
      faces.push_back(fj);
    }
    cells.push_back({{"points", points}, {"summand_faces", faces}});
  }
  json parts = json::object();
  for (const auto& [e, part] : fc.edge_partitions)
    parts[std::to_string(e)] = part;
  return {{"cells", cells}, {"edge_partitions", parts}};
}

json amd_json(const Amd& a, const MatchReport& rep) {
  json facets = json::array();
  for (const auto& fc : a.choices) {
    json summands = json::array();
    for (const auto& t : fc.decomposition.summands) {
      json verts = json::array();
      for (auto v : t.verts) verts.push_back(vec2_json(v));
      summands.push_back({{"kind", t.kind}, {"vertices", verts}});
    }
    facets.push_back({{"facet", fc.facet},
                      {"decomposition", summands},
                      {"subdivision", subdivision_json(fc)}});
  }
  json edges = json::array();
  for (const auto& er : rep.edges) {
    json e = {{"edge", er.edge}, {"pass", er.pass}};
    if (!er.pass)
      e["violating_segments"] =
          json::array({er.violating_segments.first, er.violating_segments.second});
    edges.push_back(e);
  }
  return {{"facets", facets},
          {"match", {{"pass", rep.pass}, {"edges", edges}}}};
}

json invariants_json(const SmoothingInvariants& inv) {
  return {{"n", inv.n},       {"q", inv.q},         {"eY", inv.eY},
          {"eYt", inv.eYt},   {"eXeta", inv.eXeta}, {"picY", inv.picY},
          {"sigma", inv.sigma}, {"b2", inv.b2},     {"b3", inv.b3},
          {"degree", inv.degree}, {"h0", inv.h0},   {"t1dim", inv.t1dim}};
}

json fan_json(const Fan3& f) {
  json rays = json::array(), cones = json::array();
  for (auto r : f.rays) rays.push_back(vec3_json(r));
  for (size_t c = 0; c < f.cones.size(); ++c) {
    ConeClass cc = classify_cone(f, static_cast<int>(c));
    json cj = {{"rays", f.cones[c]},
               {"class", cc.kind == ConeKind::BasicSimplex
                             ? "basic"
                             : "parallelogram"}};
    if (cc.kind == ConeKind::UnitParallelogram)
      cj["interior_points"] = cc.interior_points;
    cones.push_back(cj);
  }
  return {{"rays", rays}, {"cones", cones}};
}

json bigint_json(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<long long>::min();
  static const BigInt hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return static_cast<long long>(v);
  return v.str();
}

json poly_json(const LaurentPoly3& w) {
  json terms = json::array();
  for (const auto& [e, c] : w)
    terms.push_back({{"exp", vec3_json(e)}, {"coeff", bigint_json(c)}});
  return terms;
}

std::string amd_digest(const Amd& a) {
  std::string key;
  for (const auto& fc : a.choices) {
    for (const auto& t : fc.decomposition.summands) {
      key += std::to_string(t.kind) + ":";
      for (auto v : t.verts)
        key += std::to_string(v.x) + "," + std::to_string(v.y) + ";";
    }
    key += "|";
    for (const auto& cell : fc.subdivision.tri.cells) {
      for (int v : cell) key += std::to_string(v) + ",";
      key += ";";
    }
    key += "#";
  }
  std::ostringstream os;
  os << std::hex << std::hash<std::string>{}(key);
  return os.str();
}

}  // namespace fano
