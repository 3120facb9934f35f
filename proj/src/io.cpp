#include "lamina/io.hpp"

#include <fstream>
#include <limits>

namespace lamina {

using nlohmann::json;

json triangulation_to_json(const IdealTriangulation& tri) {
  json j;
  j["genus"] = tri.spec().genus;
  j["boundary"] = tri.spec().boundary_count;
  j["triangles"] = json::array();
  for (const auto& t : tri.triangles()) j["triangles"].push_back({t[0], t[1], t[2]});
  return j;
}

IdealTriangulation triangulation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("genus") || !j.contains("boundary") || !j.contains("triangles"))
    throw invalid_argument("triangulation json: need genus, boundary, triangles");
  SurfaceSpec spec{j.at("genus").get<int>(), j.at("boundary").get<int>()};
  std::vector<std::array<int, 3>> tris;
  for (const auto& row : j.at("triangles")) {
    if (!row.is_array() || row.size() != 3)
      throw invalid_argument("triangulation json: each triangle needs 3 edge ids");
    tris.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<int>()});
  }
  return build_triangulation(spec, tris);
}

json int_to_json(const Int& v) {
  if (v >= Int(std::numeric_limits<std::int64_t>::min()) &&
      v <= Int(std::numeric_limits<std::int64_t>::max()))
    return static_cast<std::int64_t>(v);
  return v.str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw invalid_argument("expected integer or decimal string");
}

json tcoord_to_json(const TCoord& c) {
  json jx = json::array(), jxp = json::array();
  for (int i = 0; i < c.size(); ++i) {
    jx.push_back(int_to_json(c.x(i)));
    jxp.push_back(int_to_json(c.xp(i)));
  }
  return json{{"x", jx}, {"xp", jxp}};
}

TCoord tcoord_from_json(const json& j) {
  if (!j.is_object() || !j.contains("x")) throw invalid_argument("coordinate json: need field x");
  const auto& jx = j.at("x");
  TCoord c(static_cast<int>(jx.size()));
  for (size_t i = 0; i < jx.size(); ++i) c.x(static_cast<int>(i)) = int_from_json(jx[i]);
  if (j.contains("xp")) {
    const auto& jxp = j.at("xp");
    if (jxp.size() != jx.size()) throw invalid_argument("coordinate json: x and xp lengths differ");
    for (size_t i = 0; i < jxp.size(); ++i) c.xp(static_cast<int>(i)) = int_from_json(jxp[i]);
  }
  return c;
}

std::string rat_to_string(const Rat& v) {
  std::string s = numerator(v).str();
  if (denominator(v) != 1) s += "/" + denominator(v).str();
  return s;
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Int num(s.substr(0, slash)), den(s.substr(slash + 1));
  if (den == 0) throw invalid_argument("rational with zero denominator");
  return Rat(num) / Rat(den);
}

json vecq_to_json(const VecQ& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(rat_to_string(v(i)));
  return arr;
}

VecQ vecq_from_json(const json& j) {
  if (!j.is_array()) throw invalid_argument("rational vector json: expected array");
  VecQ v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) {
    const auto& el = j[i];
    if (el.is_string())
      v(static_cast<Eigen::Index>(i)) = rat_from_string(el.get<std::string>());
    else if (el.is_number_integer())
      v(static_cast<Eigen::Index>(i)) = Rat(el.get<std::int64_t>());
    else
      throw invalid_argument("rational vector json: expected string or integer entries");
  }
  return v;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_argument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw invalid_argument("parse error in " + path + ": " + e.what());
  }
}

}  // namespace lamina
