#include "lamina/coords.hpp"

#include "lamina/hexagon.hpp"

namespace lamina {

std::vector<CoordViolation> validate(const IdealTriangulation& tri, const TCoord& c) {
  std::vector<CoordViolation> out;
  const int n = tri.num_edges();
  if (c.x.size() != n || c.xp.size() != n) {
    out.push_back({CoordViolation::Kind::length, -1,
                   "expected " + std::to_string(n) + " entries, got x:" +
                       std::to_string(c.x.size()) + " xp:" + std::to_string(c.xp.size())});
    return out;
  }
  for (int i = 0; i < n; ++i) {
    if (c.x(i) < 0 || c.xp(i) < 0)
      out.push_back({CoordViolation::Kind::negative, i, "negative entry at edge " + std::to_string(i)});
    else if (c.x(i) * c.xp(i) != 0)
      out.push_back({CoordViolation::Kind::complementarity, i,
                     "x and x' both positive at edge " + std::to_string(i)});
  }
  if (!out.empty()) return out;
  for (int t = 0; t < tri.num_triangles(); ++t) {
    const auto& e = tri.triangles()[t];
    const Int &a = c.x(e[0]), &b = c.x(e[1]), &d = c.x(e[2]);
    if (in_triangle_set(a, b, d) && !is_even(a + b + d))
      out.push_back({CoordViolation::Kind::parity, t,
                     "odd crossing sum on triangle " + std::to_string(t)});
  }
  return out;
}

void require_valid(const IdealTriangulation& tri, const TCoord& c, const char* what) {
  auto v = validate(tri, c);
  if (!v.empty()) throw invalid_argument(std::string(what) + ": " + v.front().message);
}

Int norm(const TCoord& c) { return c.x.sum() + c.xp.sum(); }

Int l1_distance(const TCoord& u, const TCoord& v) {
  return lamina::l1_distance(u.x, v.x) + lamina::l1_distance(u.xp, v.xp);
}

bool is_even(const TCoord& c) { return all_even(c.x) && all_even(c.xp); }

TCoord scaled(const TCoord& c, const Int& k) { return TCoord(k * c.x, k * c.xp); }

std::vector<TCoord> even_path(const IdealTriangulation& tri, const TCoord& u, const TCoord& v) {
  require_valid(tri, u, "even_path(u)");
  require_valid(tri, v, "even_path(v)");
  if (!is_even(u) || !is_even(v)) throw invalid_argument("even_path: inputs must be even");

  std::vector<TCoord> path{u};
  TCoord w = u;
  auto step = [&](Int& entry, const Int& target) {
    while (entry != target) {
      entry += entry < target ? 2 : -2;
      path.push_back(w);
    }
  };
  // Decreasing moves first keep x_i x'_i = 0 before any entry grows.
  for (int i = 0; i < w.size(); ++i) {
    if (v.x(i) < w.x(i)) step(w.x(i), v.x(i));
    if (v.xp(i) < w.xp(i)) step(w.xp(i), v.xp(i));
  }
  for (int i = 0; i < w.size(); ++i) {
    step(w.x(i), v.x(i));
    step(w.xp(i), v.xp(i));
  }
  return path;
}

}  // namespace lamina
