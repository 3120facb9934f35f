#include "lamina/surface.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace lamina {

void SurfaceSpec::validate() const {
  if (genus < 0) throw invalid_argument("surface: genus must be nonnegative");
  if (boundary_count < 1) throw invalid_argument("surface: at least one boundary component required");
  if (euler_characteristic() >= 0)
    throw invalid_argument("surface: Euler characteristic must be negative, got " +
                           std::to_string(euler_characteristic()));
}

IdealTriangulation::IdealTriangulation(SurfaceSpec spec,
                                       std::vector<std::array<int, 3>> triangles)
    : spec_(spec), triangles_(std::move(triangles)) {
  spec_.validate();

  const int T = spec_.expected_triangles();
  const int N = spec_.expected_edges();
  if (static_cast<int>(triangles_.size()) != T)
    throw invalid_argument("triangulation: expected " + std::to_string(T) + " triangles, got " +
                           std::to_string(triangles_.size()));

  // Every edge id labels exactly two slots (a perfect matching on the 3T sides).
  num_edges_ = N;
  std::vector<std::vector<Slot>> uses(N);
  for (int t = 0; t < T; ++t) {
    for (int k = 0; k < 3; ++k) {
      int e = triangles_[t][k];
      if (e < 0 || e >= N)
        throw invalid_argument("triangulation: edge id " + std::to_string(e) + " out of range [0," +
                               std::to_string(N) + ")");
      uses[e].push_back(Slot{t, k});
    }
  }
  edge_slots_.resize(N);
  for (int e = 0; e < N; ++e) {
    if (uses[e].size() != 2)
      throw invalid_argument("triangulation: edge " + std::to_string(e) + " used " +
                             std::to_string(uses[e].size()) + " times, expected 2");
    edge_slots_[e] = {uses[e][0], uses[e][1]};
  }

  // Connectivity of the glued complex (triangles joined through edges).
  std::vector<int> parent(T);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int e = 0; e < N; ++e) parent[find(edge_slots_[e][0].tri)] = find(edge_slots_[e][1].tri);
  for (int t = 0; t < T; ++t)
    if (find(t) != find(0)) throw invalid_argument("triangulation: glued complex is disconnected");

  // Trace boundary cycles: from corner k walk across the band at slot (k+2)%3
  // and land on corner (s'+2)%3 of the mate.
  const int M = 3 * T;
  corner_boundary_.assign(M, -1);
  for (int c0 = 0; c0 < M; ++c0) {
    if (corner_boundary_[c0] >= 0) continue;
    int b = static_cast<int>(boundary_cycles_.size());
    std::vector<int> cycle;
    int c = c0;
    do {
      corner_boundary_[c] = b;
      cycle.push_back(c);
      c = next_boundary_corner(c);
      if (cycle.size() > static_cast<size_t>(M))
        throw invalid_argument("triangulation: boundary trace failed to close");
    } while (c != c0);
    boundary_cycles_.push_back(std::move(cycle));
  }
  if (static_cast<int>(boundary_cycles_.size()) != spec_.boundary_count)
    throw invalid_argument("triangulation: traced " + std::to_string(boundary_cycles_.size()) +
                           " boundary cycles, spec has r = " + std::to_string(spec_.boundary_count));
}

int IdealTriangulation::next_boundary_corner(int corner) const {
  int t = corner / 3, k = corner % 3;
  Slot out{t, (k + 2) % 3};
  Slot in = mate(out);
  return corner_id(in.tri, (in.pos + 2) % 3);
}

IdealTriangulation build_triangulation(const SurfaceSpec& spec,
                                       const std::vector<std::array<int, 3>>& triangles) {
  return IdealTriangulation(spec, triangles);
}

IdealTriangulation builtin_triangulation(const SurfaceSpec& spec) {
  spec.validate();
  const int g = spec.genus, r = spec.boundary_count;
  const int K = 4 * g + 2 * r - 2;  // polygon sides; K >= 4 whenever chi < 0, r >= 1

  // Side pairing by the boundary word. Pair p of sides; edge id = p.
  std::vector<int> side_edge(K, -1);
  int pair_count = 0;
  for (int t = 0; t < g; ++t) {
    side_edge[4 * t + 0] = side_edge[4 * t + 2] = pair_count++;
    side_edge[4 * t + 1] = side_edge[4 * t + 3] = pair_count++;
  }
  for (int u = 0; u + 1 < r; ++u) {
    side_edge[4 * g + 2 * u] = side_edge[4 * g + 2 * u + 1] = pair_count++;
  }
  auto diag_edge = [&](int j) { return pair_count + (j - 2); };  // diagonal (v0, vj), j = 2..K-2

  // Fan triangulation from vertex 0; triangle j spans (v0, v_{j+1}, v_{j+2}).
  std::vector<std::array<int, 3>> tris;
  for (int j = 0; j <= K - 3; ++j) {
    int left = (j == 0) ? side_edge[0] : diag_edge(j + 1);
    int bottom = side_edge[j + 1];
    int right = (j == K - 3) ? side_edge[K - 1] : diag_edge(j + 2);
    tris.push_back({left, bottom, right});
  }
  return IdealTriangulation(spec, std::move(tris));
}

std::vector<std::vector<int>> boundary_partition(const IdealTriangulation& tri) {
  std::vector<std::vector<int>> parts(tri.spec().boundary_count);
  for (int c = 0; c < tri.num_corners(); ++c) parts[tri.boundary_of_corner(c)].push_back(c);
  return parts;
}

}  // namespace lamina
