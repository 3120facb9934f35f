#pragma once

#include <array>
#include <vector>

#include "lamina/types.hpp"

namespace lamina {

/// Topological type of a compact orientable surface with boundary.
struct SurfaceSpec {
  int genus = 0;
  int boundary_count = 1;

  int euler_characteristic() const { return 2 - 2 * genus - boundary_count; }

  /// Expected counts for a maximal arc system on this surface.
  int expected_edges() const { return 6 * genus - 6 + 3 * boundary_count; }
  int expected_triangles() const { return 4 * genus - 4 + 2 * boundary_count; }

  void validate() const;

  friend bool operator==(const SurfaceSpec&, const SurfaceSpec&) = default;
};

/// One triangle side, addressed as (triangle, position in 0..2).
/// Slot positions are listed in the ccw cyclic order of the triangle.
struct Slot {
  int tri = -1;
  int pos = -1;

  friend bool operator==(const Slot&, const Slot&) = default;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

/// A surface cut along a maximal arc system. Each triangle, truncated at its
/// ideal vertices, is a hexagon whose three A-sides lie along the edge bands
/// and whose three B-sides (corners) lie on the surface boundary. Corner k of
/// a triangle is the B-side opposite slot k; its global id is 3*tri + k.
///
/// Gluing convention: every edge id appears in exactly two slots, and the two
/// sides are identified reversing the ccw direction of both triangles. With
/// all triangles ccw this always produces an oriented surface, so orientation
/// data never needs to be supplied.
class IdealTriangulation {
 public:
  /// Validates the gluing data against `spec` and derives boundary structure.
  IdealTriangulation(SurfaceSpec spec, std::vector<std::array<int, 3>> triangles);

  const SurfaceSpec& spec() const { return spec_; }
  int num_edges() const { return num_edges_; }
  int num_triangles() const { return static_cast<int>(triangles_.size()); }
  int num_corners() const { return 3 * num_triangles(); }

  int edge_at(Slot s) const { return triangles_[s.tri][s.pos]; }
  const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }

  /// The two slots glued along edge e; first() <= second() lexicographically.
  const std::array<Slot, 2>& slots_of_edge(int e) const { return edge_slots_[e]; }

  Slot mate(Slot s) const {
    const auto& pair = edge_slots_[edge_at(s)];
    return pair[0] == s ? pair[1] : pair[0];
  }

  int corner_id(int tri, int k) const { return 3 * tri + k; }

  /// Boundary component containing a given corner.
  int boundary_of_corner(int corner) const { return corner_boundary_[corner]; }

  /// Corners of each boundary component, in boundary-traversal order.
  const std::vector<std::vector<int>>& boundary_cycles() const { return boundary_cycles_; }

  /// Next corner encountered when walking along the boundary.
  int next_boundary_corner(int corner) const;

 private:
  SurfaceSpec spec_;
  std::vector<std::array<int, 3>> triangles_;
  int num_edges_ = 0;
  std::vector<std::array<Slot, 2>> edge_slots_;
  std::vector<int> corner_boundary_;
  std::vector<std::vector<int>> boundary_cycles_;
};

/// Validates explicit gluing data and returns the triangulation.
IdealTriangulation build_triangulation(const SurfaceSpec& spec,
                                       const std::vector<std::array<int, 3>>& triangles);

/// Canonical triangulation for (g, r): fan triangulation of a (4g + 2r - 2)-gon
/// with boundary word a1 b1 a1' b1' ... ag bg ag' bg' c1 c1' ... c_{r-1} c_{r-1}'.
/// Deterministic; the result is validated like any other gluing.
IdealTriangulation builtin_triangulation(const SurfaceSpec& spec);

/// Partition of all corners into the sets B_1 ... B_r by boundary component.
std::vector<std::vector<int>> boundary_partition(const IdealTriangulation& tri);

}  // namespace lamina
