#pragma once

#include <array>

#include "lamina/types.hpp"

namespace lamina {

/// Arc types in the hexagon. Sides are labeled cyclically
///   A_0, C_2, A_1, C_0, A_2, C_1
/// where A_s is the side glued to an edge band (slot s of the triangle) and
/// C_k is the boundary corner opposite A_k. Indices are 0-based throughout.
///
///   a_k joins the two corners adjacent to A_k (an arc parallel to A_k),
///   b_k joins A_{k+1} and A_{k+2}   (an arc cutting off corner C_k),
///   c_k joins A_k and C_k           (an arc reaching the boundary).
enum class HexArcFamily { a, b, c };

struct HexArcType {
  HexArcFamily family;
  int index;  // 0..2

  friend bool operator==(const HexArcType&, const HexArcType&) = default;
};

constexpr int kHexArcTypes = 9;

/// Dense id in 0..8: a_0..a_2, b_0..b_2, c_0..c_2.
int type_id(HexArcType t);
HexArcType type_of(int id);

/// Circle layout of the six sides, in ccw order A_0, C_2, A_1, C_0, A_2, C_1.
int circle_slot_of_side(int s);    // A_s -> 2s
int circle_slot_of_corner(int k);  // C_k -> (2k + 3) % 6

/// The two circle slots holding the endpoints of an arc type.
std::array<int, 2> endpoint_slots(HexArcType t);

/// Two arc types admit disjoint representatives iff their endpoint side pairs
/// do not strictly interleave (a shared side always allows nesting).
bool types_compatible(HexArcType u, HexArcType v);

/// A chord in the hexagon given by two exact positions on the boundary
/// circle, measured in side units: side at circle slot m occupies [m, m+1).
struct HexChord {
  Rat p1;
  Rat p2;
};

/// Builds a chord for an arc type with fractional offsets along its two sides
/// (offsets in (0,1); defaults place the endpoints at the side midpoints).
HexChord chord_of(HexArcType t, const Rat& offset1 = Rat(1, 2), const Rat& offset2 = Rat(1, 2));

/// True iff the endpoint pairs strictly interleave in the cyclic order.
/// Throws on coincident endpoints.
bool chords_cross(const HexChord& u, const HexChord& v);

/// The coordinate (x | x') of an arc system in the hexagon: x_s counts
/// endpoints on A_s, x'_s counts arcs parallel to A_s.
struct HexCoord {
  Eigen::Matrix<Int, 3, 1> x;
  Eigen::Matrix<Int, 3, 1> xp;

  HexCoord();
  HexCoord(std::array<long, 3> x_, std::array<long, 3> xp_);

  bool operator==(const HexCoord& o) const { return x == o.x && xp == o.xp; }
};

/// Triangle-inequality set: each entry at most the sum of the other two.
bool in_triangle_set(const Int& a, const Int& b, const Int& c);

/// x_s x'_s = 0 for all s, and if x lies in the triangle set then its sum is even.
bool hex_admissible(const HexCoord& h);

/// Multiset of arc types (a compatible one represents an arc system).
struct HexArcSystem {
  Eigen::Matrix<Int, 9, 1> counts;

  HexArcSystem() { counts.setZero(); }

  Int& at(HexArcType t) { return counts(type_id(t)); }
  const Int& at(HexArcType t) const { return counts(type_id(t)); }
  Int& a(int k) { return counts(k); }
  Int& b(int k) { return counts(3 + k); }
  Int& c(int k) { return counts(6 + k); }
  const Int& a(int k) const { return counts(k); }
  const Int& b(int k) const { return counts(3 + k); }
  const Int& c(int k) const { return counts(6 + k); }

  /// Number of arcs in the system.
  Int total() const { return counts.sum(); }

  bool operator==(const HexArcSystem& o) const { return counts == o.counts; }
};

/// All present type pairs are compatible.
bool system_compatible(const HexArcSystem& s);

/// Coordinate of a compatible system: x_s = b_{s+1} + b_{s+2} + c_s, x'_s = a_s.
HexCoord hex_to_coord(const HexArcSystem& s);

/// Standard arc system with a given admissible coordinate (the five-case
/// construction; inverse of hex_to_coord).
HexArcSystem hex_from_coord(const HexCoord& h);

/// Surgery lowering x_k by 2. Branches, in order: replace b_{k+1} u b_{k+2}
/// by b_k; delete 2 c_k; replace 2 b_j by 2 c_i where b_j is the b-arc
/// through A_k that is present and i is the remaining index.
HexArcSystem surgery_down(const HexArcSystem& s, int k);

/// Surgery raising x_k by 2 (inverse direction). Branches, in order: replace
/// b_k by b_{k+1} u b_{k+2} when no c_{k+1}, c_{k+2} present; add 2 c_k when
/// none of b_k, c_{k+1}, c_{k+2} present; else replace 2 c_i by 2 b_j.
HexArcSystem surgery_up(const HexArcSystem& s, int k);

}  // namespace lamina
