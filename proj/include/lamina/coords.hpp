#pragma once

#include <string>
#include <vector>

#include "lamina/surface.hpp"
#include "lamina/types.hpp"

namespace lamina {

/// Coordinate of an essential 1-submanifold class with respect to a fixed
/// triangulation: x_i counts transverse crossings with edge i, x'_i counts
/// components running parallel to edge i.
struct TCoord {
  VecZ x;
  VecZ xp;

  TCoord() = default;
  explicit TCoord(int n) : x(VecZ::Zero(n)), xp(VecZ::Zero(n)) {}
  TCoord(VecZ x_, VecZ xp_) : x(std::move(x_)), xp(std::move(xp_)) {}

  int size() const { return static_cast<int>(x.size()); }

  bool operator==(const TCoord& o) const { return x == o.x && xp == o.xp; }
};

struct CoordViolation {
  enum class Kind { length, negative, complementarity, parity } kind;
  int index;  // edge index, or triangle index for parity
  std::string message;
};

/// Every violated constraint, with its edge/triangle location. Empty = valid.
std::vector<CoordViolation> validate(const IdealTriangulation& tri, const TCoord& c);

inline bool is_valid(const IdealTriangulation& tri, const TCoord& c) {
  return validate(tri, c).empty();
}

void require_valid(const IdealTriangulation& tri, const TCoord& c, const char* what);

/// |c| = sum of all entries.
Int norm(const TCoord& c);

/// L1 distance between coordinates of equal length.
Int l1_distance(const TCoord& u, const TCoord& v);

bool is_even(const TCoord& c);

TCoord scaled(const TCoord& c, const Int& k);

/// A sequence of valid even coordinates from u to v, consecutive entries at
/// L1 distance exactly 2. Decreasing moves run before increasing ones so the
/// complementarity x_i x'_i = 0 holds at every step.
std::vector<TCoord> even_path(const IdealTriangulation& tri, const TCoord& u, const TCoord& v);

}  // namespace lamina
