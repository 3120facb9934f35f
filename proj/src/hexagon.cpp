#include "lamina/hexagon.hpp"

#include <string>

namespace lamina {

int type_id(HexArcType t) {
  return static_cast<int>(t.family) * 3 + t.index;
}

HexArcType type_of(int id) {
  return HexArcType{static_cast<HexArcFamily>(id / 3), id % 3};
}

int circle_slot_of_side(int s) { return 2 * s; }
int circle_slot_of_corner(int k) { return (2 * k + 3) % 6; }

std::array<int, 2> endpoint_slots(HexArcType t) {
  int k = t.index;
  switch (t.family) {
    case HexArcFamily::a:
      return {circle_slot_of_corner((k + 1) % 3), circle_slot_of_corner((k + 2) % 3)};
    case HexArcFamily::b:
      return {circle_slot_of_side((k + 1) % 3), circle_slot_of_side((k + 2) % 3)};
    case HexArcFamily::c:
      return {circle_slot_of_side(k), circle_slot_of_corner(k)};
  }
  throw invalid_argument("endpoint_slots: bad type");
}

namespace {

// Strict cyclic betweenness: b lies in the open ccw arc (a, c), all distinct.
bool cyclic_between(const Rat& a, const Rat& b, const Rat& c) {
  if (a < c) return a < b && b < c;
  return b > a || b < c;
}

}  // namespace

bool types_compatible(HexArcType u, HexArcType v) {
  auto eu = endpoint_slots(u);
  auto ev = endpoint_slots(v);
  // A shared side lets parallel or nested representatives avoid each other.
  if (eu[0] == ev[0] || eu[0] == ev[1] || eu[1] == ev[0] || eu[1] == ev[1]) return true;
  Rat a(eu[0]), b(eu[1]);
  return cyclic_between(a, Rat(ev[0]), b) != cyclic_between(a, Rat(ev[1]), b);
}

HexChord chord_of(HexArcType t, const Rat& offset1, const Rat& offset2) {
  auto e = endpoint_slots(t);
  return HexChord{Rat(e[0]) + offset1, Rat(e[1]) + offset2};
}

bool chords_cross(const HexChord& u, const HexChord& v) {
  if (u.p1 == u.p2 || v.p1 == v.p2 || u.p1 == v.p1 || u.p1 == v.p2 || u.p2 == v.p1 ||
      u.p2 == v.p2)
    throw invalid_argument("chords_cross: coincident endpoints");
  return cyclic_between(u.p1, v.p1, u.p2) != cyclic_between(u.p1, v.p2, u.p2);
}

HexCoord::HexCoord() {
  x.setZero();
  xp.setZero();
}

HexCoord::HexCoord(std::array<long, 3> x_, std::array<long, 3> xp_) {
  for (int i = 0; i < 3; ++i) {
    x(i) = Int(x_[i]);
    xp(i) = Int(xp_[i]);
  }
}

bool in_triangle_set(const Int& a, const Int& b, const Int& c) {
  return a + b >= c && b + c >= a && c + a >= b;
}

bool hex_admissible(const HexCoord& h) {
  for (int i = 0; i < 3; ++i) {
    if (h.x(i) < 0 || h.xp(i) < 0) return false;
    if (h.x(i) * h.xp(i) != 0) return false;
  }
  if (in_triangle_set(h.x(0), h.x(1), h.x(2)) && !is_even(h.x.sum())) return false;
  return true;
}

bool system_compatible(const HexArcSystem& s) {
  for (int i = 0; i < kHexArcTypes; ++i) {
    if (s.counts(i) < 0) return false;
    if (s.counts(i) == 0) continue;
    for (int j = i + 1; j < kHexArcTypes; ++j) {
      if (s.counts(j) == 0) continue;
      if (!types_compatible(type_of(i), type_of(j))) return false;
    }
  }
  return true;
}

HexCoord hex_to_coord(const HexArcSystem& s) {
  if (!system_compatible(s)) throw invalid_argument("hex_to_coord: incompatible multiset");
  HexCoord h;
  for (int k = 0; k < 3; ++k) {
    h.x(k) = s.b((k + 1) % 3) + s.b((k + 2) % 3) + s.c(k);
    h.xp(k) = s.a(k);
  }
  return h;
}

HexArcSystem hex_from_coord(const HexCoord& h) {
  if (!hex_admissible(h)) throw invalid_argument("hex_from_coord: inadmissible coordinate");
  HexArcSystem s;
  int positive = 0;
  for (int k = 0; k < 3; ++k)
    if (h.xp(k) > 0) ++positive;

  if (positive == 3) {
    for (int k = 0; k < 3; ++k) s.a(k) = h.xp(k);
    return s;
  }
  if (positive == 2) {
    int i = 0;
    while (h.xp(i) > 0) ++i;
    s.a((i + 1) % 3) = h.xp((i + 1) % 3);
    s.a((i + 2) % 3) = h.xp((i + 2) % 3);
    s.c(i) = h.x(i);
    return s;
  }
  if (positive == 1) {
    int k = 0;
    while (h.xp(k) == 0) ++k;
    int i = (k + 1) % 3, j = (k + 2) % 3;
    if (h.x(i) < h.x(j)) std::swap(i, j);
    s.a(k) = h.xp(k);
    s.b(k) = h.x(j);
    s.c(i) = h.x(i) - h.x(j);
    return s;
  }
  if (in_triangle_set(h.x(0), h.x(1), h.x(2))) {
    for (int k = 0; k < 3; ++k) s.b(k) = (h.x((k + 1) % 3) + h.x((k + 2) % 3) - h.x(k)) / 2;
    return s;
  }
  // One entry dominates the other two.
  int k = 0;
  for (int m = 1; m < 3; ++m)
    if (h.x(m) > h.x(k)) k = m;
  int i = (k + 1) % 3, j = (k + 2) % 3;
  s.b(i) = h.x(j);
  s.b(j) = h.x(i);
  s.c(k) = h.x(k) - h.x(i) - h.x(j);
  return s;
}

HexArcSystem surgery_down(const HexArcSystem& s, int k) {
  if (k < 0 || k >= 3) throw invalid_argument("surgery_down: side index out of range");
  if (!system_compatible(s)) throw invalid_argument("surgery_down: incompatible multiset");
  HexCoord h = hex_to_coord(s);
  if (h.x(k) < 2) throw invalid_argument("surgery_down: x_k < 2");

  int i = (k + 1) % 3, j = (k + 2) % 3;
  HexArcSystem out = s;
  if (s.b(i) > 0 && s.b(j) > 0) {
    out.b(i) -= 1;
    out.b(j) -= 1;
    out.b(k) += 1;
    return out;
  }
  if (s.c(k) > 0) {
    if (s.c(k) < 2) throw invalid_argument("surgery_down: need two copies of c_k");
    out.c(k) -= 2;
    return out;
  }
  // Exactly one of the b-arcs through A_k is present; trade two of it for two
  // c-arcs at the opposite index.
  if (s.b(i) == 0 && s.b(j) == 0) throw invalid_argument("surgery_down: x_k not carried by b-arcs");
  int present = s.b(i) > 0 ? i : j;   // b_present joins A_k and A_other
  int other = present == i ? j : i;
  if (s.b(present) < 2) throw invalid_argument("surgery_down: need two copies of the b-arc");
  out.b(present) -= 2;
  out.c(other) += 2;
  return out;
}

HexArcSystem surgery_up(const HexArcSystem& s, int k) {
  if (k < 0 || k >= 3) throw invalid_argument("surgery_up: side index out of range");
  if (!system_compatible(s)) throw invalid_argument("surgery_up: incompatible multiset");
  if (s.a(k) > 0) throw invalid_argument("surgery_up: result would violate x_k x'_k = 0");

  int i = (k + 1) % 3, j = (k + 2) % 3;
  HexArcSystem out = s;
  if (s.b(k) > 0 && s.c(i) == 0 && s.c(j) == 0) {
    out.b(k) -= 1;
    out.b(i) += 1;
    out.b(j) += 1;
    return out;
  }
  if (s.b(k) == 0 && s.c(i) == 0 && s.c(j) == 0) {
    out.c(k) += 2;
    return out;
  }
  // Some c through a side other than A_k is present; trade two of it for the
  // b-arc joining A_k to the same side.
  int ci = s.c(i) > 0 ? i : j;  // c_ci joins A_ci to the corner; b_j joins A_k, A_ci for j = other
  int bj = ci == i ? j : i;
  if (s.c(ci) < 2) throw invalid_argument("surgery_up: need two copies of the c-arc");
  out.c(ci) -= 2;
  out.b(bj) += 2;
  return out;
}

}  // namespace lamina
