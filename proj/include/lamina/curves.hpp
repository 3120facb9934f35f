#pragma once

#include <array>
#include <vector>

#include "lamina/coords.hpp"
#include "lamina/hexagon.hpp"
#include "lamina/surface.hpp"

namespace lamina {

/// One arc of a realized system inside a hexagon. Positions index the linear
/// order of strand endpoints along the arc's two sides, listed in the order
/// of endpoint_slots(type); A-side positions run in the triangle's ccw
/// direction, corner positions in boundary (ccw) direction.
struct NormalArc {
  int tri;
  HexArcType type;
  std::array<long, 2> positions;
};

struct CurveComponent {
  bool closed;
  std::vector<NormalArc> arcs;  // cyclic when closed, end-to-end otherwise
};

/// What a strand meets when followed across one hexagon.
struct Continuation {
  HexArcType piece;
  int exit_rank;  // position class on the entering side: 0, 1, 2 in ccw order
  bool terminal;
  // terminal: boundary corner reached
  int corner = -1;
  long corner_pos = -1;
  // non-terminal: next edge crossing
  int edge = -1;
  long index = -1;
  Slot next_toward;
};

/// A coordinate realized as a concrete 1-submanifold: per-hexagon arc systems
/// glued across the edge bands by order-preserving matching, plus components
/// recorded as parallel copies of edges (the x' part, which never enters a
/// hexagon).
class CurveSystem {
 public:
  CurveSystem(const IdealTriangulation& tri, const TCoord& c);

  const IdealTriangulation& tri() const { return *tri_; }

  /// Strand count across edge e (the x part of the coordinate).
  long strands_on(int e) const { return edge_count_[e]; }

  /// Piece counts of the arc system inside hexagon t (b and c families only).
  struct HexPieces {
    std::array<long, 3> n;  // strand endpoints per slot side
    std::array<long, 3> b;
    std::array<long, 3> c;
  };
  const HexPieces& hex(int t) const { return hexes_[t]; }

  /// The piece covering position p on slot side s of hexagon t, and where its
  /// other endpoint lands.
  struct PiecePort {
    HexArcType type;
    bool other_is_corner;
    int other;       // slot position (0..2) or corner index k within the triangle
    long other_pos;  // position along that side
  };
  PiecePort piece_at(int t, int s, long p) const;

  /// Follow the strand with canonical index `idx` on edge `e` into the
  /// hexagon on the side of `toward` (one of the two slots of e).
  Continuation follow(int e, long idx, Slot toward) const;

  const std::vector<CurveComponent>& components() const { return components_; }
  /// Edge ids of the parallel-copy components, one entry per component.
  const std::vector<int>& parallel_components() const { return parallel_; }

  int component_of(int e, long idx) const;
  /// Number of edge crossings of a normal component (its strand count).
  long component_length(int comp) const;

  int num_components() const {
    return static_cast<int>(components_.size() + parallel_.size());
  }

 private:
  void trace_components();

  const IdealTriangulation* tri_;
  std::vector<long> edge_count_;
  std::vector<HexPieces> hexes_;
  std::vector<int> parallel_;
  std::vector<CurveComponent> components_;
  std::vector<std::vector<int>> strand_component_;  // per edge, per index
};

/// Realizes a valid coordinate; coord_of(standard_representative(tri, c)) == c.
CurveSystem standard_representative(const IdealTriangulation& tri, const TCoord& c);

/// Reads the coordinate back off a realized system by counting strands per
/// edge and parallel components per edge.
TCoord coord_of(const IdealTriangulation& tri, const CurveSystem& s);

/// Class membership. ES holds for every valid coordinate; CS excludes
/// boundary-parallel loops; CS0 additionally requires all components closed.
struct ClassFlags {
  bool es = false;
  bool cs = false;
  bool cs0 = false;
};

ClassFlags classify_class(const IdealTriangulation& tri, const TCoord& c);

}  // namespace lamina
