#include "lamina/curves.hpp"

#include <algorithm>

namespace lamina {

namespace {

NormalArc make_arc(int t, int entering_side, long p, const CurveSystem::PiecePort& pp) {
  NormalArc arc;
  arc.tri = t;
  arc.type = pp.type;
  if (pp.type.family == HexArcFamily::c) {
    arc.positions = {p, pp.other_pos};  // A-side first, corner second
    return arc;
  }
  // b_m joins sides m+1, m+2 in that endpoint order.
  int first_side = (pp.type.index + 1) % 3;
  if (entering_side == first_side)
    arc.positions = {p, pp.other_pos};
  else
    arc.positions = {pp.other_pos, p};
  return arc;
}

}  // namespace

CurveSystem::CurveSystem(const IdealTriangulation& tri, const TCoord& c) : tri_(&tri) {
  require_valid(tri, c, "standard_representative");

  edge_count_.resize(tri.num_edges());
  for (int e = 0; e < tri.num_edges(); ++e) edge_count_[e] = to_index(c.x(e), "strand count");

  hexes_.resize(tri.num_triangles());
  for (int t = 0; t < tri.num_triangles(); ++t) {
    HexCoord h;
    for (int k = 0; k < 3; ++k) h.x(k) = c.x(tri.edge_at(Slot{t, k}));
    HexArcSystem sys = hex_from_coord(h);
    for (int k = 0; k < 3; ++k) {
      hexes_[t].n[k] = edge_count_[tri.edge_at(Slot{t, k})];
      hexes_[t].b[k] = to_index(sys.b(k), "piece count");
      hexes_[t].c[k] = to_index(sys.c(k), "piece count");
    }
  }

  for (int e = 0; e < tri.num_edges(); ++e) {
    long k = to_index(c.xp(e), "parallel count");
    for (long i = 0; i < k; ++i) parallel_.push_back(e);
  }

  trace_components();
}

CurveSystem::PiecePort CurveSystem::piece_at(int t, int s, long p) const {
  const HexPieces& h = hexes_[t];
  int s1 = (s + 1) % 3, s2 = (s + 2) % 3;
  if (p < 0 || p >= h.n[s]) throw invalid_argument("piece_at: position out of range");
  PiecePort pp;
  if (p < h.b[s1]) {
    pp.type = HexArcType{HexArcFamily::b, s1};
    pp.other_is_corner = false;
    pp.other = s2;
    pp.other_pos = h.n[s2] - 1 - p;
  } else if (p < h.b[s1] + h.c[s]) {
    pp.type = HexArcType{HexArcFamily::c, s};
    pp.other_is_corner = true;
    pp.other = s;
    pp.other_pos = h.c[s] - 1 - (p - h.b[s1]);
  } else {
    pp.type = HexArcType{HexArcFamily::b, s2};
    pp.other_is_corner = false;
    pp.other = s1;
    pp.other_pos = h.n[s] - 1 - p;
  }
  return pp;
}

Continuation CurveSystem::follow(int e, long idx, Slot toward) const {
  const auto& slots = tri_->slots_of_edge(e);
  if (toward != slots[0] && toward != slots[1]) throw invalid_argument("follow: slot not on edge");
  long X = edge_count_[e];
  long p = (toward == slots[0]) ? idx : X - 1 - idx;
  int t = toward.tri, s = toward.pos;

  PiecePort pp = piece_at(t, s, p);
  Continuation out;
  out.piece = pp.type;
  if (pp.type.family == HexArcFamily::c)
    out.exit_rank = 1;
  else
    out.exit_rank = (pp.type.index == (s + 1) % 3) ? 0 : 2;

  if (pp.other_is_corner) {
    out.terminal = true;
    out.corner = tri_->corner_id(t, pp.other);
    out.corner_pos = pp.other_pos;
    return out;
  }
  out.terminal = false;
  Slot arrive{t, pp.other};
  int e2 = tri_->edge_at(arrive);
  const auto& slots2 = tri_->slots_of_edge(e2);
  out.edge = e2;
  out.index = (arrive == slots2[0]) ? pp.other_pos : edge_count_[e2] - 1 - pp.other_pos;
  out.next_toward = tri_->mate(arrive);
  return out;
}

void CurveSystem::trace_components() {
  strand_component_.resize(edge_count_.size());
  for (size_t e = 0; e < edge_count_.size(); ++e)
    strand_component_[e].assign(static_cast<size_t>(edge_count_[e]), -1);

  // Proper arcs start at a c-piece. Walk from its corner end across the edge
  // and keep going until the far corner.
  for (int t = 0; t < tri_->num_triangles(); ++t) {
    for (int s = 0; s < 3; ++s) {
      const HexPieces& h = hexes_[t];
      for (long q = 0; q < h.c[s]; ++q) {
        long p = h.b[(s + 1) % 3] + q;  // A-side position of this c-piece
        int e = tri_->edge_at(Slot{t, s});
        const auto& slots = tri_->slots_of_edge(e);
        long idx = (Slot{t, s} == slots[0]) ? p : edge_count_[e] - 1 - p;
        if (strand_component_[e][idx] >= 0) continue;

        int comp = static_cast<int>(components_.size());
        CurveComponent cc;
        cc.closed = false;
        cc.arcs.push_back(make_arc(t, s, p, piece_at(t, s, p)));
        int ce = e;
        long cidx = idx;
        Slot toward = tri_->mate(Slot{t, s});
        while (true) {
          strand_component_[ce][cidx] = comp;
          Continuation step = follow(ce, cidx, toward);
          long entered = (toward == tri_->slots_of_edge(ce)[0]) ? cidx
                                                                : edge_count_[ce] - 1 - cidx;
          cc.arcs.push_back(make_arc(toward.tri, toward.pos, entered,
                                     piece_at(toward.tri, toward.pos, entered)));
          if (step.terminal) break;
          ce = step.edge;
          cidx = step.index;
          toward = step.next_toward;
        }
        components_.push_back(std::move(cc));
      }
    }
  }

  // Everything left is closed.
  for (size_t e0 = 0; e0 < edge_count_.size(); ++e0) {
    for (long i0 = 0; i0 < edge_count_[e0]; ++i0) {
      if (strand_component_[e0][i0] >= 0) continue;
      int comp = static_cast<int>(components_.size());
      CurveComponent cc;
      cc.closed = true;
      int ce = static_cast<int>(e0);
      long cidx = i0;
      Slot toward = tri_->slots_of_edge(ce)[0];
      do {
        strand_component_[ce][cidx] = comp;
        Continuation step = follow(ce, cidx, toward);
        long entered = (toward == tri_->slots_of_edge(ce)[0]) ? cidx
                                                              : edge_count_[ce] - 1 - cidx;
        cc.arcs.push_back(make_arc(toward.tri, toward.pos, entered,
                                   piece_at(toward.tri, toward.pos, entered)));
        ce = step.edge;
        cidx = step.index;
        toward = step.next_toward;
      } while (!(ce == static_cast<int>(e0) && cidx == i0 &&
                 toward == tri_->slots_of_edge(ce)[0]));
      components_.push_back(std::move(cc));
    }
  }
}

int CurveSystem::component_of(int e, long idx) const { return strand_component_[e][idx]; }

long CurveSystem::component_length(int comp) const {
  const CurveComponent& cc = components_[comp];
  return cc.closed ? static_cast<long>(cc.arcs.size())
                   : static_cast<long>(cc.arcs.size()) - 1;
}

CurveSystem standard_representative(const IdealTriangulation& tri, const TCoord& c) {
  return CurveSystem(tri, c);
}

TCoord coord_of(const IdealTriangulation& tri, const CurveSystem& s) {
  TCoord c(tri.num_edges());
  VecZ ports = VecZ::Zero(tri.num_edges());
  for (const auto& comp : s.components()) {
    for (const auto& arc : comp.arcs) {
      if (arc.type.family == HexArcFamily::b) {
        ports(tri.edge_at(Slot{arc.tri, (arc.type.index + 1) % 3})) += 1;
        ports(tri.edge_at(Slot{arc.tri, (arc.type.index + 2) % 3})) += 1;
      } else {
        ports(tri.edge_at(Slot{arc.tri, arc.type.index})) += 1;
      }
    }
  }
  for (int e = 0; e < tri.num_edges(); ++e) {
    if (!is_even(ports(e))) throw invalid_argument("coord_of: dangling strand port");
    c.x(e) = ports(e) / 2;
  }
  for (int e : s.parallel_components()) c.xp(e) += 1;
  return c;
}

ClassFlags classify_class(const IdealTriangulation& tri, const TCoord& c) {
  require_valid(tri, c, "classify_class");
  ClassFlags flags;
  flags.es = true;

  bool closed = c.xp.isZero();
  std::vector<Int> corner_b(static_cast<size_t>(tri.num_corners()));
  for (int t = 0; t < tri.num_triangles(); ++t) {
    HexCoord h;
    for (int k = 0; k < 3; ++k) h.x(k) = c.x(tri.edge_at(Slot{t, k}));
    if (!in_triangle_set(h.x(0), h.x(1), h.x(2))) closed = false;
    HexArcSystem sys = hex_from_coord(h);
    for (int k = 0; k < 3; ++k) corner_b[tri.corner_id(t, k)] = sys.b(k);
  }

  // A loop parallel to a boundary component exists exactly when every corner
  // around it carries a b-piece: the outermost ones chain around the boundary.
  flags.cs = true;
  for (const auto& cycle : tri.boundary_cycles()) {
    bool all = true;
    for (int corner : cycle)
      if (corner_b[corner] == 0) {
        all = false;
        break;
      }
    if (all) flags.cs = false;
  }
  flags.cs0 = flags.cs && closed;
  return flags;
}

}  // namespace lamina
