#include "lamina/intersection.hpp"

#include <algorithm>
#include <stdexcept>

#include "lamina/random.hpp"

namespace lamina {

namespace {

// b strictly inside the open ccw arc from a to c; all three distinct.
template <typename P>
bool cyclic_between(const P& a, const P& b, const P& c) {
  if (a < c) return a < b && b < c;
  return b > a || b < c;
}

}  // namespace

Arrangement::Arrangement(const IdealTriangulation& tri, const CurveSystem& a,
                         const CurveSystem& b)
    : tri_(&tri), a_(&a), b_(&b) {
  const int N = tri.num_edges();
  merged_.resize(N);
  merged_pos_.resize(N);
  for (int e = 0; e < N; ++e) {
    long xa = a.strands_on(e), xb = b.strands_on(e);
    // Insertion rank of each b-strand among the a-strands. Ranks are
    // nondecreasing because disjoint families merge into a linear order.
    std::vector<long> rank(static_cast<size_t>(xb));
    for (long j = 0; j < xb; ++j) {
      long r = 0;
      for (long u = 0; u < xa; ++u)
        if (cmp_strands(u, j, e) < 0) ++r;
      if (j > 0 && r < rank[static_cast<size_t>(j - 1)])
        throw std::logic_error("arrangement: non-monotone strand routing");
      rank[static_cast<size_t>(j)] = r;
    }
    auto& m = merged_[e];
    m.reserve(static_cast<size_t>(xa + xb));
    long ai = 0;
    for (long j = 0; j < xb; ++j) {
      while (ai < rank[static_cast<size_t>(j)]) m.push_back({0, ai++});
      m.push_back({1, j});
    }
    while (ai < xa) m.push_back({0, ai++});

    merged_pos_[e][0].assign(static_cast<size_t>(xa), -1);
    merged_pos_[e][1].assign(static_cast<size_t>(xb), -1);
    for (size_t p = 0; p < m.size(); ++p)
      merged_pos_[e][m[p].first][static_cast<size_t>(m[p].second)] = static_cast<long>(p);
  }
  total_ = count_all();
}

std::pair<int, long> Arrangement::walk_verdict(long a_idx, long b_idx, int e,
                                               Slot toward) const {
  long la = a_->component_length(a_->component_of(e, a_idx));
  long lb = b_->component_length(b_->component_of(e, b_idx));
  long bound = 2 * std::max<long>(la, 1) * std::max<long>(lb, 1) + 8;

  int ea = e, eb = e;
  long ia = a_idx, ib = b_idx;
  Slot ta = toward, tb = toward;
  for (long hops = 1; hops <= bound; ++hops) {
    Continuation ca = a_->follow(ea, ia, ta);
    Continuation cb = b_->follow(eb, ib, tb);
    if (ca.exit_rank != cb.exit_rank) return {ca.exit_rank < cb.exit_rank ? -1 : 1, hops};
    if (ca.terminal) return {0, hops};  // parallel arcs into the same corner
    if (ca.edge != cb.edge || !(ca.next_toward == cb.next_toward))
      throw std::logic_error("arrangement: strand walk desynchronized");
    ea = ca.edge;
    ia = ca.index;
    ta = ca.next_toward;
    eb = cb.edge;
    ib = cb.index;
    tb = cb.next_toward;
  }
  return {0, bound};  // both periodic along a common corridor
}

int Arrangement::cmp_strands(long a_idx, long b_idx, int e) const {
  const auto& slots = tri_->slots_of_edge(e);
  auto [v0, d0] = walk_verdict(a_idx, b_idx, e, slots[0]);
  auto [v1, d1] = walk_verdict(a_idx, b_idx, e, slots[1]);
  int va = v0;        // verdict already in canonical (first-slot) direction
  int vb = -v1;       // second-slot frame runs the other way
  if (va == 0 && vb == 0) return -1;  // isotopic: keep first system below
  if (va == 0) return vb;
  if (vb == 0) return va;
  if (va == vb) return va;
  // Conflict: the pair must cross once; route by the nearer divergence so
  // every edge of the shared corridor picks the same side.
  return d0 <= d1 ? va : vb;
}

long Arrangement::merged_side_pos(int tag, int t, int s, long own_side_pos,
                                  const std::vector<std::pair<int, long>>& order_e,
                                  int e) const {
  Slot sl{t, s};
  const auto& slots = tri_->slots_of_edge(e);
  long x_own = sys(tag).strands_on(e);
  long own_idx = (sl == slots[0]) ? own_side_pos : x_own - 1 - own_side_pos;
  long m = -1;
  if (&order_e == &merged_[e]) {
    m = merged_pos_[e][tag][static_cast<size_t>(own_idx)];
  } else {
    for (size_t p = 0; p < order_e.size(); ++p)
      if (order_e[p].first == tag && order_e[p].second == own_idx) {
        m = static_cast<long>(p);
        break;
      }
  }
  if (m < 0) throw std::logic_error("arrangement: strand missing from merged order");
  long x_tot = static_cast<long>(order_e.size());
  return (sl == slots[0]) ? m : x_tot - 1 - m;
}

long Arrangement::corner_rank(int tag, int t, int k, long own_side_pos,
                              const std::vector<std::pair<int, long>>& order_e, int e) const {
  // Arcs into corner k all enter through side k; their order along the
  // boundary is the reverse of their order along the side.
  Slot sl{t, k};
  const auto& slots = tri_->slots_of_edge(e);
  long x_tot = static_cast<long>(order_e.size());
  long mine = merged_side_pos(tag, t, k, own_side_pos, order_e, e);
  long before = 0, total = 0;
  for (long p_side = 0; p_side < x_tot; ++p_side) {
    auto entry = (sl == slots[0]) ? order_e[static_cast<size_t>(p_side)]
                                  : order_e[static_cast<size_t>(x_tot - 1 - p_side)];
    long x_own = sys(entry.first).strands_on(e);
    long own_pos = (sl == slots[0]) ? entry.second : x_own - 1 - entry.second;
    if (sys(entry.first).piece_at(t, k, own_pos).type.family == HexArcFamily::c) {
      ++total;
      if (p_side < mine) ++before;
    }
  }
  return total - 1 - before;
}

Arrangement::ChordPts Arrangement::chord_points(int tag, int t, int s, long side_pos,
                                                const std::vector<std::pair<int, long>>& order_e,
                                                int e) const {
  auto pp = sys(tag).piece_at(t, s, side_pos);
  ChordPts ch;
  ch.p = CirclePoint{circle_slot_of_side(s), merged_side_pos(tag, t, s, side_pos, order_e, e)};
  if (pp.other_is_corner) {
    ch.q = CirclePoint{circle_slot_of_corner(s), corner_rank(tag, t, s, side_pos, order_e, e)};
    return ch;
  }
  int s2 = pp.other;
  int e2 = tri_->edge_at(Slot{t, s2});
  const auto& order2 = (e2 == e) ? order_e : merged_[e2];
  ch.q = CirclePoint{circle_slot_of_side(s2),
                     merged_side_pos(tag, t, s2, pp.other_pos, order2, e2)};
  return ch;
}

namespace {

bool chords_interleave(const Arrangement::ChordPts& u, const Arrangement::ChordPts& v) {
  return cyclic_between(u.p, v.p, u.q) != cyclic_between(u.p, v.q, u.q);
}

}  // namespace

long Arrangement::count_hex(int t) const {
  const auto& ha = a_->hex(t);
  const auto& hb = b_->hex(t);
  auto chords_of = [&](int tag, const CurveSystem::HexPieces& h) {
    std::vector<ChordPts> out;
    for (int s = 0; s < 3; ++s) {
      int e = tri_->edge_at(Slot{t, s});
      // b-pieces whose first endpoint (in block order) lies on side s, plus
      // c-pieces: enumerate every piece once via its side-s endpoint blocks.
      // Pieces of family b_{s+1} are enumerated from side s (their A_{s+2}
      // endpoint is the paired one), c_s from side s; b_{s+2} is skipped here
      // and picked up as b_{(s'+1)} from side s' = s+1.
      long nb1 = h.b[(s + 1) % 3], nc = h.c[s];
      for (long p = 0; p < nb1 + nc; ++p)
        out.push_back(chord_points(tag, t, s, p, merged_[e], e));
    }
    return out;
  };
  std::vector<ChordPts> ca = chords_of(0, ha), cb = chords_of(1, hb);
  long cnt = 0;
  for (const auto& u : ca)
    for (const auto& v : cb)
      if (chords_interleave(u, v)) ++cnt;
  return cnt;
}

long Arrangement::count_all() const {
  long cnt = 0;
  for (int t = 0; t < tri_->num_triangles(); ++t) cnt += count_hex(t);
  return cnt;
}

int Arrangement::pair_cross_in_hex(Slot hex_side, int e, long mi,
                                   const std::vector<std::pair<int, long>>& order_e) const {
  // The two strands at canonical positions mi, mi+1; their own side positions
  // on this side of the band.
  auto st = [&](long m) {
    auto entry = order_e[static_cast<size_t>(m)];
    long x_own = sys(entry.first).strands_on(e);
    const auto& slots = tri_->slots_of_edge(e);
    long side_pos = (hex_side == slots[0]) ? entry.second : x_own - 1 - entry.second;
    return std::pair<int, long>{entry.first, side_pos};
  };
  auto [tag0, p0] = st(mi);
  auto [tag1, p1] = st(mi + 1);
  if (tag0 == tag1) return 0;
  ChordPts c0 = chord_points(tag0, hex_side.tri, hex_side.pos, p0, order_e, e);
  ChordPts c1 = chord_points(tag1, hex_side.tri, hex_side.pos, p1, order_e, e);
  return chords_interleave(c0, c1) ? 1 : 0;
}

long Arrangement::reduce_bigons() {
  long swaps = 0;
  bool improved = true;
  long guard = total_ + 16;
  while (improved) {
    improved = false;
    for (int e = 0; e < tri_->num_edges() && !improved; ++e) {
      auto& m = merged_[e];
      for (size_t i = 0; i + 1 < m.size(); ++i) {
        if (m[i].first == m[i + 1].first) continue;
        auto candidate = m;
        std::swap(candidate[i], candidate[i + 1]);
        int delta = 0;
        for (const Slot& side : tri_->slots_of_edge(e)) {
          delta += pair_cross_in_hex(side, e, static_cast<long>(i), candidate);
          delta -= pair_cross_in_hex(side, e, static_cast<long>(i), m);
        }
        if (delta < 0) {
          m = std::move(candidate);
          merged_pos_[e][m[i].first][static_cast<size_t>(m[i].second)] = static_cast<long>(i);
          merged_pos_[e][m[i + 1].first][static_cast<size_t>(m[i + 1].second)] =
              static_cast<long>(i + 1);
          total_ += delta;
          ++swaps;
          improved = true;
          break;
        }
      }
    }
    if (swaps > guard) throw std::logic_error("arrangement: bigon reduction failed to settle");
  }
  return swaps;
}

bool Arrangement::bigon_free() const {
  for (int e = 0; e < tri_->num_edges(); ++e) {
    const auto& m = merged_[e];
    for (size_t i = 0; i + 1 < m.size(); ++i) {
      if (m[i].first == m[i + 1].first) continue;
      auto candidate = m;
      std::swap(candidate[i], candidate[i + 1]);
      int delta = 0;
      for (const Slot& side : tri_->slots_of_edge(e)) {
        delta += pair_cross_in_hex(side, e, static_cast<long>(i), candidate);
        delta -= pair_cross_in_hex(side, e, static_cast<long>(i), m);
      }
      if (delta < 0) return false;
    }
  }
  return true;
}

std::vector<Arrangement::Crossing> Arrangement::crossings() const {
  std::vector<Crossing> out;
  for (int t = 0; t < tri_->num_triangles(); ++t) {
    auto pieces_of = [&](int tag) {
      std::vector<std::pair<HexArcType, ChordPts>> res;
      const auto& h = sys(tag).hex(t);
      for (int s = 0; s < 3; ++s) {
        int e = tri_->edge_at(Slot{t, s});
        long nb1 = h.b[(s + 1) % 3], nc = h.c[s];
        for (long p = 0; p < nb1 + nc; ++p) {
          auto pp = sys(tag).piece_at(t, s, p);
          res.push_back({pp.type, chord_points(tag, t, s, p, merged_[e], e)});
        }
      }
      return res;
    };
    auto pa = pieces_of(0), pb = pieces_of(1);
    for (const auto& u : pa)
      for (const auto& v : pb)
        if (chords_interleave(u.second, v.second)) out.push_back({t, u.first, v.first});
  }
  return out;
}

namespace {

Int parallel_contribution(const CurveSystem& a, const CurveSystem& b) {
  Int total = 0;
  for (int e : a.parallel_components()) total += Int(b.strands_on(e));
  for (int e : b.parallel_components()) total += Int(a.strands_on(e));
  return total;
}

}  // namespace

Int geometric_intersection(const IdealTriangulation& tri, const CurveSystem& a,
                           const CurveSystem& b, IntersectionStats* stats) {
  Arrangement arr(tri, a, b);
  long before = arr.crossing_count();
  long swaps = arr.reduce_bigons();
  if (stats) {
    stats->crossings_before_reduction = before;
    stats->bigon_swaps = swaps;
  }
  return Int(arr.crossing_count()) + parallel_contribution(a, b);
}

Int geometric_intersection(const IdealTriangulation& tri, const TCoord& a, const TCoord& b,
                           IntersectionStats* stats) {
  CurveSystem ra(tri, a), rb(tri, b);
  return geometric_intersection(tri, ra, rb, stats);
}

CauchyReport cauchy_check(const IdealTriangulation& tri, const TCoord& alpha, const TCoord& beta,
                          const TCoord& gamma) {
  require_valid(tri, alpha, "cauchy_check(alpha)");
  require_valid(tri, beta, "cauchy_check(beta)");
  require_valid(tri, gamma, "cauchy_check(gamma)");
  CauchyReport rep;
  Int iab = geometric_intersection(tri, alpha, beta);
  Int iag = geometric_intersection(tri, alpha, gamma);
  rep.lhs = iab >= iag ? iab - iag : iag - iab;
  Int na = norm(alpha), d = l1_distance(beta, gamma);
  rep.rhs_general = 2 * na * d;
  rep.rhs_closed = na * d;
  rep.alpha_closed = classify_class(tri, alpha).cs0;
  rep.ok = rep.lhs <= rep.rhs_general && (!rep.alpha_closed || rep.lhs <= rep.rhs_closed);
  return rep;
}

SurgeryBoundsReport surgery_crossing_bounds(const IdealTriangulation& tri, const TCoord& alpha,
                                            const TCoord& beta, int edge) {
  require_valid(tri, alpha, "surgery_crossing_bounds(alpha)");
  require_valid(tri, beta, "surgery_crossing_bounds(beta)");
  if (!is_even(beta)) throw invalid_argument("surgery_crossing_bounds: beta must be even");
  if (edge < 0 || edge >= tri.num_edges())
    throw invalid_argument("surgery_crossing_bounds: edge out of range");

  SurgeryBoundsReport rep;
  rep.alpha_norm = norm(alpha);
  rep.alpha_xi = alpha.x(edge);
  rep.i_beta = geometric_intersection(tri, alpha, beta);
  bool closed = classify_class(tri, alpha).cs0;
  rep.closed_case = closed;

  bool any = false;
  if (beta.xp(edge) == 0) {
    TCoord gamma = beta;
    gamma.x(edge) += 2;
    require_valid(tri, gamma, "surgery_crossing_bounds(gamma)");
    rep.x_step_checked = true;
    rep.i_gamma_x = geometric_intersection(tri, alpha, gamma);
    rep.ineq_down = rep.i_beta <= rep.i_gamma_x + 4 * rep.alpha_norm;
    rep.ineq_up = rep.i_gamma_x <= rep.i_beta + 2 * rep.alpha_norm;
    rep.ineq_down_closed = !closed || rep.i_beta <= rep.i_gamma_x + 2 * rep.alpha_norm;
    any = true;
  }
  if (beta.x(edge) == 0) {
    TCoord gamma = beta;
    gamma.xp(edge) += 2;
    require_valid(tri, gamma, "surgery_crossing_bounds(gamma')");
    rep.xp_step_checked = true;
    rep.i_gamma_xp = geometric_intersection(tri, alpha, gamma);
    rep.xp_exact = rep.i_gamma_xp == rep.i_beta + 2 * alpha.x(edge);
    any = true;
  }
  if (!any) throw invalid_argument("surgery_crossing_bounds: no valid distance-2 step at edge");
  rep.ok = (!rep.x_step_checked || (rep.ineq_down && rep.ineq_up && rep.ineq_down_closed)) &&
           (!rep.xp_step_checked || rep.xp_exact);
  return rep;
}

TightnessReport tightness_search(const IdealTriangulation& tri, long max_entry, long trials,
                                 std::uint64_t seed) {
  TightnessReport rep;
  CoordSampler sampler(tri, seed);
  for (long trial = 0; trial < trials; ++trial) {
    TCoord alpha_closed = sampler.closed_system(max_entry);
    TCoord alpha_any = sampler.essential_system(max_entry);
    TCoord beta = sampler.essential_system(max_entry);
    TCoord gamma = sampler.essential_system(max_entry);
    ++rep.trials;

    Int d = l1_distance(beta, gamma);
    if (d == 0) continue;

    auto lhs_of = [&](const TCoord& a) {
      Int iab = geometric_intersection(tri, a, beta);
      Int iag = geometric_intersection(tri, a, gamma);
      return iab >= iag ? iab - iag : iag - iab;
    };

    Int nc = norm(alpha_closed);
    if (nc > 0) {
      Int lhs = lhs_of(alpha_closed);
      Int rhs = nc * d;
      Rat ratio = Rat(lhs) / Rat(rhs);
      rep.max_ratio_closed = std::max(rep.max_ratio_closed, ratio);
      if (lhs == rhs && lhs > 0 && lhs_of(alpha_closed) == rhs)
        rep.closed_witnesses.push_back({alpha_closed, beta, gamma, lhs, rhs, true});
    }
    Int ng = norm(alpha_any);
    if (ng > 0) {
      Int lhs = lhs_of(alpha_any);
      Int rhs = 2 * ng * d;
      Rat ratio = Rat(lhs) / Rat(rhs);
      rep.max_ratio_general = std::max(rep.max_ratio_general, ratio);
      if (lhs == rhs && lhs > 0 && lhs_of(alpha_any) == rhs)
        rep.general_witnesses.push_back({alpha_any, beta, gamma, lhs, rhs, false});
    }
  }
  return rep;
}

}  // namespace lamina
