#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lamina/curves.hpp"

namespace lamina {

/// Overlay of two realized curve systems. Strands of both systems crossing a
/// common edge band are merged into one linear order per edge (parallel
/// inside the band), so every crossing happens inside a hexagon and is read
/// off from endpoint interleaving. The initial order routes each pair by its
/// continuations into the adjacent hexagons; remaining bigon faces are
/// removed by adjacent swaps.
class Arrangement {
 public:
  Arrangement(const IdealTriangulation& tri, const CurveSystem& a, const CurveSystem& b);

  /// Crossings between the two systems in the current position.
  long crossing_count() const { return total_; }

  /// Removes bigon faces (adjacent-pair swaps that drop the count by 2, or
  /// by 1 for a half-bigon at a boundary corner) until none remain.
  /// Returns the number of swaps applied.
  long reduce_bigons();

  /// True iff no improving adjacent swap exists.
  bool bigon_free() const;

  struct Crossing {
    int tri;
    // chords as (system, piece); endpoints recoverable via piece data
    HexArcType a_piece;
    HexArcType b_piece;
  };
  std::vector<Crossing> crossings() const;

  /// Merged strand tags along an edge (0 = first system, 1 = second), in the
  /// canonical direction of the edge.
  const std::vector<std::pair<int, long>>& merged_order(int e) const { return merged_[e]; }

  struct CirclePoint {
    int slot;  // 0..5 around the hexagon
    long pos;
    friend auto operator<=>(const CirclePoint&, const CirclePoint&) = default;
  };
  struct ChordPts {
    CirclePoint p, q;
  };

 private:
  const CurveSystem& sys(int tag) const { return tag == 0 ? *a_ : *b_; }
  int cmp_strands(long a_idx, long b_idx, int e) const;
  std::pair<int, long> walk_verdict(long a_idx, long b_idx, int e, Slot toward) const;
  long count_all() const;
  long count_hex(int t) const;
  ChordPts chord_points(int tag, int t, int s, long side_pos,
                        const std::vector<std::pair<int, long>>& order_e, int e) const;
  long merged_side_pos(int tag, int t, int s, long own_side_pos,
                       const std::vector<std::pair<int, long>>& order_e, int e) const;
  long corner_rank(int tag, int t, int k, long own_side_pos,
                   const std::vector<std::pair<int, long>>& order_e, int e) const;
  int pair_cross_in_hex(Slot hex_side, int e, long mi,
                        const std::vector<std::pair<int, long>>& order_e) const;

  const IdealTriangulation* tri_;
  const CurveSystem* a_;
  const CurveSystem* b_;
  // merged_[e]: (system tag, own canonical index) in canonical edge direction
  std::vector<std::vector<std::pair<int, long>>> merged_;
  // inverse: merged position of each system strand
  std::vector<std::array<std::vector<long>, 2>> merged_pos_;
  long total_ = 0;
};

struct IntersectionStats {
  long crossings_before_reduction = 0;
  long bigon_swaps = 0;
};

/// Geometric intersection number of two classes given by valid coordinates.
Int geometric_intersection(const IdealTriangulation& tri, const TCoord& a, const TCoord& b,
                           IntersectionStats* stats = nullptr);

/// Variant reusing realized systems (their coordinates are recovered from the
/// realizations).
Int geometric_intersection(const IdealTriangulation& tri, const CurveSystem& a,
                           const CurveSystem& b, IntersectionStats* stats = nullptr);

struct CauchyReport {
  Int lhs;
  Int rhs_general;  // 2 |alpha| |beta - gamma|
  Int rhs_closed;   // |alpha| |beta - gamma|
  bool alpha_closed = false;
  bool ok = false;
};

/// Checks |I(a,b) - I(a,g)| against the general constant-2 bound, and against
/// the constant-1 bound when alpha is a closed curve system.
CauchyReport cauchy_check(const IdealTriangulation& tri, const TCoord& alpha, const TCoord& beta,
                          const TCoord& gamma);

struct SurgeryBoundsReport {
  Int alpha_norm;
  Int alpha_xi;
  Int i_beta;
  // step in the crossing slot: gamma = beta + 2 e_i
  bool x_step_checked = false;
  Int i_gamma_x;
  bool ineq_down = false;       // I(a,beta) <= I(a,gamma) + 4|a|
  bool ineq_up = false;         // I(a,gamma) <= I(a,beta) + 2|a|
  bool closed_case = false;     // alpha in CS0
  bool ineq_down_closed = true; // I(a,beta) <= I(a,gamma) + 2|a| (when closed)
  // step in the parallel slot: gamma' = beta + 2 e_i'
  bool xp_step_checked = false;
  Int i_gamma_xp;
  bool xp_exact = false;        // I(a,gamma') == I(a,beta) + 2 a.x_i
  bool ok = false;
};

/// Verifies the crossing bounds for the distance-2 step at edge i. The
/// crossing-slot step applies when beta.xp(i) == 0; the parallel-slot step
/// applies when beta.x(i) == 0. Throws if neither step is valid.
SurgeryBoundsReport surgery_crossing_bounds(const IdealTriangulation& tri, const TCoord& alpha,
                                            const TCoord& beta, int edge);

struct TightnessWitness {
  TCoord alpha, beta, gamma;
  Int lhs;
  Int rhs;
  bool closed_case;
};

struct TightnessReport {
  long trials = 0;
  std::vector<TightnessWitness> closed_witnesses;   // lhs == |a||b-g| > 0, a in CS0
  std::vector<TightnessWitness> general_witnesses;  // lhs == 2|a||b-g| > 0
  Rat max_ratio_closed = Rat(0);   // lhs / (|a||b-g|) over CS0 alphas
  Rat max_ratio_general = Rat(0);  // lhs / (2|a||b-g|)
  bool found_closed() const { return !closed_witnesses.empty(); }
};

/// Seeded search for triples attaining equality in either bound. Witnesses
/// are re-verified before being reported; an empty list is a valid outcome.
TightnessReport tightness_search(const IdealTriangulation& tri, long max_entry, long trials,
                                 std::uint64_t seed);

}  // namespace lamina
