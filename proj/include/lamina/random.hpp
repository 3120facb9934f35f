#pragma once

#include <cstdint>
#include <random>

#include "lamina/coords.hpp"
#include "lamina/hexagon.hpp"
#include "lamina/surface.hpp"

namespace lamina {

/// Seeded generator of valid coordinates on a fixed triangulation.
class CoordSampler {
 public:
  CoordSampler(const IdealTriangulation& tri, std::uint64_t seed) : tri_(&tri), rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  /// Uniform-ish valid coordinate with entries <= max_entry; parallel
  /// components are sprinkled onto edges with zero crossing count.
  TCoord essential_system(long max_entry, double parallel_prob = 0.25) {
    std::uniform_int_distribution<long> entry(0, max_entry);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int attempt = 0; attempt < 200000; ++attempt) {
      TCoord c(tri_->num_edges());
      for (int i = 0; i < c.size(); ++i) c.x(i) = Int(entry(rng_));
      if (!is_valid(*tri_, c)) continue;
      for (int i = 0; i < c.size(); ++i)
        if (c.x(i) == 0 && coin(rng_) < parallel_prob) {
          long v = entry(rng_);
          if (v > 0) c.xp(i) = Int(v);
        }
      return c;
    }
    throw invalid_argument("essential_system: sampling failed");
  }

  /// Valid coordinate of a closed curve system (no parallel components, all
  /// triangles inside the triangle-inequality set, zero boundary minimum).
  TCoord closed_system(long max_entry) {
    std::uniform_int_distribution<long> entry(0, max_entry);
    for (int attempt = 0; attempt < 200000; ++attempt) {
      TCoord c(tri_->num_edges());
      for (int i = 0; i < c.size(); ++i) c.x(i) = Int(entry(rng_));

      // Clamp dominant entries until every triangle satisfies the triangle
      // inequalities; entries only decrease, so this settles.
      bool changed = true;
      while (changed) {
        changed = false;
        for (int t = 0; t < tri_->num_triangles(); ++t) {
          const auto& tr = tri_->triangles()[t];
          for (int k = 0; k < 3; ++k) {
            Int sum = c.x(tr[(k + 1) % 3]) + c.x(tr[(k + 2) % 3]);
            if (c.x(tr[k]) > sum) {
              c.x(tr[k]) = sum;
              changed = true;
            }
          }
        }
      }
      if (!is_valid(*tri_, c)) continue;  // parity; redraw on failure

      // Subtract the per-boundary minimum corner weight so every boundary
      // component has a corner of weight zero.
      shift_boundary_minima(c);
      return c;
    }
    throw invalid_argument("closed_system: sampling failed");
  }

 private:
  void shift_boundary_minima(TCoord& c) {
    std::vector<Int> corner(static_cast<size_t>(tri_->num_corners()));
    for (int t = 0; t < tri_->num_triangles(); ++t) {
      const auto& tr = tri_->triangles()[t];
      for (int k = 0; k < 3; ++k)
        corner[static_cast<size_t>(tri_->corner_id(t, k))] =
            (c.x(tr[(k + 1) % 3]) + c.x(tr[(k + 2) % 3]) - c.x(tr[k])) / 2;
    }
    std::vector<Int> mins(static_cast<size_t>(tri_->spec().boundary_count), Int(-1));
    for (int cn = 0; cn < tri_->num_corners(); ++cn) {
      auto b = static_cast<size_t>(tri_->boundary_of_corner(cn));
      if (mins[b] < 0 || corner[static_cast<size_t>(cn)] < mins[b])
        mins[b] = corner[static_cast<size_t>(cn)];
    }
    for (int e = 0; e < tri_->num_edges(); ++e) {
      Slot s = tri_->slots_of_edge(e)[0];
      int c1 = tri_->corner_id(s.tri, (s.pos + 1) % 3);
      int c2 = tri_->corner_id(s.tri, (s.pos + 2) % 3);
      c.x(e) -= mins[static_cast<size_t>(tri_->boundary_of_corner(c1))] +
                mins[static_cast<size_t>(tri_->boundary_of_corner(c2))];
      if (c.x(e) < 0) throw std::logic_error("closed_system: negative entry after shift");
    }
  }

  const IdealTriangulation* tri_;
  std::mt19937_64 rng_;
};

}  // namespace lamina
