#pragma once

#include <string>
#include <vector>

#include "lamina/surface.hpp"
#include "lamina/types.hpp"

namespace lamina {

/// Real (rational) coordinates. XPoint lives in R^N (one weight per edge),
/// CornerVector in R^M (one weight per hexagon corner, M = 3T).
using XPoint = VecQ;
using CornerVector = VecQ;

struct MembershipReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Membership in the image of the lamination space: all triangle inequalities
/// hold and every boundary component attains corner weight zero.
MembershipReport ml_membership(const IdealTriangulation& tri, const XPoint& x);

/// Corner weights y_c = (x_j + x_k - x_l) / 2 for the corner opposite the
/// slot carrying x_l. Throws if a triangle inequality fails.
CornerVector x_to_y(const IdealTriangulation& tri, const XPoint& x);

/// Edge weights recovered as the sum of the two corner weights flanking the
/// edge; requires zero switching residual so both sides agree.
XPoint y_to_x(const IdealTriangulation& tri, const CornerVector& y);

/// Per-edge residual (sum of flanking corners on one side) - (other side).
VecQ switching_residual(const IdealTriangulation& tri, const CornerVector& y);

/// Shifts each boundary component's corners by their minimum, landing in the
/// cone S (nonnegative, switching, zero boundary minima). Input must satisfy
/// the switching equations.
CornerVector project_to_S(const IdealTriangulation& tri, const CornerVector& y);

/// The two linear subspaces of corner space: V spanned by the per-boundary
/// indicator vectors, W cut out by the switching equations.
struct SubspaceModel {
  MatQ v_basis;        // M x r
  MatQ w_constraints;  // N x M
};

SubspaceModel subspace_model(const IdealTriangulation& tri);

struct SubspaceDims {
  int dim_w = 0;
  int dim_v = 0;
  int dim_vw = 0;  // dim(V intersect W)
};

/// Exact ranks over the rationals.
SubspaceDims subspace_dims(const IdealTriangulation& tri);

/// dim W - dim V = 6g + 2r - 6, the dimension of the quotient chart. Checks
/// that dim W and dim V have their expected values and that V lies inside W
/// (each indicator vector is the corner vector of a loop parallel to its
/// boundary component, so it satisfies every switching equation; this is
/// what makes the quotient-by-V chart well defined on W).
int ml_dimension(const IdealTriangulation& tri);

struct ClosureFlags {
  bool es_closure = false;
  bool cs_closure = false;
};

/// Membership of a point (x, y) in R^{2N} in the closures of the scaled
/// coordinate images: componentwise nonnegative with x_i y_i = 0; the curve-
/// system closure additionally requires each boundary component to attain
/// carried corner weight zero.
ClosureFlags closure_membership(const IdealTriangulation& tri, const VecQ& x, const VecQ& y);

/// Nearest-point style recovery: orthogonal projection onto W followed by
/// project_to_S. Returns an exact member of S within L-infinity distance eps
/// of p; throws if the input is too far from S.
CornerVector rational_approx(const IdealTriangulation& tri, const CornerVector& p,
                             const Rat& eps);

}  // namespace lamina
