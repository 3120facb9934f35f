#include "lamina/lamination.hpp"

#include <algorithm>

#include "lamina/rational_linalg.hpp"

namespace lamina {

int rref(MatQ& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  int rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r)
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    m.row(rank).swap(m.row(pivot));
    Rat inv = Rat(1) / m(rank, col);
    for (Eigen::Index c = col; c < cols; ++c) m(rank, c) *= inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == rank || m(r, col) == 0) continue;
      Rat f = m(r, col);
      for (Eigen::Index c = col; c < cols; ++c) m(r, c) -= f * m(rank, c);
    }
    ++rank;
  }
  return rank;
}

int rank(MatQ m) { return rref(m); }

MatQ nullspace(const MatQ& m) {
  MatQ r = m;
  int rk = rref(r);
  const Eigen::Index cols = m.cols();
  // Locate pivot columns.
  std::vector<Eigen::Index> pivot_col(static_cast<size_t>(rk));
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (int row = 0; row < rk; ++row) {
    Eigen::Index c = 0;
    while (c < cols && r(row, c) == 0) ++c;
    pivot_col[static_cast<size_t>(row)] = c;
    is_pivot[static_cast<size_t>(c)] = true;
  }
  MatQ basis = MatQ::Zero(cols, cols - rk);
  Eigen::Index out = 0;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    basis(free, out) = Rat(1);
    for (int row = 0; row < rk; ++row)
      basis(pivot_col[static_cast<size_t>(row)], out) = -r(row, free);
    ++out;
  }
  return basis;
}

VecQ solve(MatQ m, VecQ rhs) {
  const Eigen::Index n = m.cols();
  MatQ aug(m.rows(), n + 1);
  aug.leftCols(n) = m;
  aug.col(n) = rhs;
  int rk = rref(aug);
  // Unique solution requires a pivot in every variable column.
  VecQ x = VecQ::Zero(n);
  Eigen::Index row = 0;
  for (Eigen::Index c = 0; c < n && row < rk; ++c) {
    if (aug(row, c) == 0) throw invalid_argument("solve: singular system");
    x(c) = aug(row, n);
    ++row;
  }
  if (rk != n) throw invalid_argument("solve: singular system");
  for (Eigen::Index r = rk; r < aug.rows(); ++r)
    if (aug(r, n) != 0) throw invalid_argument("solve: inconsistent system");
  return x;
}

namespace {

// Corner weight of corner k in triangle t for edge weights x (no clamping).
Rat corner_weight(const IdealTriangulation& tri, const VecQ& x, int t, int k) {
  const auto& tr = tri.triangles()[t];
  return (x(tr[(k + 1) % 3]) + x(tr[(k + 2) % 3]) - x(tr[k])) / 2;
}

// Weight actually carried around corner k when triangle inequalities may
// fail: min of the plain corner weight and both flanking edge weights,
// clamped at zero.
Rat carried_corner_weight(const IdealTriangulation& tri, const VecQ& x, int t, int k) {
  const auto& tr = tri.triangles()[t];
  Rat w = corner_weight(tri, x, t, k);
  w = std::min(w, x(tr[(k + 1) % 3]));
  w = std::min(w, x(tr[(k + 2) % 3]));
  return std::max(w, Rat(0));
}

}  // namespace

MembershipReport ml_membership(const IdealTriangulation& tri, const XPoint& x) {
  MembershipReport rep;
  if (x.size() != tri.num_edges()) {
    rep.ok = false;
    rep.violations.push_back("dimension mismatch");
    return rep;
  }
  for (int e = 0; e < tri.num_edges(); ++e)
    if (x(e) < 0) {
      rep.ok = false;
      rep.violations.push_back("negative weight on edge " + std::to_string(e));
    }
  if (!rep.ok) return rep;
  for (int t = 0; t < tri.num_triangles(); ++t)
    for (int k = 0; k < 3; ++k)
      if (corner_weight(tri, x, t, k) < 0) {
        rep.ok = false;
        rep.violations.push_back("triangle inequality fails at triangle " + std::to_string(t) +
                                 ", corner " + std::to_string(k));
      }
  if (!rep.ok) return rep;
  for (int b = 0; b < tri.spec().boundary_count; ++b) {
    Rat min_w;
    bool first = true;
    for (int corner : tri.boundary_cycles()[static_cast<size_t>(b)]) {
      Rat w = corner_weight(tri, x, corner / 3, corner % 3);
      if (first || w < min_w) min_w = w;
      first = false;
    }
    if (min_w != 0) {
      rep.ok = false;
      rep.violations.push_back("boundary " + std::to_string(b) + " has minimum corner weight " +
                               std::to_string(static_cast<double>(min_w)) + " instead of 0");
    }
  }
  return rep;
}

CornerVector x_to_y(const IdealTriangulation& tri, const XPoint& x) {
  if (x.size() != tri.num_edges()) throw invalid_argument("x_to_y: dimension mismatch");
  CornerVector y(tri.num_corners());
  for (int t = 0; t < tri.num_triangles(); ++t)
    for (int k = 0; k < 3; ++k) {
      Rat w = corner_weight(tri, x, t, k);
      if (w < 0) throw invalid_argument("x_to_y: triangle inequality fails at triangle " +
                                        std::to_string(t));
      y(tri.corner_id(t, k)) = w;
    }
  return y;
}

VecQ switching_residual(const IdealTriangulation& tri, const CornerVector& y) {
  if (y.size() != tri.num_corners()) throw invalid_argument("switching_residual: dimension mismatch");
  VecQ res(tri.num_edges());
  for (int e = 0; e < tri.num_edges(); ++e) {
    const auto& slots = tri.slots_of_edge(e);
    auto side_sum = [&](const Slot& s) {
      return y(tri.corner_id(s.tri, (s.pos + 1) % 3)) + y(tri.corner_id(s.tri, (s.pos + 2) % 3));
    };
    res(e) = side_sum(slots[0]) - side_sum(slots[1]);
  }
  return res;
}

XPoint y_to_x(const IdealTriangulation& tri, const CornerVector& y) {
  VecQ res = switching_residual(tri, y);
  for (int e = 0; e < tri.num_edges(); ++e)
    if (res(e) != 0)
      throw invalid_argument("y_to_x: switching residual nonzero at edge " + std::to_string(e));
  XPoint x(tri.num_edges());
  for (int e = 0; e < tri.num_edges(); ++e) {
    Slot s = tri.slots_of_edge(e)[0];
    x(e) = y(tri.corner_id(s.tri, (s.pos + 1) % 3)) + y(tri.corner_id(s.tri, (s.pos + 2) % 3));
  }
  return x;
}

CornerVector project_to_S(const IdealTriangulation& tri, const CornerVector& y) {
  VecQ res = switching_residual(tri, y);
  for (int e = 0; e < tri.num_edges(); ++e)
    if (res(e) != 0)
      throw invalid_argument("project_to_S: switching residual nonzero at edge " +
                             std::to_string(e));
  CornerVector out = y;
  for (const auto& cycle : tri.boundary_cycles()) {
    Rat m = y(cycle.front());
    for (int corner : cycle) m = std::min(m, y(corner));
    for (int corner : cycle) out(corner) -= m;
  }
  return out;
}

SubspaceModel subspace_model(const IdealTriangulation& tri) {
  SubspaceModel model;
  const int M = tri.num_corners(), r = tri.spec().boundary_count;
  model.v_basis = MatQ::Zero(M, r);
  for (int c = 0; c < M; ++c) model.v_basis(c, tri.boundary_of_corner(c)) = Rat(1);
  model.w_constraints = MatQ::Zero(tri.num_edges(), M);
  for (int e = 0; e < tri.num_edges(); ++e) {
    const auto& slots = tri.slots_of_edge(e);
    for (int side = 0; side < 2; ++side) {
      Rat sign = side == 0 ? Rat(1) : Rat(-1);
      const Slot& s = slots[static_cast<size_t>(side)];
      model.w_constraints(e, tri.corner_id(s.tri, (s.pos + 1) % 3)) += sign;
      model.w_constraints(e, tri.corner_id(s.tri, (s.pos + 2) % 3)) += sign;
    }
  }
  return model;
}

SubspaceDims subspace_dims(const IdealTriangulation& tri) {
  SubspaceModel model = subspace_model(tri);
  SubspaceDims dims;
  const int M = tri.num_corners();
  dims.dim_w = M - rank(model.w_constraints);
  dims.dim_v = rank(model.v_basis);
  MatQ w_basis = nullspace(model.w_constraints);
  MatQ joint(M, model.v_basis.cols() + w_basis.cols());
  joint.leftCols(model.v_basis.cols()) = model.v_basis;
  joint.rightCols(w_basis.cols()) = w_basis;
  int dim_sum = rank(joint);
  dims.dim_vw = dims.dim_v + dims.dim_w - dim_sum;
  return dims;
}

int ml_dimension(const IdealTriangulation& tri) {
  SubspaceDims dims = subspace_dims(tri);
  const int g = tri.spec().genus, r = tri.spec().boundary_count;
  if (dims.dim_w != 6 * g + 3 * r - 6)
    throw invalid_argument("ml_dimension: unexpected switching-solution dimension");
  if (dims.dim_v != r) throw invalid_argument("ml_dimension: unexpected boundary-span dimension");
  if (dims.dim_vw != dims.dim_v)
    throw invalid_argument("ml_dimension: boundary vectors not inside the switching space");
  return dims.dim_w - dims.dim_v;
}

ClosureFlags closure_membership(const IdealTriangulation& tri, const VecQ& x, const VecQ& y) {
  if (x.size() != tri.num_edges() || y.size() != tri.num_edges())
    throw invalid_argument("closure_membership: dimension mismatch");
  ClosureFlags flags;
  flags.es_closure = true;
  for (int e = 0; e < tri.num_edges(); ++e)
    if (x(e) < 0 || y(e) < 0 || x(e) * y(e) != 0) flags.es_closure = false;
  if (!flags.es_closure) return flags;

  flags.cs_closure = true;
  for (const auto& cycle : tri.boundary_cycles()) {
    Rat m = carried_corner_weight(tri, x, cycle.front() / 3, cycle.front() % 3);
    for (int corner : cycle)
      m = std::min(m, carried_corner_weight(tri, x, corner / 3, corner % 3));
    if (m != 0) flags.cs_closure = false;
  }
  return flags;
}

CornerVector rational_approx(const IdealTriangulation& tri, const CornerVector& p,
                             const Rat& eps) {
  if (p.size() != tri.num_corners()) throw invalid_argument("rational_approx: dimension mismatch");
  SubspaceModel model = subspace_model(tri);
  MatQ basis = nullspace(model.w_constraints);
  // Orthogonal projection onto W, exactly.
  MatQ gram = basis.transpose() * basis;
  VecQ z = solve(gram, VecQ(basis.transpose() * p));
  CornerVector y = basis * z;
  CornerVector s = project_to_S(tri, y);
  Rat dist(0);
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    Rat d = s(i) - p(i);
    if (d < 0) d = -d;
    dist = std::max(dist, d);
  }
  if (dist > eps)
    throw invalid_argument("rational_approx: input is farther than eps from the cone");
  return s;
}

}  // namespace lamina
