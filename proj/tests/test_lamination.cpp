#include <doctest.h>

#include <random>

#include "lamina/curves.hpp"
#include "lamina/lamination.hpp"
#include "lamina/random.hpp"
#include "lamina/rational_linalg.hpp"

using namespace lamina;

namespace {

VecQ vq(std::vector<long> entries) {
  VecQ v(static_cast<Eigen::Index>(entries.size()));
  for (size_t i = 0; i < entries.size(); ++i) v(static_cast<Eigen::Index>(i)) = Rat(entries[i]);
  return v;
}

// Random rational point of W via its nullspace basis.
VecQ random_w_point(const MatQ& w_basis, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-12, 12);
  VecQ coeff(w_basis.cols());
  for (Eigen::Index i = 0; i < coeff.size(); ++i) coeff(i) = Rat(num(rng), 1 + (i % 3));
  return w_basis * coeff;
}

}  // namespace

TEST_CASE("exact elimination basics") {
  MatQ m(3, 4);
  m << Rat(1), Rat(2), Rat(0), Rat(1),  //
      Rat(2), Rat(4), Rat(1), Rat(0),   //
      Rat(3), Rat(6), Rat(1), Rat(1);
  CHECK(rank(m) == 2);
  MatQ ns = nullspace(m);
  CHECK(ns.cols() == 2);
  for (Eigen::Index c = 0; c < ns.cols(); ++c) CHECK((m * ns.col(c)).isZero());
}

TEST_CASE("membership on the once-punctured torus") {
  auto tri = builtin_triangulation(SurfaceSpec{1, 1});
  CHECK(ml_membership(tri, vq({0, 0, 0})).ok);
  CHECK(ml_membership(tri, vq({1, 1, 2})).ok);
  SUBCASE("all corner weights positive: boundary minimum fails") {
    auto rep = ml_membership(tri, vq({2, 2, 2}));
    CHECK_FALSE(rep.ok);
    REQUIRE(!rep.violations.empty());
  }
  SUBCASE("triangle inequality violated") {
    CHECK_FALSE(ml_membership(tri, vq({0, 0, 4})).ok);
  }
  SUBCASE("dimension mismatch") { CHECK_FALSE(ml_membership(tri, vq({1, 2})).ok); }
}

TEST_CASE("corner coordinates: frozen values and inverse maps") {
  auto tri = builtin_triangulation(SurfaceSpec{1, 1});
  CHECK(x_to_y(tri, vq({0, 0, 0})).isZero());

  VecQ y = x_to_y(tri, vq({2, 2, 2}));
  for (Eigen::Index i = 0; i < y.size(); ++i) CHECK(y(i) == Rat(1));
  CHECK(y_to_x(tri, y) == vq({2, 2, 2}));

  VecQ y2 = x_to_y(tri, vq({1, 1, 2}));
  int zeros = 0;
  for (Eigen::Index i = 0; i < y2.size(); ++i)
    if (y2(i) == 0) ++zeros;
  CHECK(zeros == 2);  // corner weights (1,1,0) per hexagon up to indexing
  CHECK(y_to_x(tri, y2) == vq({1, 1, 2}));

  CHECK_THROWS_AS(x_to_y(tri, vq({0, 0, 4})), invalid_argument);
}

TEST_CASE("switching residuals") {
  auto tri = builtin_triangulation(SurfaceSpec{0, 4});
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> num(0, 9);

  SUBCASE("corner vectors of x-points satisfy every switching equation") {
    CoordSampler sampler(tri, 8);
    for (int trial = 0; trial < 60; ++trial) {
      TCoord c = sampler.closed_system(10);
      VecQ x(tri.num_edges());
      for (int e = 0; e < tri.num_edges(); ++e) x(e) = Rat(c.x(e));
      CHECK(switching_residual(tri, x_to_y(tri, x)).isZero());
    }
  }
  SUBCASE("a single corner bump leaves residue exactly on its two edges") {
    VecQ y = VecQ::Zero(tri.num_corners());
    y(0) = Rat(1);  // corner 0 of triangle 0 flanks the slots at positions 1, 2
    VecQ res = switching_residual(tri, y);
    int nonzero = 0;
    for (Eigen::Index e = 0; e < res.size(); ++e)
      if (res(e) != 0) ++nonzero;
    CHECK(nonzero == 2);
  }
  SUBCASE("residual is linear") {
    VecQ y1(tri.num_corners()), y2(tri.num_corners());
    for (Eigen::Index i = 0; i < y1.size(); ++i) {
      y1(i) = Rat(num(rng));
      y2(i) = Rat(num(rng), 3);
    }
    VecQ lhs = switching_residual(tri, VecQ(y1 + y2));
    VecQ rhs = switching_residual(tri, y1) + switching_residual(tri, y2);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("subspace dimensions across the builtin range") {
  // dim W = 6g + 3r - 6 and dim V = r everywhere. The boundary indicator
  // vectors are corner vectors of boundary-parallel loops, so they satisfy
  // the switching equations: V lies inside W and the intersection has
  // dimension r, which is exactly what makes the quotient chart
  // (dimension dim W - dim V = 6g + 2r - 6) well defined.
  for (int g = 0; g <= 3; ++g)
    for (int r = 1; r <= 4; ++r) {
      SurfaceSpec spec{g, r};
      if (spec.euler_characteristic() >= 0) continue;
      CAPTURE(g);
      CAPTURE(r);
      auto tri = builtin_triangulation(spec);
      auto dims = subspace_dims(tri);
      CHECK(dims.dim_w == 6 * g + 3 * r - 6);
      CHECK(dims.dim_v == r);
      CHECK(dims.dim_vw == r);
      CHECK(ml_dimension(tri) == 6 * g + 2 * r - 6);
    }
}

TEST_CASE("frozen dimension values") {
  CHECK(ml_dimension(builtin_triangulation(SurfaceSpec{1, 1})) == 2);
  CHECK(ml_dimension(builtin_triangulation(SurfaceSpec{0, 3})) == 0);
  CHECK(ml_dimension(builtin_triangulation(SurfaceSpec{0, 4})) == 2);
  CHECK(subspace_dims(builtin_triangulation(SurfaceSpec{2, 1})).dim_w == 9);
  CHECK(subspace_dims(builtin_triangulation(SurfaceSpec{2, 1})).dim_v == 1);
}

TEST_CASE("pair of pants has only the empty closed system") {
  auto tri = builtin_triangulation(SurfaceSpec{0, 3});
  // exhaust small integer points: only the zero vector is cs0
  for (long a = 0; a <= 6; ++a)
    for (long b = 0; b <= 6; ++b)
      for (long c = 0; c <= 6; ++c) {
        TCoord t(tri.num_edges());
        t.x(0) = Int(a);
        t.x(1) = Int(b);
        t.x(2) = Int(c);
        if (!is_valid(tri, t)) continue;
        bool cs0 = classify_class(tri, t).cs0;
        CHECK(cs0 == (a == 0 && b == 0 && c == 0));
      }
}

TEST_CASE("projection to the cone") {
  auto tri = builtin_triangulation(SurfaceSpec{1, 2});
  SubspaceModel model = subspace_model(tri);
  MatQ w_basis = nullspace(model.w_constraints);
  std::mt19937_64 rng(2718);

  for (int trial = 0; trial < 200; ++trial) {
    VecQ y = random_w_point(w_basis, rng);
    VecQ s = project_to_S(tri, y);
    // lands in the cone
    CHECK(switching_residual(tri, s).isZero());
    for (const auto& cycle : tri.boundary_cycles()) {
      Rat m = s(cycle.front());
      for (int corner : cycle) m = std::min(m, s(corner));
      CHECK(m == 0);
    }
    for (Eigen::Index i = 0; i < s.size(); ++i) CHECK(s(i) >= 0);
    // idempotent
    CHECK(project_to_S(tri, s) == s);
    // invariant under shifts from V
    VecQ shifted = y;
    for (int c = 0; c < tri.num_corners(); ++c)
      shifted(c) += Rat(3 + tri.boundary_of_corner(c), 2);
    CHECK(project_to_S(tri, shifted) == s);
  }
}

TEST_CASE("quotient injectivity on the cone") {
  auto tri = builtin_triangulation(SurfaceSpec{1, 2});
  SubspaceModel model = subspace_model(tri);
  MatQ w_basis = nullspace(model.w_constraints);
  std::mt19937_64 rng(31415);
  int v_hits = 0;
  for (int trial = 0; trial < 400; ++trial) {
    VecQ s1 = project_to_S(tri, random_w_point(w_basis, rng));
    VecQ s2 = project_to_S(tri, trial % 4 == 0 ? s1 : random_w_point(w_basis, rng));
    // whenever two cone members differ by a vector constant on every
    // boundary class, they are equal
    VecQ d = s1 - s2;
    bool in_v = true;
    for (const auto& cycle : tri.boundary_cycles())
      for (int corner : cycle)
        if (d(corner) != d(cycle.front())) in_v = false;
    if (in_v) {
      CHECK(s1 == s2);
      ++v_hits;
    }
  }
  CHECK(v_hits >= 100);  // the s2 = s1 draws land here
}

TEST_CASE("closure membership in the doubled coordinate space") {
  auto tri = builtin_triangulation(SurfaceSpec{1, 1});
  SUBCASE("zero is in both closures") {
    auto f = closure_membership(tri, vq({0, 0, 0}), vq({0, 0, 0}));
    CHECK(f.es_closure);
    CHECK(f.cs_closure);
  }
  SUBCASE("complementarity violated") {
    auto f = closure_membership(tri, vq({1, 0, 0}), vq({1, 0, 0}));
    CHECK_FALSE(f.es_closure);
    CHECK_FALSE(f.cs_closure);
  }
  SUBCASE("boundary-parallel weight is essential but not a curve system") {
    auto f = closure_membership(tri, vq({2, 2, 2}), vq({0, 0, 0}));
    CHECK(f.es_closure);
    CHECK_FALSE(f.cs_closure);
  }
  SUBCASE("arc-like weights pass the carried-corner test") {
    auto f = closure_membership(tri, vq({0, 0, 4}), vq({0, 0, 0}));
    CHECK(f.es_closure);
    CHECK(f.cs_closure);
  }
  SUBCASE("integral closed systems are in the curve-system closure") {
    CoordSampler sampler(tri, 5);
    for (int trial = 0; trial < 50; ++trial) {
      TCoord c = sampler.closed_system(9);
      VecQ x(tri.num_edges()), y(tri.num_edges());
      for (int e = 0; e < tri.num_edges(); ++e) {
        x(e) = Rat(c.x(e));
        y(e) = Rat(0);
      }
      auto f = closure_membership(tri, x, y);
      CHECK(f.es_closure);
      CHECK(f.cs_closure);
    }
  }
}

TEST_CASE("rational recovery near the cone") {
  auto tri = builtin_triangulation(SurfaceSpec{1, 1});
  SubspaceModel model = subspace_model(tri);
  MatQ w_basis = nullspace(model.w_constraints);
  std::mt19937_64 rng(98);

  for (int trial = 0; trial < 40; ++trial) {
    VecQ s = project_to_S(tri, random_w_point(w_basis, rng));
    // a member of the cone is returned unchanged
    CHECK(rational_approx(tri, s, Rat(1, 100)) == s);
    // perturb within eps / (4M) and recover within eps
    VecQ p = s;
    std::uniform_int_distribution<long> num(-1, 1);
    for (Eigen::Index i = 0; i < p.size(); ++i)
      p(i) += Rat(num(rng), 100 * 4 * tri.num_corners());
    VecQ back = rational_approx(tri, p, Rat(1, 100));
    CHECK(switching_residual(tri, back).isZero());
    VecQ x = y_to_x(tri, back);
    CHECK(ml_membership(tri, x).ok);
  }
  CHECK_THROWS_AS(rational_approx(tri, VecQ(VecQ::Ones(tri.num_corners()) * Rat(10)), Rat(1, 1000)),
                  invalid_argument);
}

TEST_CASE("small integral cone members are closed-system coordinates") {
  auto tri = builtin_triangulation(SurfaceSpec{1, 1});
  for (long a = 0; a <= 8; ++a)
    for (long b = 0; b <= 8; ++b)
      for (long c = 0; c <= 8; ++c) {
        if ((a + b + c) % 2 != 0) continue;
        VecQ x = vq({a, b, c});
        if (!ml_membership(tri, x).ok) continue;
        TCoord t(tri.num_edges());
        t.x(0) = Int(a);
        t.x(1) = Int(b);
        t.x(2) = Int(c);
        REQUIRE(is_valid(tri, t));
        CHECK(classify_class(tri, t).cs0);
      }
}
