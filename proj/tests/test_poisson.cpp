#include "wznw/poisson.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include "doctest.h"
#include "wznw/liealg.hpp"

using namespace wznw;

namespace {

RVec point3(double a, double b, double c) {
  RVec v(3);
  v << a, b, c;
  return v;
}

RVec chart_point(const PoissonChart& c, const RVec& m, const RVec& xi) {
  RVec x = RVec::Zero(c.dim);
  x.head(3) = 0.5 * m;
  if (c.dim >= 6) x.segment(3, 3) = xi;
  if (c.dim == 9) x.tail(3) = m;
  return x;
}

}  // namespace

TEST_CASE("chart bivectors are antisymmetric") {
  const LieAlgebra sl2 = build_sl(2);
  const LieAlgebra su2 = build_su(2);
  const RVec m = point3(0.22, -0.11, 0.17);
  const RVec xi = point3(0.05, 0.21, -0.13);
  ChartParams p;
  p.nu = 0.35;
  p.theta = 0.3;
  p.base = sl2.matrix_of(0.7 * xi).exp();
  for (auto kind : {ChartKind::sklyanin, ChartKind::sts_log,
                    ChartKind::heisenberg, ChartKind::wznw_groupoid,
                    ChartKind::canonical_groupoid}) {
    PoissonChart c = build_chart(kind, sl2, p);
    const RVec x = chart_point(c, m, xi);
    const RMat Pi = c.bivector(x);
    CHECK((Pi + Pi.transpose()).cwiseAbs().maxCoeff() < 1e-12);
  }
  ChartParams pc = p;
  pc.base = su2.matrix_of(0.5 * xi).exp();
  for (auto kind :
       {ChartKind::compact_heisenberg, ChartKind::compact_groupoid}) {
    PoissonChart c = build_chart(kind, su2, pc);
    const RVec x = chart_point(c, m, xi);
    const RMat Pi = c.bivector(x);
    CHECK((Pi + Pi.transpose()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("every chart bracket satisfies the Jacobi identity") {
  const LieAlgebra sl2 = build_sl(2);
  const LieAlgebra su2 = build_su(2);
  const RVec m = point3(0.22, -0.11, 0.17);
  const RVec xi = point3(0.05, 0.21, -0.13);
  ChartParams p;
  p.nu = 0.35;
  p.theta = 0.3;
  p.base = sl2.matrix_of(0.7 * xi).exp();
  for (auto kind : {ChartKind::sklyanin, ChartKind::sts_log,
                    ChartKind::heisenberg, ChartKind::wznw_groupoid,
                    ChartKind::canonical_groupoid}) {
    PoissonChart c = build_chart(kind, sl2, p);
    CHECK(jacobiator_max(c, chart_point(c, m, xi), 1e-4) < 1e-6);
  }
  ChartParams pc = p;
  pc.base = su2.matrix_of(0.5 * xi).exp();
  for (auto kind :
       {ChartKind::compact_heisenberg, ChartKind::compact_groupoid}) {
    PoissonChart c = build_chart(kind, su2, pc);
    CHECK(jacobiator_max(c, chart_point(c, m, xi), 1e-4) < 1e-6);
  }
}

TEST_CASE("a rescaled kernel breaks the Jacobi identity") {
  const LieAlgebra sl2 = build_sl(2);
  const RVec m = point3(0.22, -0.11, 0.17);
  const RVec xi = point3(0.05, 0.21, -0.13);
  ChartParams p;
  p.nu = 0.35;
  p.base = sl2.matrix_of(0.7 * xi).exp();
  p.k_scale = 2.0;
  PoissonChart bad = build_chart(ChartKind::canonical_groupoid, sl2, p);
  CHECK(jacobiator_max(bad, chart_point(bad, m, xi), 1e-4) > 1e-3);
}

TEST_CASE("the identity map is a Poisson map") {
  const LieAlgebra sl2 = build_sl(2);
  PoissonChart c = wznw_monodromy_chart(sl2, 0.35);
  SmoothMap id;
  id.source = &c;
  id.target = &c;
  id.forward = [](const RVec& x) { return x; };
  id.jacobian = [&](const RVec&) { return RMat::Identity(c.dim, c.dim); };
  CHECK(poisson_map_residual(id, point3(0.22, -0.11, 0.17))
            .cwiseAbs()
            .maxCoeff() < 1e-14);
}

TEST_CASE("the monodromy power map intertwines the two brackets") {
  const LieAlgebra sl2 = build_sl(2);
  const RVec m = point3(0.22, -0.11, 0.17);
  TheoremCheck t = theorem1_check(sl2, 0.35, m);
  CHECK(t.map_residual < 1e-9);
  CHECK(t.cross_residual < 1e-9);
  TheoremCheck bad = theorem1_check(sl2, 0.35, m, 0.5);
  CHECK(bad.map_residual > 1e-2);
}

TEST_CASE("the monodromy bracket linearizes in the Abelian limit") {
  const LieAlgebra sl2 = build_sl(2);
  CHECK(abelian_limit_residual(sl2, point3(0.22, -0.11, 0.17)) < 1e-12);
}

TEST_CASE("the two groupoid charts are Poisson-isomorphic") {
  const LieAlgebra sl2 = build_sl(2);
  const RVec m = point3(0.22, -0.11, 0.17);
  const RVec xi = point3(0.05, 0.21, -0.13);
  const RVec mt = point3(-0.19, 0.07, 0.12);
  RVec x3(9);
  x3 << mt, xi, m;
  const Mat g0 = sl2.matrix_of(0.7 * xi).exp();
  CHECK(groupoid_iso_residual(sl2, 0.35, g0, x3) < 1e-8);
  CHECK(groupoid_iso_residual(sl2, 0.35, g0, x3, -1.0) > 1e-3);
}

TEST_CASE("the momentum map generates the dressing action") {
  const LieAlgebra sl2 = build_sl(2);
  const RVec m = point3(0.22, -0.11, 0.17);
  const RVec xi = point3(0.05, 0.21, -0.13);
  const Mat g0 = sl2.matrix_of(0.3 * xi).exp();
  for (int a = 0; a < 3; ++a) {
    AlgebraElement T{&sl2, RVec::Unit(3, a)};
    const Mat res =
        momentum_generation_residual(sl2, 0.35, g0, xi, 0.8 * m, T, 1e-6);
    CHECK(res.cwiseAbs().maxCoeff() < 1e-8);
  }
}
