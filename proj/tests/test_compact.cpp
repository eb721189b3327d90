#include "wznw/compact.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include "doctest.h"
#include "wznw/liealg.hpp"
#include "wznw/tensors.hpp"

using namespace wznw;

namespace {

RVec point3(double a, double b, double c) {
  RVec v(3);
  v << a, b, c;
  return v;
}

Mat sample_sl2c(const RealifiedDouble& dd) {
  // a generic element of SL(2,C) near the identity
  const Mat u = dd.compact.matrix_of(point3(0.21, -0.14, 0.09));
  const Mat y = dd.borel.matrix_of(point3(0.17, 0.06, -0.23));
  return (u + y).exp();
}

}  // namespace

TEST_CASE("Iwasawa factors reassemble the group element") {
  const RealifiedDouble dd = build_realified_double(2);
  const Mat a = sample_sl2c(dd);
  auto [fac, cc] = iwasawa_cartan(dd, a);
  CHECK((fac.g.inverse() * fac.bt - a).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((fac.b * fac.gt - a).cwiseAbs().maxCoeff() < 1e-12);
  // unitary compact factors, positive-diagonal triangular Borel factors
  CHECK((fac.g * dagger(fac.g) - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() <
        1e-12);
  CHECK((fac.gt * dagger(fac.gt) - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() <
        1e-12);
  CHECK(std::abs(fac.b(1, 0)) < 1e-13);
  CHECK(std::abs(fac.bt(1, 0)) < 1e-13);
  CHECK(fac.b(0, 0).real() > 0.0);
  CHECK(fac.bt(0, 0).real() > 0.0);
  // Cartan coordinates: Omega = a a^dag = e^{2 i w}
  const Mat Om = a * dagger(a);
  CHECK((cc.Omega - Om).cwiseAbs().maxCoeff() < 1e-12);
  const Mat w = dd.compact.matrix_of(cc.omega.coeffs);
  CHECK(((cplx(0.0, 2.0) * w).exp() - Om).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("Borel partner inverts the compact transfer map") {
  const RealifiedDouble dd = build_realified_double(2);
  const Mat X = dd.compact.matrix_of(point3(0.31, -0.22, 0.18));
  const Mat Y = borel_partner(dd, X);
  CHECK((cplx(0.0, 1.0) * (Y + dagger(Y)) - X).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(std::abs(Y(1, 0)) < 1e-13);
}

TEST_CASE("structural identities of the splitting hold on both ranks") {
  for (int n : {2, 3}) {
    const RealifiedDouble dd = build_realified_double(n);
    const int d = dd.compact.dim;
    RVec cx(d), cy(d);
    for (int i = 0; i < d; ++i) {
      cx(i) = 0.3 * std::cos(1.7 * i + 0.4);
      cy(i) = 0.3 * std::sin(2.3 * i - 0.8);
    }
    const Mat X = dd.compact.matrix_of(cx);
    const Mat w = dd.compact.matrix_of(cy);
    const Mat Y = borel_partner(dd, X);
    const Mat alpha = borel_partner(dd, dd.compact.matrix_of(0.6 * cy));
    const GroupElement g = group_exp(dd.compact, 0.5 * cx, GroupTag::SU);
    CHECK(appendix_identity_residual(dd, AppendixId::A15, Y) < 1e-10);
    CHECK(appendix_identity_residual(dd, AppendixId::A16, X) < 1e-10);
    CHECK(appendix_identity_residual(dd, AppendixId::A17, alpha, Y, g.matrix) <
          1e-10);
    CHECK(appendix_identity_residual(dd, AppendixId::A23, Y, w) < 1e-10);
    CHECK(appendix_identity_residual(dd, AppendixId::A24, X) < 1e-10);
  }
}

TEST_CASE("closed-form gradients on the Borel group match finite differences") {
  const RealifiedDouble dd = build_realified_double(2);
  const Mat b = dd.borel.matrix_of(point3(0.17, 0.06, -0.23)).exp();
  const AlgebraElement T{&dd.compact, point3(0.4, -0.3, 0.2)};
  auto r = borel_gradient_residual(dd, b, T, 1e-5);
  CHECK(r.D_residual < 1e-7);
  CHECK(r.Dprime_residual < 1e-7);
}

TEST_CASE("the double bracket and the chart bracket agree on probes") {
  const RealifiedDouble dd = build_realified_double(2);
  const Mat a = sample_sl2c(dd);
  Probe entry_re{Probe::Kind::g_entry_re, 0, 1, RVec()};
  Probe entry_im{Probe::Kind::g_entry_im, 1, 0, RVec()};
  Probe linear{Probe::Kind::omega_linear, 0, 0, point3(0.5, -0.2, 0.3)};
  CHECK(lemma3_residual(dd, 0.3, entry_re, linear, a, 1e-5) < 1e-6);
  CHECK(lemma3_residual(dd, 0.3, entry_im, linear, a, 1e-5) < 1e-6);
  CHECK(lemma3_residual(dd, 0.3, entry_re, entry_im, a, 1e-5) < 1e-6);
}

TEST_CASE("the dressing flow transfers to the Borel factor") {
  const RealifiedDouble dd = build_realified_double(2);
  const Mat b = dd.borel.matrix_of(point3(0.17, 0.06, -0.23)).exp();
  const AlgebraElement X{&dd.compact, point3(0.31, -0.22, 0.18)};
  auto F = [](const Mat& Om) { return Om(0, 0).real() + 2.0 * Om(0, 1).imag(); };
  CHECK(derivative_transfer_residual(dd, F, b, X, 1e-5) < 1e-7);
  CHECK(flow_consistency_residual(dd, b, X, 0.4) < 1e-10);
}

TEST_CASE("the natural-form equation holds on the Borel group") {
  const RealifiedDouble dd = build_realified_double(2);
  const Mat b = dd.borel.matrix_of(point3(0.17, 0.06, -0.23)).exp();
  CHECK(natural_plcdybe_residual(dd, 0.3, b, 1e-5).max_abs() < 1e-7);
  CHECK(natural_plcdybe_residual(dd, 0.3, b, 1e-5, 2.0).max_abs() > 1e-3);
}

TEST_CASE("the compact monodromy power map intertwines the two brackets") {
  const LieAlgebra su2 = build_su(2);
  const RVec m = point3(0.22, -0.11, 0.17);
  TheoremCheck t = theorem2_check(su2, 0.3, m);
  CHECK(t.map_residual < 1e-9);
  CHECK(t.cross_residual < 1e-9);
  TheoremCheck bad = theorem2_check(su2, 0.3, m, 0.5);
  CHECK(bad.map_residual > 1e-3);
}
