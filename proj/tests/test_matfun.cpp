#include "wznw/matfun.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "doctest.h"
#include "wznw/liealg.hpp"
#include "wznw/report.hpp"

using namespace wznw;

namespace {

// Frozen high-precision reference values (multiprecision evaluation of the
// defining formulas).
constexpr double kF0At1 = 0.08197670686932642;
constexpr double kChiAt03 = 1.0298215290965225;
constexpr double kF035At07 = 0.029392832725281005;
constexpr double kLambdaAt04 = 1.4527729767328753;
constexpr double kZCotZAt05 = 0.91524386085622596;

RVec sample_vec(const LieAlgebra& alg, int s, int block = 0) {
  RVec v(alg.dim);
  for (int i = 0; i < alg.dim; ++i)
    v(i) = sample_uniform(11, "matfun", s, block * 64 + i, 0.3);
  return v;
}

}  // namespace

TEST_CASE("scalar functions match frozen reference values") {
  CHECK(f_nu_fn(0.0).value(1.0).real() == doctest::Approx(kF0At1).epsilon(1e-14));
  CHECK(chi_fn().value(0.3).real() == doctest::Approx(kChiAt03).epsilon(1e-14));
  CHECK(f_nu_fn(0.35).value(0.7).real() ==
        doctest::Approx(kF035At07).epsilon(1e-14));
  CHECK(lambda_fn().value(0.4).real() ==
        doctest::Approx(kLambdaAt04).epsilon(1e-14));
  CHECK(chi_nu_fn(cplx(0, 1)).value(0.5).real() ==
        doctest::Approx(kZCotZAt05).epsilon(1e-14));
}

TEST_CASE("parity: chi is even, the kernel family is odd") {
  const ScalarFunction chi = chi_fn();
  const ScalarFunction f = f_nu_fn(0.35);
  const ScalarFunction k = k_compact_fn(0.3);
  for (double z : {0.05, 0.31, 0.8}) {
    CHECK(std::abs(chi.value(z) - chi.value(-z)) < 1e-14);
    CHECK(std::abs(f.value(z) + f.value(-z)) < 1e-14);
    CHECK(std::abs(k.value(z) + k.value(-z)) < 1e-14);
  }
}

TEST_CASE("series branch joins the closed form continuously") {
  for (const ScalarFunction& f :
       {chi_fn(), f_nu_fn(0.35), lambda_fn(), k_compact_fn(0.3)}) {
    const cplx lo = f.value(cplx(0.01 - 1e-9, 0.0));
    const cplx hi = f.value(cplx(0.01 + 1e-9, 0.0));
    CHECK(std::abs(hi - lo) < 1e-8);
    // derivative consistency against central differences
    const double h = 1e-6;
    const cplx fd = (f.value(0.2 + h) - f.value(0.2 - h)) / (2.0 * h);
    CHECK(std::abs(fd - f.derivative(0.2)) < 1e-8);
  }
}

TEST_CASE("pole guard rejects arguments near singularities") {
  const ScalarFunction chi = chi_fn();
  CHECK_THROWS_AS(chi.guard(cplx(0.0, 3.14159265)), PoleProximityError);
  CHECK_NOTHROW(chi.guard(cplx(0.5, 0.0)));
  // z cot z has poles on the real axis
  CHECK_THROWS_AS(eval_scalar(ScalarKind::f_nu_compact, 0.3,
                              cplx(3.14159265, 0.0)),
                  PoleProximityError);
  CHECK(std::abs(eval_scalar(ScalarKind::chi, 0.0, cplx(0.3, 0.0)).real() -
                 kChiAt03) < 1e-13);
}

TEST_CASE("principal matrix logarithm round-trips and guards the cut") {
  const LieAlgebra sl2 = build_sl(2);
  const RVec m = sample_vec(sl2, 0);
  const Mat M = sl2.matrix_of(m).exp();
  CHECK((mat_log_principal(sl2, M).coeffs - m).cwiseAbs().maxCoeff() < 1e-12);

  Mat neg(2, 2);
  neg << -2.0, 0.0, 0.0, -0.5;
  CHECK_THROWS_AS((void)mat_log_principal(sl2, neg), BranchCutError);
}

TEST_CASE("functions of ad agree between coefficient and matrix routes") {
  const LieAlgebra su2 = build_su(2);
  const RVec m = sample_vec(su2, 1, 0);
  const RVec v = sample_vec(su2, 1, 1);
  const ScalarFunction chi = chi_fn();
  const RMat op = analytic_of_ad(chi, su2, m);
  const Mat direct =
      apply_analytic_ad_matrix(chi, su2.matrix_of(m), su2.matrix_of(v));
  CHECK((su2.matrix_of(op * v) - direct).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("directional derivative of f(ad) converges at second order") {
  const LieAlgebra sl2 = build_sl(2);
  const RVec m = sample_vec(sl2, 2, 0);
  const RVec dm = sample_vec(sl2, 2, 1);
  const ScalarFunction f = f_nu_fn(0.35);
  const RMat exact = frechet_of_ad(f, sl2, m, dm);
  auto fd_err = [&](double h) {
    const RMat hi = analytic_of_ad(f, sl2, m + h * dm);
    const RMat lo = analytic_of_ad(f, sl2, m - h * dm);
    return (RMat((hi - lo) / (2.0 * h)) - exact).cwiseAbs().maxCoeff();
  };
  const double e1 = fd_err(1e-3);
  const double e2 = fd_err(5e-4);
  CHECK(e1 < 1e-5);
  const double ratio = e1 / e2;
  CHECK(ratio > 2.5);  // second-order central differences: ratio ~ 4
  CHECK(ratio < 6.0);
}

TEST_CASE("logarithm directional derivative matches finite differences") {
  const LieAlgebra sl2 = build_sl(2);
  const RVec m = sample_vec(sl2, 3, 0);
  const RVec dm = sample_vec(sl2, 3, 1);
  const RVec exact = dlog_directional(AlgebraElement{&sl2, m},
                                      AlgebraElement{&sl2, dm}, Side::right)
                         .coeffs;
  const double h = 1e-6;
  const Mat hi = (sl2.matrix_of(m).exp() * sl2.matrix_of(h * dm).exp());
  const Mat lo = (sl2.matrix_of(m).exp() * sl2.matrix_of(-h * dm).exp());
  const RVec fd = (mat_log_principal(sl2, hi).coeffs -
                   mat_log_principal(sl2, lo).coeffs) /
                  (2.0 * h);
  CHECK((exact - fd).cwiseAbs().maxCoeff() < 1e-8);
}
