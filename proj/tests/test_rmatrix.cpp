#include "wznw/rmatrix.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include "doctest.h"
#include "wznw/liealg.hpp"
#include "wznw/report.hpp"
#include "wznw/tensors.hpp"

using namespace wznw;

namespace {

RVec sample_vec(const LieAlgebra& alg, int s, int block = 0) {
  RVec v(alg.dim);
  for (int i = 0; i < alg.dim; ++i)
    v(i) = sample_uniform(17, "rmatrix", s, block * 64 + i, 0.3);
  return v;
}

}  // namespace

TEST_CASE("constant r-matrices satisfy their modified Yang-Baxter identity") {
  for (const LieAlgebra& alg : {build_sl(2), build_sl(3)}) {
    const TwoTensor R = standard_split_r(alg);
    const ThreeTensor defect =
        bracket_12_23(R, R).cyclic_sum() + 0.25 * f_hat(alg);
    CHECK(defect.max_abs() < 1e-12);
  }
  for (const LieAlgebra& alg : {build_su(2), build_su(3)}) {
    const TwoTensor Ri = compact_r(alg);
    const ThreeTensor defect =
        bracket_12_23(Ri, Ri).cyclic_sum() - f_hat(alg);
    CHECK(defect.max_abs() < 1e-12);
  }
}

TEST_CASE("dynamical kernel vanishes at nu = 1/2") {
  const LieAlgebra sl2 = build_sl(2);
  DynamicalK K = make_K_nu(sl2, 0.5);
  CHECK(K.operator_at(sample_vec(sl2, 0)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("dynamical kernel is equivariant under the adjoint action") {
  const LieAlgebra sl2 = build_sl(2);
  DynamicalK K = make_K_nu(sl2, 0.35);
  const RVec m = sample_vec(sl2, 1, 0);
  const GroupElement g = group_exp(sl2, sample_vec(sl2, 1, 1), GroupTag::SL);
  const RVec gm = group_Ad(g, AlgebraElement{&sl2, m}).coeffs;
  // coefficient-space Ad matrix, column by column
  RMat Ad(3, 3);
  for (int k = 0; k < 3; ++k)
    Ad.col(k) = group_Ad(g, AlgebraElement{&sl2, RVec::Unit(3, k)}).coeffs;
  const RMat lhs = K.operator_at(gm);
  const RMat rhs = Ad * K.operator_at(m) * Ad.inverse();
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("exact kernel derivative agrees with finite differences") {
  const LieAlgebra sl3 = build_sl(3);
  DynamicalK K = make_K_nu(sl3, 0.35);
  const RVec m = sample_vec(sl3, 2, 0);
  const RVec dm = sample_vec(sl3, 2, 1);
  const TwoTensor ex = K.derivative_at(m, dm);
  const TwoTensor fd = K.derivative_fd(m, dm, 1e-6);
  CHECK((ex.coeffs - fd.coeffs).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("derivative-route disagreement raises an internal fault") {
  const LieAlgebra sl2 = build_sl(2);
  DynamicalK K = make_K_nu(sl2, 0.35);
  CdybeOptions opt;
  opt.route = DerivativeRoute::exact_checked;
  opt.fd_step = 0.2;  // absurd step: the cross-check must not agree
  opt.fd_check_tol = 1e-14;
  CHECK_THROWS_AS(
      (void)cdybe_residual(CdybeForm::dynamical_only, K, sample_vec(sl2, 3),
                           opt),
      InternalFaultError);
}

TEST_CASE("residuals of the four equation forms vanish at sample points") {
  const LieAlgebra sl2 = build_sl(2);
  const LieAlgebra su2 = build_su(2);
  for (int s = 0; s < 3; ++s) {
    const RVec m = sample_vec(sl2, 10 + s);
    DynamicalK K = make_K_nu(sl2, 0.35);
    CHECK(cdybe_residual(CdybeForm::full_exchange, K, m).max_abs() < 1e-12);
    CHECK(cdybe_residual(CdybeForm::dynamical_only, K, m).max_abs() < 1e-12);
    DynamicalK Kc = make_K_canonical(sl2, 0.35);
    CHECK(cdybe_residual(CdybeForm::canonical, Kc, m).max_abs() < 1e-12);
    DynamicalK Kk = make_K_compact(su2, 0.3);
    CHECK(cdybe_residual(CdybeForm::compact_canonical, Kk, m).max_abs() <
          1e-12);
  }
}

TEST_CASE("perturbed kernel breaks the equation") {
  const LieAlgebra sl2 = build_sl(2);
  DynamicalK K = make_K_nu(sl2, 0.35);
  K.perturb_delta = 0.25;
  CHECK(cdybe_residual(CdybeForm::full_exchange, K, sample_vec(sl2, 20))
            .max_abs() > 1e-3);
}

TEST_CASE("domain checks on the equation forms") {
  const LieAlgebra sl2 = build_sl(2);
  const LieAlgebra su2 = build_su(2);
  DynamicalK bad_split = make_K_nu(sl2, cplx(0.0, 0.3));
  CHECK_THROWS_AS((void)constant_r_part(CdybeForm::full_exchange, bad_split),
                  DomainError);
  DynamicalK bad_compact = make_K_nu(su2, 0.35);
  CHECK_THROWS_AS((void)constant_r_part(CdybeForm::full_exchange, bad_compact),
                  DomainError);
  CHECK_THROWS_AS((void)make_K_canonical(sl2, 0.0), DomainError);
  CHECK_THROWS_AS((void)make_K_compact(su2, 0.0), DomainError);
}

TEST_CASE("triangular factorization of the dual-group variable") {
  const LieAlgebra sl2 = build_sl(2);
  const Mat Om = sl2.matrix_of(sample_vec(sl2, 30)).exp();
  const auto [up, lo] = factorize_G_star(Om);
  CHECK((up * lo.inverse() - Om).cwiseAbs().maxCoeff() < 1e-12);
  // triangular shapes
  CHECK(std::abs(up(1, 0)) < 1e-14);
  CHECK(std::abs(lo(0, 1)) < 1e-14);
  // opposite-triangular factors share reciprocal diagonals
  CHECK(std::abs(up(0, 0) * lo(0, 0) - 1.0) < 1e-12);

  Mat swap(2, 2);
  swap << 0, 1, 1, 0;
  CHECK_THROWS_AS((void)factorize_G_star(swap), FactorizationError);
  Mat negdiag(2, 2);
  negdiag << -2, 0, 0, -0.5;
  CHECK_THROWS_AS((void)factorize_G_star(negdiag), BranchCutError);
}
