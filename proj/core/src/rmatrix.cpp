#include "wznw/rmatrix.hpp"

#include <cmath>
#include <sstream>

namespace wznw {

ScalarFunction DynamicalK::kernel() const {
  ScalarFunction f;
  switch (kind) {
    case KKind::K_nu_of_M:
      // relative shift keeps an imaginary nu on the imaginary axis
      f = chi_diff_over_z(0.5, nu * (1.0 + perturb_delta));
      break;
    case KKind::K_can_of_Omega: {
      const cplx mu = 1.0 / (4.0 * nu);
      f = scale_fn(chi_diff_over_z(0.5, mu + perturb_delta), -1.0);
      break;
    }
    case KKind::K_compact_of_Omega:
      // perturbation stays on the imaginary axis so the kernel stays real
      f = chi_diff_over_z(cplx(0.5 / theta, 0.0),
                          cplx(0.0, 1.0 + perturb_delta));
      break;
  }
  if (scale != 1.0) f = scale_fn(f, scale);
  return f;
}

RMat DynamicalK::operator_at(const RVec& x) const {
  return analytic_of_ad(kernel(), *alg, x);
}

TwoTensor DynamicalK::tensor_at(const RVec& x) const {
  return TwoTensor::from_operator(*alg, operator_at(x));
}

TwoTensor DynamicalK::derivative_at(const RVec& x, const RVec& dx) const {
  return TwoTensor::from_operator(*alg, frechet_of_ad(kernel(), *alg, x, dx));
}

TwoTensor DynamicalK::derivative_fd(const RVec& x, const RVec& dx,
                                    double h) const {
  const ScalarFunction f = kernel();
  const RMat hi = analytic_of_ad(f, *alg, x + h * dx);
  const RMat lo = analytic_of_ad(f, *alg, x - h * dx);
  return TwoTensor::from_operator(*alg, (hi - lo) / (2.0 * h));
}

DynamicalK make_K_nu(const LieAlgebra& alg, cplx nu) {
  return DynamicalK{&alg, KKind::K_nu_of_M, nu, 0.0};
}

DynamicalK make_K_canonical(const LieAlgebra& alg, double nu) {
  if (nu == 0.0) throw DomainError("make_K_canonical: nu must be nonzero");
  return DynamicalK{&alg, KKind::K_can_of_Omega, nu, 0.0};
}

DynamicalK make_K_compact(const LieAlgebra& alg, double theta) {
  if (theta == 0.0)
    throw DomainError("make_K_compact: theta must be nonzero");
  return DynamicalK{&alg, KKind::K_compact_of_Omega, 0.0, theta};
}

TwoTensor constant_r_part(CdybeForm form, const DynamicalK& K) {
  const LieAlgebra& alg = *K.alg;
  switch (form) {
    case CdybeForm::dynamical_only:
      return TwoTensor::zero(alg);
    case CdybeForm::canonical:
      return standard_split_r(alg);
    case CdybeForm::compact_canonical:
      return compact_r(alg);
    case CdybeForm::full_exchange:
      if (alg.kind == AlgebraKind::sl_split) {
        if (K.nu.imag() != 0.0)
          throw DomainError("full_exchange on sl(n): nu must be real");
        return 2.0 * K.nu.real() * standard_split_r(alg);
      }
      if (alg.kind == AlgebraKind::su_compact) {
        // R^nu = theta Ri corresponds to nu = i theta.
        if (K.nu.real() != 0.0)
          throw DomainError("full_exchange on su(n): nu must be imaginary");
        return K.nu.imag() * compact_r(alg);
      }
      throw DomainError("full_exchange: unsupported algebra kind");
  }
  throw InternalFaultError("constant_r_part: bad form");
}

RMat derivative_directions(CdybeForm form, const DynamicalK& K,
                           const RVec& x) {
  const LieAlgebra& alg = *K.alg;
  const RMat A = alg.ad(x);
  switch (form) {
    case CdybeForm::full_exchange: {
      const RMat r_op =
          constant_r_part(form, K).as_operator() + K.operator_at(x);
      return analytic_of_ad(chi_nu_fn(0.5), alg, x) - A * r_op;
    }
    case CdybeForm::dynamical_only:
      return -analytic_of_ad(chi_nu_fn(0.5), alg, x);
    case CdybeForm::canonical: {
      const RMat R_op = standard_split_r(alg).as_operator();
      return analytic_of_ad(chi_nu_fn(0.5), alg, x) - A * R_op;
    }
    case CdybeForm::compact_canonical: {
      const RMat Ri_op = compact_r(alg).as_operator();
      // chi(i z) = z cot z.
      return analytic_of_ad(chi_nu_fn(cplx(0.0, 1.0)), alg, x) - A * Ri_op;
    }
  }
  throw InternalFaultError("derivative_directions: bad form");
}

namespace {

double rhs_coefficient(CdybeForm form, const DynamicalK& K) {
  switch (form) {
    case CdybeForm::full_exchange:
      return -0.25;
    case CdybeForm::dynamical_only: {
      const cplx c = 0.25 - K.nu * K.nu;
      return c.real();
    }
    case CdybeForm::canonical:
      return -1.0 / (16.0 * K.nu.real() * K.nu.real());
    case CdybeForm::compact_canonical:
      return -1.0 / (4.0 * K.theta * K.theta);
  }
  throw InternalFaultError("rhs_coefficient: bad form");
}

TwoTensor kernel_derivative(const DynamicalK& K, const RVec& x, const RVec& v,
                            const CdybeOptions& opt) {
  switch (opt.route) {
    case DerivativeRoute::fd_only:
      return K.derivative_fd(x, v, opt.fd_step);
    case DerivativeRoute::exact_only:
      return K.derivative_at(x, v);
    case DerivativeRoute::exact_checked: {
      TwoTensor exact = K.derivative_at(x, v);
      const TwoTensor fd = K.derivative_fd(x, v, opt.fd_step);
      const double gap = (exact.coeffs - fd.coeffs).norm();
      if (gap > opt.fd_check_tol * (1.0 + exact.norm())) {
        std::ostringstream os;
        os << "kernel derivative routes disagree by " << gap;
        throw InternalFaultError(os.str());
      }
      return exact;
    }
  }
  throw InternalFaultError("kernel_derivative: bad route");
}

}  // namespace

ThreeTensor cdybe_residual(CdybeForm form, const DynamicalK& K, const RVec& x,
                           const CdybeOptions& opt) {
  const LieAlgebra& alg = *K.alg;
  const int d = alg.dim;

  TwoTensor r = K.tensor_at(x);
  if (form != CdybeForm::dynamical_only) r += constant_r_part(form, K);

  ThreeTensor base = bracket_12_23(r, r);

  const RMat dir = derivative_directions(form, K, x);
  ThreeTensor dterm = ThreeTensor::zero(alg);
  for (int a = 0; a < d; ++a) {
    const TwoTensor dK = kernel_derivative(K, x, dir.col(a), opt);
    for (int p = 0; p < d; ++p)
      if (alg.form_inv(p, a) != 0.0) dterm.slab[p] += alg.form_inv(p, a) * dK.coeffs;
  }

  base += dterm;
  ThreeTensor res = base.cyclic_sum();
  res -= rhs_coefficient(form, K) * f_hat(alg);
  return res;
}

std::pair<Mat, Mat> factorize_G_star(const Mat& Omega) {
  const Eigen::Index n = Omega.rows();
  Mat J = Mat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) J(i, n - 1 - i) = 1.0;

  // Omega = U D L with U unit upper, L unit lower: run an unpivoted LU on
  // the index-reversed matrix.
  const Mat P = J * Omega * J;
  Mat Lw = Mat::Identity(n, n);
  Mat Uw = P;
  for (Eigen::Index k = 0; k < n; ++k) {
    const cplx piv = Uw(k, k);
    if (std::abs(piv) < 1e-12 * (1.0 + P.norm()))
      throw FactorizationError("factorize_G_star: vanishing principal minor");
    for (Eigen::Index i = k + 1; i < n; ++i) {
      const cplx m = Uw(i, k) / piv;
      Lw(i, k) = m;
      Uw.row(i) -= m * Uw.row(k);
    }
  }
  CVec dw = Uw.diagonal();
  Mat Uw_unit = dw.asDiagonal().inverse() * Uw;

  const Mat U = J * Lw * J;        // unit upper triangular
  const Mat L = J * Uw_unit * J;   // unit lower triangular
  CVec d(n);
  for (Eigen::Index i = 0; i < n; ++i) d(i) = dw(n - 1 - i);

  CVec sq(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const cplx di = d(i);
    if (di.real() <= 0.0 && std::abs(di.imag()) < 1e-12 * (1.0 + std::abs(di)))
      throw BranchCutError(
          "factorize_G_star: diagonal factor on the closed negative axis");
    sq(i) = std::sqrt(di);
  }

  const Mat upper = U * Mat(sq.asDiagonal());
  const Mat lower =
      L.inverse() * Mat(sq.asDiagonal()).inverse();
  return {upper, lower};
}

}  // namespace wznw
