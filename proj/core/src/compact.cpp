#include "wznw/compact.hpp"

#include <cmath>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "wznw/matfun.hpp"
#include "wznw/rmatrix.hpp"

namespace wznw {
namespace {

// Hermitian logarithm of a positive-definite matrix.
Mat hermitian_log(const Mat& Omega) {
  Eigen::SelfAdjointEigenSolver<Mat> es(Omega);
  if (es.info() != Eigen::Success)
    throw InternalFaultError("hermitian_log: eigensolver failed");
  const RVec ev = es.eigenvalues();
  if (ev.minCoeff() <= 0.0)
    throw DomainError("hermitian_log: matrix not positive definite");
  RVec lg = ev.array().log();
  return es.eigenvectors() * lg.asDiagonal().toDenseMatrix().cast<cplx>() *
         es.eigenvectors().adjoint();
}

// Upper-triangular b with positive diagonal and b b^dag = H (positive
// definite): reversed Cholesky through the index-flip matrix J.
Mat reverse_cholesky_upper(const Mat& H) {
  const Eigen::Index n = H.rows();
  Mat J = Mat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) J(i, n - 1 - i) = 1.0;
  Eigen::LLT<Mat> llt(J * H * J);
  if (llt.info() != Eigen::Success)
    throw FactorizationError("reverse_cholesky_upper: LLT failed");
  return J * Mat(llt.matrixL()) * J;
}

// QR with the diagonal of R made positive real.
void positive_qr(const Mat& A, Mat& Q, Mat& R) {
  Eigen::HouseholderQR<Mat> qr(A);
  Q = qr.householderQ();
  R = qr.matrixQR().triangularView<Eigen::Upper>();
  const Eigen::Index n = A.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    const cplx d = R(i, i);
    const cplx phase = d / std::abs(d);
    R.row(i) /= phase;
    Q.col(i) *= phase;
  }
}

RMat ri_operator(const LieAlgebra& su) {
  return compact_r(su).as_operator();
}

// Matrix of the linear bijection B -> g, Y -> i(Y + Y^dag), in the real
// bases of the two halves.
RMat borel_to_compact_map(const RealifiedDouble& dd) {
  const int d = dd.dim_g;
  RMat M(d, d);
  const cplx I(0.0, 1.0);
  for (int k = 0; k < d; ++k) {
    const Mat& Y = dd.borel.basis[k];
    M.col(k) = dd.compact.coeffs_of(I * (Y + dagger(Y)));
  }
  return M;
}

double theta1_pairing(const Mat& X, const Mat& Y) {
  return (X * Y).trace().imag();
}

}  // namespace

std::pair<IwasawaFactors, CartanCoords> iwasawa_cartan(
    const RealifiedDouble& dd, const Mat& a) {
  IwasawaFactors f;
  f.a = a;
  const Mat Omega = a * a.adjoint();
  f.b = reverse_cholesky_upper(Omega);
  f.gt = f.b.inverse() * a;

  Mat Q, R;
  positive_qr(a, Q, R);
  f.g = Q.adjoint();
  f.bt = R;

  CartanCoords c;
  c.Omega = Omega;
  const Mat H = hermitian_log(Omega);
  const Mat w = cplx(0.0, -0.5) * H;
  c.omega = AlgebraElement{&dd.compact, dd.compact.coeffs_of(w)};
  return {f, c};
}

Mat borel_partner(const RealifiedDouble& dd, const Mat& X) {
  const RMat M = borel_to_compact_map(dd);
  const RVec y = M.fullPivLu().solve(dd.compact.coeffs_of(X));
  return dd.borel.matrix_of(y);
}

double appendix_identity_residual(const RealifiedDouble& dd, AppendixId id,
                                  const Mat& arg1, const Mat& arg2,
                                  const Mat& g) {
  const LieAlgebra& su = dd.compact;
  const RMat Ri = ri_operator(su);
  const cplx I(0.0, 1.0);
  switch (id) {
    case AppendixId::A15: {
      const Mat& Y = arg1;
      const Mat X = I * (Y + dagger(Y));
      const Mat lhs = su.matrix_of(Ri * su.coeffs_of(X));
      return (lhs - (dagger(Y) - Y)).cwiseAbs().maxCoeff();
    }
    case AppendixId::A16: {
      const Mat& X = arg1;
      const Mat D = I * X + su.matrix_of(Ri * su.coeffs_of(X));
      const double in_borel = dd.pi_g(D).cwiseAbs().maxCoeff();
      const Mat back = cplx(0.0, -0.5) * (D + dagger(D));
      return std::max(in_borel, (back - X).cwiseAbs().maxCoeff());
    }
    case AppendixId::A17: {
      const Mat& alpha = arg1;
      const Mat& beta = arg2;
      const Mat ginv = g.inverse();
      const double lhs = 4.0 * theta1_pairing(alpha, g * beta * ginv);
      const cplx r1 =
          (I * (beta + dagger(beta)) * ginv * (dagger(alpha) - alpha) * g)
              .trace();
      const cplx r2 =
          (I * (alpha + dagger(alpha)) * g * (dagger(beta) - beta) * ginv)
              .trace();
      return std::abs(lhs - (r1 + r2).real()) + std::abs((r1 + r2).imag());
    }
    case AppendixId::A23: {
      const Mat& Y = arg1;
      const Mat& w = arg2;
      const Mat iw = I * w;
      const ScalarFunction lam = lambda_fn();
      const Mat lhs = I * apply_analytic_ad_matrix(lam, Mat(-iw), Y) +
                      I * apply_analytic_ad_matrix(lam, iw, dagger(Y));
      const Mat X = I * (Y + dagger(Y));
      const Mat RiX = su.matrix_of(Ri * su.coeffs_of(X));
      const Mat rhs =
          -(w * RiX - RiX * w) + apply_analytic_ad_matrix(chi_fn(), iw, X);
      return (lhs - rhs).cwiseAbs().maxCoeff();
    }
    case AppendixId::A24: {
      const Mat& X = arg1;
      const Mat lhs = su.matrix_of(Ri * su.coeffs_of(X));
      return (lhs - dd.pi_g(-I * X)).cwiseAbs().maxCoeff();
    }
  }
  throw InternalFaultError("appendix_identity_residual: bad id");
}

GradientTransferResidual borel_gradient_residual(const RealifiedDouble& dd,
                                                 const Mat& b,
                                                 const AlgebraElement& T,
                                                 double fd_step) {
  const LieAlgebra& su = dd.compact;
  const int d = dd.dim_g;

  auto f_of = [&](const Mat& bm) {
    const Mat w = cplx(0.0, -0.5) * hermitian_log(bm * bm.adjoint());
    return su.pair(su.coeffs_of(w), T.coeffs);
  };

  // FD gradients on B against the theta = 1 pairing, via a Gram solve.
  RVec vl(d), vr(d);
  for (int p = 0; p < d; ++p) {
    const Mat Tp = dd.borel.basis[p];
    const Mat step = (fd_step * Tp).exp();
    vl(p) = (f_of(step * b) - f_of(step.inverse() * b)) / (2.0 * fd_step);
    vr(p) = (f_of(b * step) - f_of(b * step.inverse())) / (2.0 * fd_step);
  }
  // Gram matrix <<B_p, g_q>>_1 pairs the Borel directions with g-valued
  // gradients: D f in g satisfies <<D f, B_p>>_1 = vl(p).
  RMat G(d, d);
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q)
      G(p, q) = theta1_pairing(su.basis[q], dd.borel.basis[p]);
  const RVec Df = G.fullPivLu().solve(vl);
  const RVec Dpf = G.fullPivLu().solve(vr);

  // Closed forms of the gradients.
  const Mat Om = b * b.adjoint();
  const Mat w = cplx(0.0, -0.5) * hermitian_log(Om);
  const RVec wv = su.coeffs_of(w);
  const RMat A = su.ad(wv);
  const RMat Ri = ri_operator(su);
  const RMat chiI = analytic_of_ad(chi_nu_fn(cplx(0.0, 1.0)), su, wv);
  const RVec closed_D = (-Ri * A + chiI) * T.coeffs;

  const cplx I(0.0, 1.0);
  const Mat Tm = su.matrix_of(T.coeffs);
  const Mat wm = su.matrix_of(wv);
  const Mat closed_bDb = I * (wm * Tm - Tm * wm) +
                         su.matrix_of(chiI * T.coeffs);
  const Mat fd_bDb = b * su.matrix_of(Dpf) * b.inverse();

  GradientTransferResidual out;
  out.D_residual = (su.matrix_of(Df) - su.matrix_of(closed_D))
                       .cwiseAbs()
                       .maxCoeff();
  out.Dprime_residual = (fd_bDb - closed_bDb).cwiseAbs().maxCoeff();
  return out;
}

double lemma3_residual(const RealifiedDouble& dd, double theta,
                       const Probe& phi, const Probe& psi, const Mat& a,
                       double fd_step) {
  const LieAlgebra& dbl = dd.dbl;
  const LieAlgebra& su = dd.compact;
  const int D = dbl.dim;
  const int d = dd.dim_g;

  auto [fac, cc] = iwasawa_cartan(dd, a);
  const Mat g_base = fac.g;

  auto probe_value = [&](const Probe& pr, const Mat& am) {
    auto [f2, c2] = iwasawa_cartan(dd, am);
    switch (pr.kind) {
      case Probe::Kind::g_entry_re:
        return f2.g(pr.i, pr.j).real();
      case Probe::Kind::g_entry_im:
        return f2.g(pr.i, pr.j).imag();
      case Probe::Kind::omega_linear:
        return su.pair(c2.omega.coeffs, pr.T);
    }
    throw InternalFaultError("probe_value: bad kind");
  };

  // Route (i): {Phi,Psi}(a) = -theta <<D Phi, rho D Psi>>_1
  //                           -theta <<D'Phi, rho D'Psi>>_1.
  RMat G1(D, D);  // theta = 1 Gram matrix of the double
  for (int p = 0; p < D; ++p)
    for (int q = 0; q < D; ++q)
      G1(p, q) = theta1_pairing(dbl.basis[p], dbl.basis[q]);
  Eigen::FullPivLU<RMat> G1lu(G1);

  auto gradients = [&](const Probe& pr) {
    RVec vl(D), vr(D);
    for (int p = 0; p < D; ++p) {
      const Mat step = (fd_step * dbl.basis[p]).exp();
      vl(p) = (probe_value(pr, step * a) - probe_value(pr, step.inverse() * a)) /
              (2.0 * fd_step);
      vr(p) = (probe_value(pr, a * step) - probe_value(pr, a * step.inverse())) /
              (2.0 * fd_step);
    }
    return std::make_pair(RVec(G1lu.solve(vl)), RVec(G1lu.solve(vr)));
  };

  const auto [Dphi, Dpphi] = gradients(phi);
  const auto [Dpsi, Dppsi] = gradients(psi);
  const RMat rho = dd.rho_coeff();
  auto pair1 = [&](const RVec& x, const RVec& y) {
    return x.dot(G1 * y);
  };
  const double route_i =
      -theta * pair1(Dphi, rho * Dpsi) - theta * pair1(Dpphi, rho * Dppsi);

  // Route (ii): the chart bivector with base point g(a), xi = 0.
  ChartParams p;
  p.theta = theta;
  p.base = g_base;
  const PoissonChart chart = build_chart(ChartKind::compact_heisenberg, su, p);
  RVec x = RVec::Zero(2 * d);
  x.tail(d) = cc.omega.coeffs;
  const RMat Pi = chart.bivector(x);

  auto chart_gradient = [&](const Probe& pr) {
    RVec grad = RVec::Zero(2 * d);
    switch (pr.kind) {
      case Probe::Kind::g_entry_re:
        for (int k = 0; k < d; ++k)
          grad(k) = (g_base * su.basis[k])(pr.i, pr.j).real();
        break;
      case Probe::Kind::g_entry_im:
        for (int k = 0; k < d; ++k)
          grad(k) = (g_base * su.basis[k])(pr.i, pr.j).imag();
        break;
      case Probe::Kind::omega_linear:
        grad.tail(d) = su.form * pr.T;
        break;
    }
    return grad;
  };
  const double route_ii =
      chart_gradient(phi).dot(Pi * chart_gradient(psi));
  return std::abs(route_i - route_ii);
}

double derivative_transfer_residual(const RealifiedDouble& dd,
                                    const std::function<double(const Mat&)>& F,
                                    const Mat& b, const AlgebraElement& X,
                                    double fd_step) {
  const LieAlgebra& su = dd.compact;
  const cplx I(0.0, 1.0);
  const Mat Xm = su.matrix_of(X.coeffs);
  const Mat Y = borel_partner(dd, Xm);
  const Mat RiX = su.matrix_of(ri_operator(su) * X.coeffs);
  const Mat Om = b * b.adjoint();

  auto omega_flow = [&](double t) {
    return Mat((t * (I * Xm + RiX)).exp() * Om * (t * (I * Xm - RiX)).exp());
  };
  const double lhs =
      (F(omega_flow(fd_step)) - F(omega_flow(-fd_step))) / (2.0 * fd_step);

  auto borel_flow = [&](double t) {
    const Mat bt = (-2.0 * t * Y).exp() * b;
    return Mat(bt * bt.adjoint());
  };
  const double rhs =
      (F(borel_flow(fd_step)) - F(borel_flow(-fd_step))) / (2.0 * fd_step);
  return std::abs(lhs - rhs);
}

double flow_consistency_residual(const RealifiedDouble& dd, const Mat& b,
                                 const AlgebraElement& X, double t) {
  const LieAlgebra& su = dd.compact;
  const cplx I(0.0, 1.0);
  const Mat Xm = su.matrix_of(X.coeffs);
  const Mat Y = borel_partner(dd, Xm);
  const Mat RiX = su.matrix_of(ri_operator(su) * X.coeffs);
  const Mat Om = b * b.adjoint();
  const Mat flow =
      (t * (I * Xm + RiX)).exp() * Om * (t * (I * Xm - RiX)).exp();
  const Mat bt = (-2.0 * t * Y).exp() * b;
  return (flow - bt * bt.adjoint()).cwiseAbs().maxCoeff();
}

ThreeTensor natural_plcdybe_residual(const RealifiedDouble& dd, double theta,
                                     const Mat& b, double fd_step,
                                     double k_scale) {
  const LieAlgebra& su = dd.compact;
  const int d = su.dim;

  DynamicalK K = make_K_compact(su, theta);
  K.scale = k_scale;
  auto K_of = [&](const Mat& bm) {
    const Mat w = cplx(0.0, -0.5) * hermitian_log(bm * bm.adjoint());
    return K.tensor_at(su.coeffs_of(w));
  };

  const TwoTensor Ri = compact_r(su);
  TwoTensor r = Ri + K_of(b);
  ThreeTensor base = bracket_12_23(r, r);

  ThreeTensor dterm = ThreeTensor::zero(su);
  for (int a = 0; a < d; ++a) {
    // T*_a = -2 Y_a, the dual basis direction on B.
    const Mat Tstar = -2.0 * borel_partner(dd, su.basis[a]);
    const Mat step = (fd_step * Tstar).exp();
    const RMat dK =
        (K_of(step * b).coeffs - K_of(step.inverse() * b).coeffs) /
        (2.0 * fd_step);
    for (int p = 0; p < d; ++p)
      if (su.form_inv(p, a) != 0.0) dterm.slab[p] += su.form_inv(p, a) * dK;
  }

  base += dterm;
  ThreeTensor res = base.cyclic_sum();
  res -= (-1.0 / (4.0 * theta * theta)) * f_hat(su);
  return res;
}

TheoremCheck theorem2_check(const LieAlgebra& su, double theta, const RVec& m,
                            double exponent_factor) {
  const double s = theta * exponent_factor;
  const PoissonChart src = wznw_monodromy_chart(su, cplx(0.0, theta));
  const PoissonChart dst = compact_sts_chart(su, theta);

  SmoothMap map;
  map.source = &src;
  map.target = &dst;
  map.forward = [s](const RVec& x) { return RVec(s * x); };
  map.jacobian = [s, &su](const RVec&) {
    return RMat(s * RMat::Identity(su.dim, su.dim));
  };

  TheoremCheck out;
  out.map_residual = poisson_map_residual(map, m).cwiseAbs().maxCoeff();

  // g-sector cross operators: theta(-Ri ad_w + chi(i ad_w)) at w = s m
  // against theta times the monodromy-sector operator.
  const RMat Ri = compact_r(su).as_operator();
  const RMat Aw = su.ad(RVec(s * m));
  const RMat Am = su.ad(m);
  const RMat lhs = theta * (-Ri * Aw +
                            analytic_of_ad(chi_nu_fn(cplx(0.0, 1.0)), su,
                                           RVec(s * m)));
  const RMat rhs =
      theta * (-theta * Ri * Am +
               analytic_of_ad(chi_nu_fn(cplx(0.0, theta)), su, m));
  out.cross_residual = (lhs - rhs).cwiseAbs().maxCoeff();
  return out;
}

}  // namespace wznw
