#pragma once

#include <utility>

#include "wznw/liealg.hpp"
#include "wznw/matfun.hpp"
#include "wznw/tensors.hpp"
#include "wznw/types.hpp"

namespace wznw {

// Dynamical r-matrix kernels. Each kind is an analytic function of the
// ad-operator of a logarithmic variable:
//   K_nu_of_M:         f_nu(ad_m),                 m = log M
//   K_can_of_Omega:    -f_{1/(4 nu)}(ad_w),        w = log Omega
//   K_compact_of_Omega: k_theta(ad_w) = (1/theta) f_{i theta}(ad_w / theta)
enum class KKind { K_nu_of_M, K_can_of_Omega, K_compact_of_Omega };

struct DynamicalK {
  const LieAlgebra* alg = nullptr;
  KKind kind = KKind::K_nu_of_M;
  cplx nu = 0.0;        // K_nu / K_can parameter
  double theta = 0.0;   // K_compact parameter
  // Falsification hooks: `scale` multiplies the kernel, `perturb_delta`
  // detunes the parameter inside the second chi of the kernel (relative
  // shift for K_nu / K_compact, additive for K_can).
  double scale = 1.0;
  double perturb_delta = 0.0;

  ScalarFunction kernel() const;
  RMat operator_at(const RVec& x) const;
  TwoTensor tensor_at(const RVec& x) const;
  // Exact directional derivative of the coefficient tensor along dx.
  TwoTensor derivative_at(const RVec& x, const RVec& dx) const;
  // Central finite-difference oracle for the same derivative.
  TwoTensor derivative_fd(const RVec& x, const RVec& dx, double h) const;
};

DynamicalK make_K_nu(const LieAlgebra& alg, cplx nu);
DynamicalK make_K_canonical(const LieAlgebra& alg, double nu);
DynamicalK make_K_compact(const LieAlgebra& alg, double theta);

// The four dynamical Yang-Baxter residual assemblies. Each is the full
// left-hand side minus right-hand side, as a three-tensor; a solution
// kernel drives it to zero.
//   full_exchange: [r12,r23] + T1^a(1/2 D_a^+ + r_a^b D_b^-) r23 + cycl
//                  + (1/4) f_hat, with r = R_const + K.
//   dynamical_only: [K12,K23] - 1/2 T1^a D_a^+ K23 + cycl - (1/4 - nu^2) f_hat.
//   canonical: [R+K,R+K] + T1^a(1/2 D^+_{T_a} - D^-_{R T_a}) K23 + cycl
//              + (1/(16 nu^2)) f_hat.
//   compact_canonical: [Ri+K,Ri+K] + T1^a(D^+_{i T_a} - D^-_{Ri T_a}) K23
//              + cycl + (1/(4 theta^2)) f_hat.
enum class CdybeForm { full_exchange, dynamical_only, canonical, compact_canonical };

enum class DerivativeRoute { exact_checked, exact_only, fd_only };

struct CdybeOptions {
  DerivativeRoute route = DerivativeRoute::exact_checked;
  double fd_step = 1e-6;
  double fd_check_tol = 1e-6;
};

// Constant part of the exchange tensor for a given form: 2 nu R for the
// split full exchange, theta Ri for the compact full exchange, R or Ri for
// the canonical forms, zero for the dynamical-only form.
TwoTensor constant_r_part(CdybeForm form, const DynamicalK& K);

// Direction of the logarithmic variable contracted against T1^a: column a
// holds the delta-x fed to the kernel derivative for basis index a.
RMat derivative_directions(CdybeForm form, const DynamicalK& K, const RVec& x);

ThreeTensor cdybe_residual(CdybeForm form, const DynamicalK& K, const RVec& x,
                           const CdybeOptions& opt = {});

// Factorization Omega = Omega^+ (Omega^-)^{-1} with Omega^+ upper and
// Omega^- lower triangular, diag(Omega^+) = diag(Omega^-)^{-1} = D^{1/2}.
std::pair<Mat, Mat> factorize_G_star(const Mat& Omega);

}  // namespace wznw
