#pragma once

#include <functional>
#include <vector>

#include "wznw/liealg.hpp"
#include "wznw/types.hpp"

namespace wznw {

// Analytic scalar function with pole guard and derivative, as needed for
// functions of ad-operators: chi(z) = z coth z, lambda(z) = z e^z / sinh z,
// f_nu(z) = [chi(z/2) - chi(nu z)]/z and the compact-case variants.
struct ScalarFunction {
  std::string name;
  std::function<cplx(cplx)> value;
  std::function<cplx(cplx)> derivative;
  // Minimum of |z - p| / (1 + |p|) over the poles p of the function;
  // returns +inf for entire functions.
  std::function<double(cplx)> pole_distance;
  // Maclaurin coefficients a_0..a_n (degree ~12), used both for the small-z
  // branch and as the fallback when an ad-eigenbasis is ill conditioned.
  std::vector<cplx> taylor;

  static constexpr double kGuardMargin = 1e-3;

  cplx operator()(cplx z) const { return value(z); }
  void guard(cplx z) const;
};

ScalarFunction chi_fn();                        // z coth z
ScalarFunction lambda_fn();                     // z e^z / sinh z
ScalarFunction lambda_half_fn(double sign);     // z -> lambda(sign * z / 2)
ScalarFunction dexp_inv_fn();                   // z -> (1 - e^{-z}) / z
ScalarFunction chi_nu_fn(cplx nu);              // z -> chi(nu z)
ScalarFunction f_nu_fn(cplx nu);                // [chi(z/2) - chi(nu z)]/z
// f_nu with the parameter of the second chi shifted by delta (control runs).
ScalarFunction f_nu_perturbed_fn(cplx nu, cplx delta);
// Compact canonical kernel: z -> (1/theta) f_{i theta}(z / theta)
//                              = [chi(z/(2 theta)) - z cot z] / z.
ScalarFunction k_compact_fn(double theta);
// General member of the family: z -> [chi(p z) - chi(q z)] / z.
ScalarFunction chi_diff_over_z(cplx p, cplx q);
ScalarFunction scale_fn(const ScalarFunction& f, double s);   // z -> s*f(z)

// Spec-facing evaluation with pole guard and Taylor branch near zero.
enum class ScalarKind { chi, f_nu, lambda, f_nu_compact };
cplx eval_scalar(ScalarKind kind, cplx param, cplx z);

// Principal matrix logarithm expressed in the algebra basis.
// Throws BranchCutError if an eigenvalue lies on the closed negative real
// axis, BasisProjectionError if the log leaves the algebra.
AlgebraElement mat_log_principal(const LieAlgebra& alg, const Mat& M);

// f(ad_m) on coefficient space via complex eigendecomposition of ad_m, with
// a truncated-Taylor fallback for ill-conditioned eigenbases.
CMat analytic_of_ad_c(const ScalarFunction& f, const LieAlgebra& alg,
                      const RVec& m);
RMat analytic_of_ad(const ScalarFunction& f, const LieAlgebra& alg,
                    const RVec& m);

// Directional (Frechet) derivative: d/dt f(ad_{m + t dm}) at t = 0, via
// divided differences on the eigenbasis of ad_m.
RMat frechet_of_ad(const ScalarFunction& f, const LieAlgebra& alg,
                   const RVec& m, const RVec& dm);

// f(ad_P) applied to an NxN matrix Y, for diagonalizable NxN P.
Mat apply_analytic_ad_matrix(const ScalarFunction& f, const Mat& P,
                             const Mat& Y);

// L_X log M = lambda(-ad_m/2)(X) (side=left), R_X log M = lambda(ad_m/2)(X).
enum class Side { left, right };
AlgebraElement dlog_directional(const AlgebraElement& m,
                                const AlgebraElement& X, Side side);

}  // namespace wznw
