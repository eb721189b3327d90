#include "wznw/matfun.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "wznw/matfun_detail.hpp"

namespace wznw {
namespace {

using detail::kChiEven;
using detail::kSeriesRadius;

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// --- scalar building blocks -------------------------------------------------

// chi(z) = z coth z, with series branch near the removable point z = 0.
cplx chi_value(cplx z) {
  if (std::abs(z) < kSeriesRadius) {
    const cplx z2 = z * z;
    cplx acc = kChiEven[6];
    for (int k = 5; k >= 0; --k) acc = acc * z2 + kChiEven[k];
    return acc;
  }
  return z * std::cosh(z) / std::sinh(z);
}

// chi'(z) = coth z - z / sinh^2 z.
cplx chi_derivative(cplx z) {
  if (std::abs(z) < kSeriesRadius) {
    const cplx z2 = z * z;
    cplx acc = 0.0;
    for (int k = 6; k >= 1; --k) acc = acc * z2 + 2.0 * k * kChiEven[k];
    return acc * z;
  }
  const cplx sh = std::sinh(z);
  return std::cosh(z) / sh - z / (sh * sh);
}

// Distance (normalized by 1 + |p|) from z to the poles {i pi k / a : k != 0}.
double pole_distance_scaled(cplx z, cplx a) {
  if (std::abs(a) == 0.0) return kInf;
  const cplx w = a * z;
  const long kc = std::lround(w.imag() / kPi);
  double best = kInf;
  auto visit = [&](long k) {
    if (k == 0) return;
    const cplx p = cplx(0.0, kPi * static_cast<double>(k)) / a;
    best = std::min(best, std::abs(z - p) / (1.0 + std::abs(p)));
  };
  for (long k = kc - 2; k <= kc + 2; ++k) visit(k);
  visit(1);
  visit(-1);
  return best;
}

std::vector<cplx> chi_taylor(cplx scale) {
  // chi(scale * z): even series through degree 12.
  std::vector<cplx> a(13, 0.0);
  cplx s2k = 1.0;
  const cplx s2 = scale * scale;
  for (int k = 0; k <= 6; ++k) {
    a[2 * k] = kChiEven[k] * s2k;
    s2k *= s2;
  }
  return a;
}

// Odd series of [chi(p z) - chi(q z)] / z through degree 11.
std::vector<cplx> chi_diff_over_z_taylor(cplx p, cplx q) {
  std::vector<cplx> a(12, 0.0);
  cplx p2k = 1.0, q2k = 1.0;
  const cplx p2 = p * p, q2 = q * q;
  for (int k = 1; k <= 6; ++k) {
    p2k *= p2;
    q2k *= q2;
    a[2 * k - 1] = kChiEven[k] * (p2k - q2k);
  }
  return a;
}

cplx poly_eval(const std::vector<cplx>& a, cplx z) {
  cplx acc = 0.0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
  return acc;
}

cplx poly_eval_derivative(const std::vector<cplx>& a, cplx z) {
  cplx acc = 0.0;
  for (int k = static_cast<int>(a.size()) - 1; k >= 1; --k)
    acc = acc * z + static_cast<double>(k) * a[k];
  return acc;
}

// [chi(p z) - chi(q z)] / z and its derivative, series-branched near 0.
ScalarFunction chi_diff_over_z_fn(std::string name, cplx p, cplx q) {
  ScalarFunction f;
  f.name = std::move(name);
  f.taylor = chi_diff_over_z_taylor(p, q);
  f.value = [p, q, series = f.taylor](cplx z) {
    if (std::abs(z) < kSeriesRadius) return poly_eval(series, z);
    return (chi_value(p * z) - chi_value(q * z)) / z;
  };
  f.derivative = [p, q, series = f.taylor](cplx z) {
    if (std::abs(z) < kSeriesRadius) return poly_eval_derivative(series, z);
    const cplx v = (chi_value(p * z) - chi_value(q * z)) / z;
    return (p * chi_derivative(p * z) - q * chi_derivative(q * z)) / z - v / z;
  };
  f.pole_distance = [p, q](cplx z) {
    return std::min(pole_distance_scaled(z, p), pole_distance_scaled(z, q));
  };
  return f;
}

}  // namespace

ScalarFunction chi_diff_over_z(cplx p, cplx q) {
  std::ostringstream os;
  os << "chi_diff(p=" << p << ",q=" << q << ")";
  return chi_diff_over_z_fn(os.str(), p, q);
}

void ScalarFunction::guard(cplx z) const {
  const double d = pole_distance(z);
  const double margin = kGuardMargin;
  if (d < margin) {
    std::ostringstream os;
    os << name << ": argument " << z << " within normalized distance " << d
       << " of a pole (guard margin " << margin << ")";
    throw PoleProximityError(os.str());
  }
}

ScalarFunction chi_fn() {
  ScalarFunction f;
  f.name = "chi";
  f.value = [](cplx z) { return chi_value(z); };
  f.derivative = [](cplx z) { return chi_derivative(z); };
  f.pole_distance = [](cplx z) { return pole_distance_scaled(z, 1.0); };
  f.taylor = chi_taylor(1.0);
  return f;
}

ScalarFunction lambda_fn() {
  // lambda(z) = z e^z / sinh z = chi(z) + z.
  ScalarFunction f;
  f.name = "lambda";
  f.value = [](cplx z) { return chi_value(z) + z; };
  f.derivative = [](cplx z) { return chi_derivative(z) + 1.0; };
  f.pole_distance = [](cplx z) { return pole_distance_scaled(z, 1.0); };
  f.taylor = chi_taylor(1.0);
  f.taylor[1] += 1.0;
  return f;
}

ScalarFunction lambda_half_fn(double sign) {
  const cplx s(sign / 2.0, 0.0);
  ScalarFunction f;
  f.name = sign >= 0 ? "lambda_half" : "lambda_minus_half";
  f.value = [s](cplx z) { return chi_value(s * z) + s * z; };
  f.derivative = [s](cplx z) { return s * (chi_derivative(s * z) + 1.0); };
  f.pole_distance = [s](cplx z) { return pole_distance_scaled(z, s); };
  f.taylor = chi_taylor(s);
  f.taylor[1] += s;
  return f;
}

ScalarFunction dexp_inv_fn() {
  ScalarFunction f;
  f.name = "dexp_inv";
  f.taylor.assign(13, 0.0);
  double fact = 1.0;
  for (int k = 0; k <= 12; ++k) {
    fact *= k + 1;
    f.taylor[k] = (k % 2 == 0 ? 1.0 : -1.0) / fact;
  }
  f.value = [series = f.taylor](cplx z) {
    if (std::abs(z) < kSeriesRadius) return poly_eval(series, z);
    return (1.0 - std::exp(-z)) / z;
  };
  f.derivative = [series = f.taylor](cplx z) {
    if (std::abs(z) < kSeriesRadius) return poly_eval_derivative(series, z);
    return (std::exp(-z) * (1.0 + z) - 1.0) / (z * z);
  };
  f.pole_distance = [](cplx) { return kInf; };
  return f;
}

ScalarFunction chi_nu_fn(cplx nu) {
  ScalarFunction f;
  f.name = "chi_nu";
  f.value = [nu](cplx z) { return chi_value(nu * z); };
  f.derivative = [nu](cplx z) { return nu * chi_derivative(nu * z); };
  f.pole_distance = [nu](cplx z) { return pole_distance_scaled(z, nu); };
  f.taylor = chi_taylor(nu);
  return f;
}

ScalarFunction f_nu_fn(cplx nu) {
  std::ostringstream os;
  os << "f_nu(nu=" << nu << ")";
  return chi_diff_over_z_fn(os.str(), 0.5, nu);
}

ScalarFunction f_nu_perturbed_fn(cplx nu, cplx delta) {
  std::ostringstream os;
  os << "f_nu_perturbed(nu=" << nu << ",delta=" << delta << ")";
  return chi_diff_over_z_fn(os.str(), 0.5, nu + delta);
}

ScalarFunction k_compact_fn(double theta) {
  // [chi(z/(2 theta)) - z cot z] / z, and z cot z = chi(i z).
  std::ostringstream os;
  os << "k_compact(theta=" << theta << ")";
  return chi_diff_over_z_fn(os.str(), cplx(0.5 / theta, 0.0), cplx(0.0, 1.0));
}

ScalarFunction scale_fn(const ScalarFunction& f, double s) {
  ScalarFunction g;
  g.name = f.name + "*scale";
  g.value = [f, s](cplx z) { return s * f.value(z); };
  g.derivative = [f, s](cplx z) { return s * f.derivative(z); };
  g.pole_distance = f.pole_distance;
  g.taylor = f.taylor;
  for (auto& a : g.taylor) a *= s;
  return g;
}

cplx eval_scalar(ScalarKind kind, cplx param, cplx z) {
  ScalarFunction f;
  switch (kind) {
    case ScalarKind::chi:
      f = chi_fn();
      break;
    case ScalarKind::f_nu:
      f = f_nu_fn(param);
      break;
    case ScalarKind::lambda:
      f = lambda_fn();
      break;
    case ScalarKind::f_nu_compact:
      f = k_compact_fn(param.real());
      break;
  }
  f.guard(z);
  return f.value(z);
}

AlgebraElement mat_log_principal(const LieAlgebra& alg, const Mat& M) {
  Eigen::ComplexEigenSolver<Mat> ces(M, false);
  if (ces.info() != Eigen::Success)
    throw InternalFaultError("mat_log_principal: eigensolver failed");
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    const cplx ev = ces.eigenvalues()(i);
    if (ev.real() <= 0.0 && std::abs(ev.imag()) < 1e-12 * (1.0 + std::abs(ev)))
      throw BranchCutError(
          "mat_log_principal: eigenvalue on the closed negative real axis");
  }
  const Mat L = M.log();
  return AlgebraElement{&alg, alg.coeffs_of(L, 1e-8)};
}

namespace {

struct AdEigen {
  CMat V;
  CMat Vinv;
  CVec d;
  bool well_conditioned = false;
};

AdEigen ad_eigen(const RMat& A) {
  AdEigen out;
  Eigen::ComplexEigenSolver<CMat> ces(A.cast<cplx>(), true);
  if (ces.info() != Eigen::Success)
    throw InternalFaultError("ad_eigen: eigensolver failed");
  out.V = ces.eigenvectors();
  out.d = ces.eigenvalues();
  Eigen::JacobiSVD<CMat> svd(out.V);
  const double smin = svd.singularValues().tail(1)(0);
  const double smax = svd.singularValues()(0);
  out.well_conditioned = smin > 0.0 && smax / smin < 1e8;
  if (out.well_conditioned) out.Vinv = out.V.inverse();
  return out;
}

CMat taylor_of_matrix(const std::vector<cplx>& a, const CMat& A) {
  const Eigen::Index n = A.rows();
  CMat acc = CMat::Zero(n, n);
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    acc = acc * A;
    acc += *it * CMat::Identity(n, n);
  }
  return acc;
}

void guard_spectrum(const ScalarFunction& f, const CVec& d) {
  for (Eigen::Index i = 0; i < d.size(); ++i) f.guard(d(i));
}

RMat real_checked(const CMat& M, const char* where) {
  const double scale = 1.0 + M.norm();
  if (M.imag().norm() > 1e-9 * scale) {
    std::ostringstream os;
    os << where << ": result has imaginary part of norm " << M.imag().norm();
    throw InternalFaultError(os.str());
  }
  return M.real();
}

}  // namespace

CMat analytic_of_ad_c(const ScalarFunction& f, const LieAlgebra& alg,
                      const RVec& m) {
  const RMat A = alg.ad(m);
  const AdEigen eg = ad_eigen(A);
  guard_spectrum(f, eg.d);
  if (!eg.well_conditioned) {
    if (f.taylor.empty())
      throw InternalFaultError("analytic_of_ad: no Taylor fallback for " +
                               f.name);
    return taylor_of_matrix(f.taylor, A.cast<cplx>());
  }
  CVec fd(eg.d.size());
  for (Eigen::Index i = 0; i < eg.d.size(); ++i) fd(i) = f.value(eg.d(i));
  return eg.V * fd.asDiagonal() * eg.Vinv;
}

RMat analytic_of_ad(const ScalarFunction& f, const LieAlgebra& alg,
                    const RVec& m) {
  return real_checked(analytic_of_ad_c(f, alg, m), "analytic_of_ad");
}

RMat frechet_of_ad(const ScalarFunction& f, const LieAlgebra& alg,
                   const RVec& m, const RVec& dm) {
  const RMat A = alg.ad(m);
  const RMat E = alg.ad(dm);
  const AdEigen eg = ad_eigen(A);
  guard_spectrum(f, eg.d);
  if (!eg.well_conditioned) {
    // d/dt p(A + tE) for the truncated Taylor polynomial p.
    if (f.taylor.empty())
      throw InternalFaultError("frechet_of_ad: no Taylor fallback for " +
                               f.name);
    const Eigen::Index n = A.rows();
    const CMat Ac = A.cast<cplx>();
    const CMat Ec = E.cast<cplx>();
    std::vector<CMat> pow(f.taylor.size());
    pow[0] = CMat::Identity(n, n);
    for (size_t k = 1; k < pow.size(); ++k) pow[k] = pow[k - 1] * Ac;
    CMat acc = CMat::Zero(n, n);
    for (size_t k = 1; k < f.taylor.size(); ++k)
      for (size_t j = 0; j < k; ++j)
        acc += f.taylor[k] * pow[j] * Ec * pow[k - 1 - j];
    return real_checked(acc, "frechet_of_ad");
  }
  const CMat W = eg.Vinv * E.cast<cplx>() * eg.V;
  const Eigen::Index n = eg.d.size();
  CMat out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const cplx di = eg.d(i), dj = eg.d(j);
      cplx phi;
      if (std::abs(di - dj) < 1e-5 * (1.0 + std::abs(di)))
        phi = f.derivative(0.5 * (di + dj));
      else
        phi = (f.value(di) - f.value(dj)) / (di - dj);
      out(i, j) = W(i, j) * phi;
    }
  }
  return real_checked(eg.V * out * eg.Vinv, "frechet_of_ad");
}

Mat apply_analytic_ad_matrix(const ScalarFunction& f, const Mat& P,
                             const Mat& Y) {
  Eigen::ComplexEigenSolver<Mat> ces(P, true);
  if (ces.info() != Eigen::Success)
    throw InternalFaultError("apply_analytic_ad_matrix: eigensolver failed");
  const CMat V = ces.eigenvectors();
  Eigen::JacobiSVD<CMat> svd(V);
  const double smin = svd.singularValues().tail(1)(0);
  if (smin <= 0.0 || svd.singularValues()(0) / smin > 1e8)
    throw InternalFaultError(
        "apply_analytic_ad_matrix: ill-conditioned eigenbasis");
  const CMat Vinv = V.inverse();
  const CVec d = ces.eigenvalues();
  CMat W = Vinv * Y * V;
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    for (Eigen::Index j = 0; j < d.size(); ++j) {
      const cplx z = d(i) - d(j);
      f.guard(z);
      W(i, j) *= f.value(z);
    }
  }
  return V * W * Vinv;
}

AlgebraElement dlog_directional(const AlgebraElement& m,
                                const AlgebraElement& X, Side side) {
  const LieAlgebra& alg = *m.parent;
  const double sign = side == Side::left ? -1.0 : 1.0;
  const RMat L = analytic_of_ad(lambda_half_fn(sign), alg, m.coeffs);
  return AlgebraElement{&alg, L * X.coeffs};
}

}  // namespace wznw
