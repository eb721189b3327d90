#include "wznw/poisson.hpp"

#include <cmath>
#include <utility>

#include <unsupported/Eigen/MatrixFunctions>

#include "wznw/matfun.hpp"

namespace wznw {
namespace {

// Ad_q on coefficient space: column a holds the coefficients of q T_a q^{-1}.
RMat ad_group_coeff(const LieAlgebra& alg, const Mat& q) {
  const Mat qinv = q.inverse();
  RMat C(alg.dim, alg.dim);
  for (int a = 0; a < alg.dim; ++a)
    C.col(a) = alg.coeffs_of(q * alg.basis[a] * qinv);
  return C;
}

Mat base_or_identity(const LieAlgebra& alg, const Mat& base) {
  if (base.size() == 0)
    return Mat::Identity(alg.matrix_size, alg.matrix_size);
  return base;
}

RMat lambda_plus(const LieAlgebra& alg, const RVec& x) {
  return analytic_of_ad(lambda_half_fn(1.0), alg, x);
}

RMat lambda_minus(const LieAlgebra& alg, const RVec& x) {
  return analytic_of_ad(lambda_half_fn(-1.0), alg, x);
}

// The constant r-matrix of the ambient Poisson-Lie structure: 2 nu R for
// the split case, theta Ri for the compact case (nu = i theta).
TwoTensor ambient_r(const LieAlgebra& alg, cplx nu) {
  if (alg.kind == AlgebraKind::sl_split) {
    if (nu.imag() != 0.0)
      throw DomainError("ambient r-matrix: nu must be real on sl(n)");
    return 2.0 * nu.real() * standard_split_r(alg);
  }
  if (alg.kind == AlgebraKind::su_compact) {
    if (nu.real() != 0.0)
      throw DomainError("ambient r-matrix: nu must be imaginary on su(n)");
    return nu.imag() * compact_r(alg);
  }
  throw DomainError("ambient r-matrix: unsupported algebra kind");
}

// Cross operator of the monodromy sector: -R^nu ad_x + chi(nu ad_x).
// Contraction with T_a of the g-to-log-block bracket.
RMat cross_operator(const LieAlgebra& alg, cplx nu, const RMat& rnu_op,
                    const RVec& x) {
  const RMat A = alg.ad(x);
  return -rnu_op * A + analytic_of_ad(chi_nu_fn(nu), alg, x);
}

// Log-sector bivector: (-ad_x R^nu + chi(nu ad_x)) ad_x g^{-1}.
RMat log_sector_bivector(const LieAlgebra& alg, cplx nu, const RMat& rnu_op,
                         const RVec& x) {
  const RMat A = alg.ad(x);
  return (-A * rnu_op + analytic_of_ad(chi_nu_fn(nu), alg, x)) * A *
         alg.form_inv;
}

// Parameters of the dual-group sector: in 2 nu (-R ad + chi(ad/2)) the
// split case has (prefactor, kernel nu') = (2 nu, 1/2) and the compact
// case (theta, i) with chi(i z) = z cot z.
struct DualSector {
  double prefactor;
  cplx kernel;
  RMat r_op;  // R or Ri as an operator
};

DualSector dual_sector(const LieAlgebra& alg, double nu, double theta) {
  if (alg.kind == AlgebraKind::sl_split)
    return {2.0 * nu, cplx(0.5, 0.0), standard_split_r(alg).as_operator()};
  if (alg.kind == AlgebraKind::su_compact)
    return {theta, cplx(0.0, 1.0), compact_r(alg).as_operator()};
  throw DomainError("dual sector: unsupported algebra kind");
}

RMat dual_cross_operator(const LieAlgebra& alg, const DualSector& s,
                         const RVec& w) {
  const RMat A = alg.ad(w);
  return s.prefactor *
         (-s.r_op * A + analytic_of_ad(chi_nu_fn(s.kernel), alg, w));
}

RMat dual_log_bivector(const LieAlgebra& alg, const DualSector& s,
                       const RVec& w) {
  const RMat A = alg.ad(w);
  return s.prefactor *
         (-A * s.r_op + analytic_of_ad(chi_nu_fn(s.kernel), alg, w)) * A *
         alg.form_inv;
}

struct GroupFactor {
  RMat C;  // Ad_{g0^{-1}} on coefficients
};

GroupFactor group_factor(const LieAlgebra& alg, const Mat& base) {
  const Mat g0 = base_or_identity(alg, base);
  return {ad_group_coeff(alg, g0.inverse())};
}

// xi-block of {q1, q2} = q1 q2 r - r~ q1 q2 in exponential coordinates:
// Lp r Lp^T - (Lm C) r~ (Lm C)^T.
RMat group_block(const LieAlgebra& alg, const GroupFactor& gf, const RVec& xi,
                 const RMat& r_coeffs, const RMat& r_tilde_coeffs) {
  const RMat Lp = lambda_plus(alg, xi);
  const RMat Lt = lambda_minus(alg, xi) * gf.C;
  return Lp * r_coeffs * Lp.transpose() - Lt * r_tilde_coeffs * Lt.transpose();
}

PoissonChart make_chart(std::string name, const LieAlgebra& alg, int dim,
                        std::vector<std::string> blocks,
                        std::function<RMat(const RVec&)> piv) {
  PoissonChart c;
  c.name = std::move(name);
  c.alg = &alg;
  c.dim = dim;
  c.blocks = std::move(blocks);
  c.bivector = std::move(piv);
  return c;
}

DynamicalK hooked(DynamicalK K, const ChartParams& p) {
  K.scale *= p.k_scale;
  K.perturb_delta = p.k_perturb;
  return K;
}

}  // namespace

PoissonChart wznw_monodromy_chart(const LieAlgebra& alg, cplx nu) {
  RMat rnu_op;
  if (nu == cplx(0.0, 0.0))
    rnu_op = RMat::Zero(alg.dim, alg.dim);
  else
    rnu_op = ambient_r(alg, nu).as_operator();
  auto piv = [&alg, nu, rnu_op](const RVec& m) {
    return log_sector_bivector(alg, nu, rnu_op, m);
  };
  return make_chart("wznw_monodromy", alg, alg.dim, {"m = log M"}, piv);
}

PoissonChart sts_log_chart(const LieAlgebra& alg, double nu) {
  const DualSector s = dual_sector(alg, nu, 0.0);
  auto piv = [&alg, s](const RVec& w) { return dual_log_bivector(alg, s, w); };
  return make_chart("sts_log", alg, alg.dim, {"w = log Omega"}, piv);
}

PoissonChart compact_sts_chart(const LieAlgebra& alg, double theta) {
  const DualSector s = dual_sector(alg, 0.0, theta);
  auto piv = [&alg, s](const RVec& w) { return dual_log_bivector(alg, s, w); };
  return make_chart("compact_sts", alg, alg.dim, {"w, Omega = e^{2iw}"}, piv);
}

PoissonChart build_chart(ChartKind kind, const LieAlgebra& alg,
                         const ChartParams& p) {
  const int d = alg.dim;
  const GroupFactor gf = group_factor(alg, p.base);

  switch (kind) {
    case ChartKind::sklyanin: {
      const bool split = alg.kind == AlgebraKind::sl_split;
      const RMat S = split ? ambient_r(alg, p.nu).coeffs
                           : ambient_r(alg, cplx(0.0, p.theta)).coeffs;
      auto piv = [&alg, gf, S](const RVec& xi) {
        return group_block(alg, gf, xi, S, S);
      };
      return make_chart("sklyanin", alg, d, {"xi, q = q0 e^{xi.T}"}, piv);
    }

    case ChartKind::sts_log:
      return alg.kind == AlgebraKind::su_compact
                 ? compact_sts_chart(alg, p.theta)
                 : sts_log_chart(alg, p.nu);

    case ChartKind::heisenberg:
    case ChartKind::compact_heisenberg: {
      const bool compact = kind == ChartKind::compact_heisenberg;
      if (compact && alg.kind != AlgebraKind::su_compact)
        throw DomainError("compact_heisenberg: needs an su algebra");
      const DualSector s = dual_sector(alg, p.nu, p.theta);
      const RMat S = s.prefactor * (s.r_op * alg.form_inv);
      auto piv = [&alg, gf, s, S, d](const RVec& x) {
        const RVec xi = x.head(d), w = x.tail(d);
        RMat P = RMat::Zero(2 * d, 2 * d);
        P.topLeftCorner(d, d) = group_block(alg, gf, xi, S, S);
        const RMat cross =
            lambda_plus(alg, xi) * dual_cross_operator(alg, s, w) *
            alg.form_inv;
        P.topRightCorner(d, d) = cross;
        P.bottomLeftCorner(d, d) = -cross.transpose();
        P.bottomRightCorner(d, d) = dual_log_bivector(alg, s, w);
        return P;
      };
      return make_chart(compact ? "compact_heisenberg" : "heisenberg", alg,
                        2 * d, {"xi, g = g0 e^{xi.T}", "w = log Omega"}, piv);
    }

    case ChartKind::wznw_groupoid: {
      const cplx nu = alg.kind == AlgebraKind::su_compact
                          ? cplx(0.0, p.theta)
                          : cplx(p.nu, 0.0);
      const TwoTensor Rnu = ambient_r(alg, nu);
      const RMat rnu_op = Rnu.as_operator();
      const DynamicalK K = hooked(make_K_nu(alg, nu), p);
      auto piv = [&alg, gf, nu, Rnu, rnu_op, K, d](const RVec& x) {
        const RVec mt = x.head(d), xi = x.segment(d, d), m = x.tail(d);
        const RMat r_m = Rnu.coeffs + K.tensor_at(m).coeffs;
        const RMat r_mt = Rnu.coeffs + K.tensor_at(mt).coeffs;
        RMat P = RMat::Zero(3 * d, 3 * d);
        P.block(0, 0, d, d) = -log_sector_bivector(alg, nu, rnu_op, mt);
        P.block(d, d, d, d) = group_block(alg, gf, xi, r_m, r_mt);
        P.block(2 * d, 2 * d, d, d) = log_sector_bivector(alg, nu, rnu_op, m);
        const RMat xm = lambda_plus(alg, xi) *
                        cross_operator(alg, nu, rnu_op, m) * alg.form_inv;
        const RMat xmt = lambda_minus(alg, xi) * gf.C *
                         cross_operator(alg, nu, rnu_op, mt) * alg.form_inv;
        P.block(d, 2 * d, d, d) = xm;
        P.block(2 * d, d, d, d) = -xm.transpose();
        P.block(d, 0, d, d) = xmt;
        P.block(0, d, d, d) = -xmt.transpose();
        return P;
      };
      return make_chart("wznw_groupoid", alg, 3 * d,
                        {"m~ = log M~", "xi, g = g0 e^{xi.T}", "m = log M"},
                        piv);
    }

    case ChartKind::canonical_groupoid:
    case ChartKind::compact_groupoid: {
      const bool compact = kind == ChartKind::compact_groupoid;
      if (compact && alg.kind != AlgebraKind::su_compact)
        throw DomainError("compact_groupoid: needs an su algebra");
      const DualSector s = dual_sector(alg, p.nu, p.theta);
      const RMat Rten = s.r_op * alg.form_inv;
      const DynamicalK K =
          hooked(compact ? make_K_compact(alg, p.theta)
                         : make_K_canonical(alg, p.nu),
                 p);
      auto piv = [&alg, gf, s, Rten, K, d](const RVec& x) {
        const RVec wt = x.head(d), xi = x.segment(d, d), w = x.tail(d);
        const RMat r_w = s.prefactor * (Rten + K.tensor_at(w).coeffs);
        const RMat r_wt = s.prefactor * (Rten + K.tensor_at(wt).coeffs);
        RMat P = RMat::Zero(3 * d, 3 * d);
        P.block(0, 0, d, d) = -dual_log_bivector(alg, s, wt);
        P.block(d, d, d, d) = group_block(alg, gf, xi, r_w, r_wt);
        P.block(2 * d, 2 * d, d, d) = dual_log_bivector(alg, s, w);
        const RMat xw = lambda_plus(alg, xi) * dual_cross_operator(alg, s, w) *
                        alg.form_inv;
        const RMat xwt = lambda_minus(alg, xi) * gf.C *
                         dual_cross_operator(alg, s, wt) * alg.form_inv;
        P.block(d, 2 * d, d, d) = xw;
        P.block(2 * d, d, d, d) = -xw.transpose();
        P.block(d, 0, d, d) = xwt;
        P.block(0, d, d, d) = -xwt.transpose();
        return P;
      };
      return make_chart(compact ? "compact_groupoid" : "canonical_groupoid",
                        alg, 3 * d,
                        {"w~ = log Omega~", "xi, g = g0 e^{xi.T}",
                         "w = log Omega"},
                        piv);
    }
  }
  throw InternalFaultError("build_chart: bad kind");
}

double jacobiator_max(const PoissonChart& chart, const RVec& x, double h) {
  const int n = chart.dim;
  const RMat P = chart.bivector(x);
  if ((P + P.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + P.norm()))
    throw InternalFaultError("jacobiator_max: bivector not antisymmetric");

  std::vector<RMat> dP(n);
  for (int e = 0; e < n; ++e) {
    RVec hi = x, lo = x;
    hi(e) += h;
    lo(e) -= h;
    dP[e] = (chart.bivector(hi) - chart.bivector(lo)) / (2.0 * h);
  }

  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        double j = 0.0;
        for (int e = 0; e < n; ++e)
          j += P(a, e) * dP[e](b, c) + P(b, e) * dP[e](c, a) +
               P(c, e) * dP[e](a, b);
        worst = std::max(worst, std::abs(j));
      }
  return worst;
}

RMat poisson_map_residual(const SmoothMap& map, const RVec& x) {
  const RVec y = map.forward(x);
  const RMat J = map.jacobian(x);
  return map.target->bivector(y) - J * map.source->bivector(x) * J.transpose();
}

Mat momentum_generation_residual(const LieAlgebra& alg, double nu,
                                 const Mat& g0, const RVec& xi,
                                 const RVec& omega, const AlgebraElement& T,
                                 double fd_step) {
  const int d = alg.dim;
  ChartParams p;
  p.nu = nu;
  p.base = g0;
  const PoissonChart heis = build_chart(ChartKind::heisenberg, alg, p);

  RVec x(2 * d);
  x << xi, omega;
  const RMat Pxw = heis.bivector(x).topRightCorner(d, d);

  const Mat g0m = base_or_identity(alg, g0);
  const Mat gmat = g0m * alg.matrix_of(xi).exp();
  const RMat dexp = analytic_of_ad(dexp_inv_fn(), alg, xi);
  const Mat Tm = alg.matrix_of(T.coeffs);

  // c_q = tr(T dOmega(pm)/dw_q Omega(pm)^{-1}) by central differences.
  RVec cdiff(d);
  for (int q = 0; q < d; ++q) {
    RVec hi = omega, lo = omega;
    hi(q) += fd_step;
    lo(q) -= fd_step;
    const auto [up_h, lo_h] = factorize_G_star(alg.matrix_of(hi).exp());
    const auto [up_l, lo_l] = factorize_G_star(alg.matrix_of(lo).exp());
    const Mat dplus = (up_h - up_l) / (2.0 * fd_step);
    const Mat dminus = (lo_h - lo_l) / (2.0 * fd_step);
    const auto [up_c, lo_c] = factorize_G_star(alg.matrix_of(omega).exp());
    const cplx cp = (Tm * dplus * up_c.inverse()).trace();
    const cplx cm = (Tm * dminus * lo_c.inverse()).trace();
    cdiff(q) = (cp - cm).real();
  }

  Mat lhs = Mat::Zero(alg.matrix_size, alg.matrix_size);
  const RVec weight = Pxw * cdiff;
  for (int pidx = 0; pidx < d; ++pidx) {
    const Mat dg = gmat * alg.matrix_of(dexp.col(pidx));
    lhs += weight(pidx) / (2.0 * nu) * dg;
  }
  return lhs - gmat * Tm;
}

TheoremCheck theorem1_check(const LieAlgebra& alg, double nu, const RVec& m,
                            double exponent_factor) {
  const double s = 2.0 * nu * exponent_factor;
  const PoissonChart src = wznw_monodromy_chart(alg, nu);
  const PoissonChart dst = sts_log_chart(alg, nu);

  SmoothMap map;
  map.source = &src;
  map.target = &dst;
  map.forward = [s](const RVec& x) { return RVec(s * x); };
  map.jacobian = [s, &alg](const RVec&) {
    return RMat(s * RMat::Identity(alg.dim, alg.dim));
  };

  TheoremCheck out;
  out.map_residual = poisson_map_residual(map, m).cwiseAbs().maxCoeff();

  const RMat rnu_op = ambient_r(alg, nu).as_operator();
  const DualSector ds = dual_sector(alg, nu, 0.0);
  const RMat lhs = dual_cross_operator(alg, ds, s * m);
  const RMat rhs = 2.0 * nu * cross_operator(alg, nu, rnu_op, m);
  out.cross_residual = (lhs - rhs).cwiseAbs().maxCoeff();
  return out;
}

double groupoid_iso_residual(const LieAlgebra& alg, double nu, const Mat& g0,
                             const RVec& x3, double k_scale) {
  const int d = alg.dim;
  ChartParams sp;
  sp.nu = nu;
  sp.base = g0;
  const PoissonChart src = build_chart(ChartKind::wznw_groupoid, alg, sp);
  ChartParams tp = sp;
  tp.k_scale = k_scale;
  const PoissonChart dst = build_chart(ChartKind::canonical_groupoid, alg, tp);

  RMat J = RMat::Identity(3 * d, 3 * d);
  J.topLeftCorner(d, d) *= 2.0 * nu;
  J.bottomRightCorner(d, d) *= 2.0 * nu;

  SmoothMap map;
  map.source = &src;
  map.target = &dst;
  map.forward = [J](const RVec& x) { return RVec(J * x); };
  map.jacobian = [J](const RVec&) { return J; };
  return poisson_map_residual(map, x3).cwiseAbs().maxCoeff();
}

double abelian_limit_residual(const LieAlgebra& alg, const RVec& m) {
  const PoissonChart chart = wznw_monodromy_chart(alg, cplx(0.0, 0.0));
  // lower both indices: {m_a, m_b} = (g Pi g)_ab, target -f_ab^c (g m)_c.
  const RMat low = alg.form * chart.bivector(m) * alg.form;
  const RVec ml = alg.form * m;
  RMat target(alg.dim, alg.dim);
  for (int a = 0; a < alg.dim; ++a)
    for (int b = 0; b < alg.dim; ++b) {
      double s = 0.0;
      for (int c = 0; c < alg.dim; ++c) s -= alg.f(a, b, c) * ml(c);
      target(a, b) = s;
    }
  return (low - target).cwiseAbs().maxCoeff();
}

}  // namespace wznw
