#pragma once

#include <functional>

#include "wznw/liealg.hpp"
#include "wznw/poisson.hpp"
#include "wznw/tensors.hpp"
#include "wznw/types.hpp"

namespace wznw {

// Iwasawa factors of a in SL(n,C) viewed as a real group:
// a = g^{-1} b~ = b g~ with g, g~ unitary and b, b~ upper triangular with
// positive real diagonal.
struct IwasawaFactors {
  Mat a;
  Mat g, gt;
  Mat b, bt;
};

// Cartan coordinates: Omega = a a^dagger = b b^dagger = e^{2 i w} with
// w in su(n).
struct CartanCoords {
  Mat Omega;
  AlgebraElement omega;
};

std::pair<IwasawaFactors, CartanCoords> iwasawa_cartan(
    const RealifiedDouble& dd, const Mat& a);

// Borel <-> compact transfer: the unique Y in B with X = i(Y + Y^dagger),
// as matrices in the defining representation.
Mat borel_partner(const RealifiedDouble& dd, const Mat& X);

enum class AppendixId { A15, A16, A17, A23, A24 };

// Residual of the identities proved in the appendix of calculations:
//   A15: Ri(i(Y+Y^dag)) = Y^dag - Y                  (arg1 = Y in B)
//   A16: D = iX + Ri(X) lies in B and -i/2 (D+D^dag) = X   (arg1 = X in g)
//   A17: the 4<<alpha, g beta g^{-1}>> pairing identity
//        (arg1 = alpha in B, arg2 = beta in B, g unitary)
//   A23: i lambda(-ad_{iw})(Y) + i lambda(ad_{iw})(Y^dag)
//        = -[w, Ri(X)] + chi(ad_{iw})(X)             (arg1 = Y, arg2 = w)
//   A24: Ri(X) = pi_g(-iX)                            (arg1 = X in g)
double appendix_identity_residual(const RealifiedDouble& dd, AppendixId id,
                                  const Mat& arg1, const Mat& arg2 = Mat(),
                                  const Mat& g = Mat());

// Spot check of the closed-form gradients on B: D_b f and b (D'_b f) b^{-1}
// for f(b) = <w(b b^dag), T>, against finite differences on B.
struct GradientTransferResidual {
  double D_residual;
  double Dprime_residual;
};
GradientTransferResidual borel_gradient_residual(const RealifiedDouble& dd,
                                                 const Mat& b,
                                                 const AlgebraElement& T,
                                                 double fd_step);

// Probe functions for the two-route bracket comparison.
struct Probe {
  enum class Kind { g_entry_re, g_entry_im, omega_linear } kind;
  int i = 0, j = 0;  // matrix entry for g probes
  RVec T;            // su-coefficients for <w, T> probes
};

// Bracket of two probes computed (i) directly on the double from the
// rho-form of the PB with FD gradients and (ii) through the
// compact_heisenberg chart; returns |route_i - route_ii|.
double lemma3_residual(const RealifiedDouble& dd, double theta,
                       const Probe& phi, const Probe& psi, const Mat& a,
                       double fd_step);

// d/dt F(Omega_t^X) - d/dt F~(e^{-2Yt} b) at t = 0, with
// Omega_t^X = e^{t(iX + Ri X)} Omega e^{t(iX - Ri X)} and F~(b) = F(bb^dag).
double derivative_transfer_residual(const RealifiedDouble& dd,
                                    const std::function<double(const Mat&)>& F,
                                    const Mat& b, const AlgebraElement& X,
                                    double fd_step);

// || Omega_t^X - b_t b_t^dag || at finite t (consistency of the flow).
double flow_consistency_residual(const RealifiedDouble& dd, const Mat& b,
                                 const AlgebraElement& X, double t);

// Natural-form dynamical Yang-Baxter residual on the Borel group:
// [Ri+K~12, Ri+K~23] + T1^a L_{T*_a} K~23 + cycl + (1/(4 th^2)) f_hat
// with K~(b) = K(b b^dag) and right-invariant FD derivatives along
// e^{t T*_a} b, T*_a = -2 Y_a.
ThreeTensor natural_plcdybe_residual(const RealifiedDouble& dd, double theta,
                                     const Mat& b, double fd_step,
                                     double k_scale = 1.0);

// Map w = theta m from the compact monodromy chart to the dual chart;
// exponent_factor detunes the exponent for controls.
TheoremCheck theorem2_check(const LieAlgebra& su, double theta, const RVec& m,
                            double exponent_factor = 1.0);

}  // namespace wznw
