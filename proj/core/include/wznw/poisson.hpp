#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wznw/liealg.hpp"
#include "wznw/rmatrix.hpp"
#include "wznw/tensors.hpp"
#include "wznw/types.hpp"

namespace wznw {

// Coordinate chart carrying a Poisson bivector. Log-type blocks use the
// coefficients of a logarithmic algebra variable; group-factor blocks use
// exponential coordinates around a base point, q = q0 exp(xi.T).
struct PoissonChart {
  std::string name;
  const LieAlgebra* alg = nullptr;
  int dim = 0;
  std::vector<std::string> blocks;
  std::function<RMat(const RVec&)> bivector;
};

enum class ChartKind {
  sklyanin,
  sts_log,
  heisenberg,
  wznw_groupoid,
  canonical_groupoid,
  compact_heisenberg,
  compact_groupoid,
};

struct ChartParams {
  double nu = 0.5;     // split-case parameter
  double theta = 0.3;  // compact-case parameter
  Mat base;            // base point of the group factor; identity if empty
  // Falsification hooks threaded into the dynamical kernel.
  double k_scale = 1.0;
  double k_perturb = 0.0;
};

PoissonChart build_chart(ChartKind kind, const LieAlgebra& alg,
                         const ChartParams& p);

// Single-sector charts used by the theorem checks. The monodromy chart is
// the M-sector of the wznw groupoid in log coordinates; nu may be complex
// (nu = i theta selects the compact constant r-matrix) or zero (Abelian
// limit with vanishing constant part).
PoissonChart wznw_monodromy_chart(const LieAlgebra& alg, cplx nu);
PoissonChart sts_log_chart(const LieAlgebra& alg, double nu);
PoissonChart compact_sts_chart(const LieAlgebra& alg, double theta);

// Max-abs Jacobiator component, with central-difference partials of step h.
double jacobiator_max(const PoissonChart& chart, const RVec& x, double h);

struct SmoothMap {
  const PoissonChart* source = nullptr;
  const PoissonChart* target = nullptr;
  std::function<RVec(const RVec&)> forward;
  std::function<RMat(const RVec&)> jacobian;
};

// Pi_target(F(x)) - J(x) Pi_source(x) J(x)^T.
RMat poisson_map_residual(const SmoothMap& map, const RVec& x);

// Momentum generation identity on the Heisenberg double: the discrepancy
// matrix of <<(T,T), {g_ij, (O+,O-)}(O+,O-)^{-1}>>_nu against (gT)_ij,
// with the bracket taken through the chart bivector, dg/dxi exact and
// dO(pm)/dw by central differences.
Mat momentum_generation_residual(const LieAlgebra& alg, double nu,
                                 const Mat& g0, const RVec& xi,
                                 const RVec& omega, const AlgebraElement& T,
                                 double fd_step);

struct TheoremCheck {
  double map_residual = 0.0;    // Poisson-map defect in the log sector
  double cross_residual = 0.0;  // defect of the g-sector cross operator
};

// m -> (2 nu) m from the monodromy chart to the dual-group chart;
// exponent_factor != 1 deliberately detunes the exponent (controls).
TheoremCheck theorem1_check(const LieAlgebra& alg, double nu, const RVec& m,
                            double exponent_factor = 1.0);

// (m~, xi, m) -> (m~^{2nu}, g, m^{2nu}) between the two groupoid charts;
// k_scale = -1 flips the sign of the canonical kernel (control).
double groupoid_iso_residual(const LieAlgebra& alg, double nu, const Mat& g0,
                             const RVec& x3, double k_scale = 1.0);

// Max-abs defect of {m_a, m_b} = -f_ab^c m_c on the nu = 0 monodromy chart.
double abelian_limit_residual(const LieAlgebra& alg, const RVec& m);

}  // namespace wznw
