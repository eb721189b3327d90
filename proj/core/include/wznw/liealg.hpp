#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wznw/types.hpp"

namespace wznw {

enum class AlgebraKind { sl_split, su_compact, borel, realified_double };
enum class ScalarField { real, complex_field };
enum class GroupTag { SL, SU, Borel, RealifiedDouble };
enum class PairingKind { killing, imaginary_theta };

// Finite-dimensional real-basis Lie algebra. Structure constants and the
// invariant form are computed from the defining representation on
// construction and then frozen; construction self-checks antisymmetry,
// the Jacobi identity, form invariance and the rep-homomorphism property.
//
// Basis order: positive roots in height order, then Cartan, then negative
// roots (split case); compact basis grouped as i(E+F), E-F, iH; Borel basis
// grouped per positive root as E, iE, then Cartan H.
class LieAlgebra {
 public:
  AlgebraKind kind = AlgebraKind::sl_split;
  ScalarField field = ScalarField::real;
  int rank = 0;
  int dim = 0;
  int matrix_size = 0;
  std::vector<std::string> labels;
  std::vector<Mat> basis;  // defining representation

  // f_{ab}^c, stored as ad-basis slices: ad_basis[a](c,b) = f_{ab}^c.
  std::vector<RMat> ad_basis;
  RMat form;      // g_{ab} = <T_a, T_b>
  RMat form_inv;  // (g^{-1})^{ab}; raises indices, columns are dual basis T^a

  // f_{ab}^c accessor.
  double f(int a, int b, int c) const { return ad_basis[a](c, b); }

  // Coefficients of an NxN matrix in the basis; throws BasisProjectionError
  // if the matrix is not in the (real) span to tolerance.
  RVec coeffs_of(const Mat& X, double tol = 1e-9) const;
  bool in_span(const Mat& X, double tol = 1e-9) const;
  Mat matrix_of(const RVec& coeffs) const;

  RMat ad(const RVec& x) const;  // ad_x on coefficient space
  RVec bracket(const RVec& x, const RVec& y) const;
  double pair(const RVec& x, const RVec& y) const { return x.dot(form * y); }

  // Real least-squares projector basis_pinv (dim x 2N^2, acting on stacked
  // real/imaginary parts), built on construction.
  const RMat& basis_pinv() const { return basis_pinv_; }

  void finalize();  // compute f, form, projector; run self-checks

 private:
  RMat basis_pinv_;
};

struct AlgebraElement {
  const LieAlgebra* parent = nullptr;
  RVec coeffs;
};

struct GroupElement {
  GroupTag tag = GroupTag::SL;
  Mat matrix;
  const LieAlgebra* algebra = nullptr;  // algebra of the group (may be null)

  // Checks the group's defining constraints to tolerance.
  void validate(double tol = 1e-12) const;
};

// Realification of sl(n,C): compact part g = su(n), Borel part B, paired by
// <<X,Y>>_theta = (1/theta) Im tr(XY).
struct RealifiedDouble {
  LieAlgebra dbl;      // dim 2(n^2-1); basis = compact basis ++ Borel basis
  LieAlgebra compact;  // su(n)
  LieAlgebra borel;
  double theta = 1.0;
  int dim_g = 0;  // dim of each isotropic half

  // Projections associated with the splitting A_R = g + B, on matrices.
  Mat pi_g(const Mat& X) const;
  Mat pi_b(const Mat& X) const;
  // rho = (pi_g - pi_b)/2 as an operator on the double's coefficient space.
  RMat rho_coeff() const;
  double pairing_theta(const RVec& x, const RVec& y) const {
    return x.dot(dbl.form * y);
  }
};

LieAlgebra build_sl(int n, ScalarField field = ScalarField::real);
LieAlgebra build_su(int n);
LieAlgebra build_borel(int n);
RealifiedDouble build_realified_double(int n, double theta = 1.0);

// Spec-facing dispatcher (kind x rank); rank r maps to sl(r+1)/su(r+1).
LieAlgebra build_algebra(AlgebraKind kind, int rank,
                         ScalarField field = ScalarField::real);

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);
double pairing(const AlgebraElement& x, const AlgebraElement& y,
               PairingKind which = PairingKind::killing);
RMat ad_matrix(const AlgebraElement& x);

GroupElement group_exp(const LieAlgebra& alg, const RVec& coeffs,
                       GroupTag tag);
AlgebraElement group_Ad(const GroupElement& g, const AlgebraElement& x);
Mat dagger(const Mat& X);  // conjugate transpose; minus the Cartan involution

// JSON descriptor (labels, structure constants, form) for golden-file tests.
std::string algebra_to_json(const LieAlgebra& alg);

}  // namespace wznw
