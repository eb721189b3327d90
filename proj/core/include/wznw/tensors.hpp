#pragma once

#include <vector>

#include "wznw/liealg.hpp"
#include "wznw/types.hpp"

namespace wznw {

// Element r = r^{ab} T_a (x) T_b of g (x) g, stored by its coefficient
// matrix in the algebra basis. The associated endomorphism of g is
// Z -> r^{ab} T_a <T_b, Z>, i.e. coeffs * bilinear_form on coefficient space.
struct TwoTensor {
  const LieAlgebra* parent = nullptr;
  RMat coeffs;

  RMat as_operator() const;
  static TwoTensor from_operator(const LieAlgebra& alg, const RMat& op);
  static TwoTensor zero(const LieAlgebra& alg);

  bool antisymmetric(double tol) const;
  double norm() const { return coeffs.norm(); }

  TwoTensor& operator+=(const TwoTensor& o);
  TwoTensor& operator*=(double s);
};

TwoTensor operator+(TwoTensor a, const TwoTensor& b);
TwoTensor operator-(TwoTensor a, const TwoTensor& b);
TwoTensor operator*(double s, TwoTensor a);

// Element t = t^{abc} T_a (x) T_b (x) T_c, stored as dim slabs
// slab[a](b, c) = t^{abc}.
struct ThreeTensor {
  const LieAlgebra* parent = nullptr;
  std::vector<RMat> slab;

  static ThreeTensor zero(const LieAlgebra& alg);

  double& at(int a, int b, int c) { return slab[a](b, c); }
  double at(int a, int b, int c) const { return slab[a](b, c); }
  double norm() const;
  double max_abs() const;

  // t'^{abc} = t^{bca}  (the cyclic permutation x (x) y (x) z -> z (x) x (x) y).
  ThreeTensor cycled() const;
  // t + cycled(t) + cycled(cycled(t)).
  ThreeTensor cyclic_sum() const;

  ThreeTensor& operator+=(const ThreeTensor& o);
  ThreeTensor& operator-=(const ThreeTensor& o);
  ThreeTensor& operator*=(double s);
};

ThreeTensor operator+(ThreeTensor a, const ThreeTensor& b);
ThreeTensor operator-(ThreeTensor a, const ThreeTensor& b);
ThreeTensor operator*(double s, ThreeTensor a);

// [a_{12}, b_{23}] = a^{pq} b^{rs} f_{qr}^m  T_p (x) T_m (x) T_s.
ThreeTensor bracket_12_23(const TwoTensor& a, const TwoTensor& b);

// f_{ab}^c with the first two indices raised by the inverse form:
// t^{pqc} = (g^{-1})^{pa} (g^{-1})^{qb} f_{ab}^c.
ThreeTensor f_hat(const LieAlgebra& alg);

// Standard split r-matrix sum_{roots} (|alpha|^2/4) E_a ^ F_a for sl(n);
// as an operator it is (1/2)(pi_> - pi_<).
TwoTensor standard_split_r(const LieAlgebra& alg);

// Standard compact r-matrix sum_{roots} (|alpha|^2/4) Y_a ^ X_a for su(n).
TwoTensor compact_r(const LieAlgebra& alg);

}  // namespace wznw
