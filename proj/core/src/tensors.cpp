#include "wznw/tensors.hpp"

#include <cmath>

namespace wznw {

RMat TwoTensor::as_operator() const { return coeffs * parent->form; }

TwoTensor TwoTensor::from_operator(const LieAlgebra& alg, const RMat& op) {
  return TwoTensor{&alg, op * alg.form_inv};
}

TwoTensor TwoTensor::zero(const LieAlgebra& alg) {
  return TwoTensor{&alg, RMat::Zero(alg.dim, alg.dim)};
}

bool TwoTensor::antisymmetric(double tol) const {
  return (coeffs + coeffs.transpose()).cwiseAbs().maxCoeff() <= tol;
}

TwoTensor& TwoTensor::operator+=(const TwoTensor& o) {
  coeffs += o.coeffs;
  return *this;
}

TwoTensor& TwoTensor::operator*=(double s) {
  coeffs *= s;
  return *this;
}

TwoTensor operator+(TwoTensor a, const TwoTensor& b) { return a += b; }
TwoTensor operator-(TwoTensor a, const TwoTensor& b) {
  a.coeffs -= b.coeffs;
  return a;
}
TwoTensor operator*(double s, TwoTensor a) { return a *= s; }

ThreeTensor ThreeTensor::zero(const LieAlgebra& alg) {
  ThreeTensor t;
  t.parent = &alg;
  t.slab.assign(alg.dim, RMat::Zero(alg.dim, alg.dim));
  return t;
}

double ThreeTensor::norm() const {
  double s = 0.0;
  for (const auto& m : slab) s += m.squaredNorm();
  return std::sqrt(s);
}

double ThreeTensor::max_abs() const {
  double s = 0.0;
  for (const auto& m : slab)
    if (m.size() > 0) s = std::max(s, m.cwiseAbs().maxCoeff());
  return s;
}

ThreeTensor ThreeTensor::cycled() const {
  ThreeTensor out = zero(*parent);
  const int d = parent->dim;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) out.at(a, b, c) = at(b, c, a);
  return out;
}

ThreeTensor ThreeTensor::cyclic_sum() const {
  ThreeTensor c1 = cycled();
  ThreeTensor c2 = c1.cycled();
  c1 += *this;
  c1 += c2;
  return c1;
}

ThreeTensor& ThreeTensor::operator+=(const ThreeTensor& o) {
  for (size_t a = 0; a < slab.size(); ++a) slab[a] += o.slab[a];
  return *this;
}

ThreeTensor& ThreeTensor::operator-=(const ThreeTensor& o) {
  for (size_t a = 0; a < slab.size(); ++a) slab[a] -= o.slab[a];
  return *this;
}

ThreeTensor& ThreeTensor::operator*=(double s) {
  for (auto& m : slab) m *= s;
  return *this;
}

ThreeTensor operator+(ThreeTensor a, const ThreeTensor& b) { return a += b; }
ThreeTensor operator-(ThreeTensor a, const ThreeTensor& b) { return a -= b; }
ThreeTensor operator*(double s, ThreeTensor a) { return a *= s; }

ThreeTensor bracket_12_23(const TwoTensor& a, const TwoTensor& b) {
  const LieAlgebra& alg = *a.parent;
  const int d = alg.dim;
  ThreeTensor out = ThreeTensor::zero(alg);
  RMat Fm(d, d);
  for (int m = 0; m < d; ++m) {
    for (int q = 0; q < d; ++q)
      for (int r = 0; r < d; ++r) Fm(q, r) = alg.f(q, r, m);
    const RMat pm = a.coeffs * Fm * b.coeffs;
    for (int p = 0; p < d; ++p) out.slab[p].row(m) = pm.row(p);
  }
  return out;
}

ThreeTensor f_hat(const LieAlgebra& alg) {
  const int d = alg.dim;
  ThreeTensor out = ThreeTensor::zero(alg);
  // raw^{ab}(c) = f_{ab}^c, then raise a and b.
  for (int c = 0; c < d; ++c) {
    RMat raw(d, d);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) raw(a, b) = alg.f(a, b, c);
    const RMat up = alg.form_inv * raw * alg.form_inv.transpose();
    for (int p = 0; p < d; ++p) out.slab[p].col(c) = up.row(p).transpose();
  }
  return out;
}

namespace {

TwoTensor root_pair_r(const LieAlgebra& alg, int first_block, int second_block,
                      AlgebraKind want, const char* what) {
  if (alg.kind != want) throw DomainError(what);
  const int npos = (alg.dim - alg.rank) / 2;
  TwoTensor r = TwoTensor::zero(alg);
  for (int k = 0; k < npos; ++k) {
    const int a = first_block + k;
    const int b = second_block + k;
    // all roots of sl(n)/su(n) are long: |alpha|^2 = 2.
    r.coeffs(a, b) += 0.5;
    r.coeffs(b, a) -= 0.5;
  }
  return r;
}

}  // namespace

TwoTensor standard_split_r(const LieAlgebra& alg) {
  // E-block starts at 0, F-block after E-block and Cartan.
  const int npos = (alg.dim - alg.rank) / 2;
  return root_pair_r(alg, 0, npos + alg.rank, AlgebraKind::sl_split,
                     "standard_split_r: needs an sl algebra");
}

TwoTensor compact_r(const LieAlgebra& alg) {
  // Y_alpha ^ X_alpha with the Y-block after the X-block.
  const int npos = (alg.dim - alg.rank) / 2;
  return root_pair_r(alg, npos, 0, AlgebraKind::su_compact,
                     "compact_r: needs an su algebra");
}

}  // namespace wznw
