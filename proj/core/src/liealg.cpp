#include "wznw/liealg.hpp"

#include <cmath>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

#include "json.hpp"

namespace wznw {

namespace {

// Real vectorization [Re(vec X); Im(vec X)]: the algebras are real spans of
// their bases (e.g. the Borel basis contains both E and iE), so projection
// onto the basis must be least squares over the reals, not the complexes.
RVec vec_of(const Mat& X) {
  const Eigen::Index n = X.size();
  RVec v(2 * n);
  v.head(n) = Eigen::Map<const Eigen::VectorXcd>(X.data(), n).real();
  v.tail(n) = Eigen::Map<const Eigen::VectorXcd>(X.data(), n).imag();
  return v;
}

// Positive roots of A_{n-1} in height order: pairs (i,j), i<j, sorted by
// height j-i, then by i.
std::vector<std::pair<int, int>> positive_roots(int n) {
  std::vector<std::pair<int, int>> roots;
  for (int h = 1; h < n; ++h)
    for (int i = 0; i + h < n; ++i) roots.emplace_back(i, i + h);
  return roots;
}

Mat unit(int n, int i, int j) {
  Mat E = Mat::Zero(n, n);
  E(i, j) = 1.0;
  return E;
}

}  // namespace

RVec LieAlgebra::coeffs_of(const Mat& X, double tol) const {
  RVec c = basis_pinv_ * vec_of(X);
  // Reconstruction check.
  Mat R = Mat::Zero(matrix_size, matrix_size);
  for (int a = 0; a < dim; ++a) R += c(a) * basis[a];
  double resid = (R - X).norm();
  if (resid > tol * (1.0 + X.norm()))
    throw BasisProjectionError("matrix not in real span of basis (residual " +
                               std::to_string(resid) + ")");
  return c;
}

bool LieAlgebra::in_span(const Mat& X, double tol) const {
  RVec c = basis_pinv_ * vec_of(X);
  Mat R = Mat::Zero(matrix_size, matrix_size);
  for (int a = 0; a < dim; ++a) R += c(a) * basis[a];
  return (R - X).norm() <= tol * (1.0 + X.norm());
}

Mat LieAlgebra::matrix_of(const RVec& coeffs) const {
  Mat X = Mat::Zero(matrix_size, matrix_size);
  for (int a = 0; a < dim; ++a) X += coeffs(a) * basis[a];
  return X;
}

RMat LieAlgebra::ad(const RVec& x) const {
  RMat A = RMat::Zero(dim, dim);
  for (int a = 0; a < dim; ++a) A += x(a) * ad_basis[a];
  return A;
}

RVec LieAlgebra::bracket(const RVec& x, const RVec& y) const {
  return ad(x) * y;
}

void LieAlgebra::finalize() {
  dim = static_cast<int>(basis.size());
  matrix_size = static_cast<int>(basis[0].rows());
  const int N2 = matrix_size * matrix_size;

  RMat B(2 * N2, dim);
  for (int a = 0; a < dim; ++a) B.col(a) = vec_of(basis[a]);
  basis_pinv_ = B.completeOrthogonalDecomposition().pseudoInverse();

  // Trace form of the defining representation (long roots length sqrt 2 for
  // sl/su); for the realified double the caller overwrites `form` afterwards.
  form.resize(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = a; b < dim; ++b) {
      cplx t = (basis[a] * basis[b]).trace();
      form(a, b) = form(b, a) = t.real();
      if (std::abs(t.imag()) > 1e-12 && kind != AlgebraKind::realified_double)
        throw Error("trace form has imaginary part for a real algebra");
    }

  // Structure constants from defining-rep commutators.
  ad_basis.assign(dim, RMat::Zero(dim, dim));
  std::vector<RVec> fcol(dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      Mat C = basis[a] * basis[b] - basis[b] * basis[a];
      RVec c = coeffs_of(C, 1e-10);
      for (int e = 0; e < dim; ++e) ad_basis[a](e, b) = c(e);
    }

  // The trace form on the Borel subalgebra is degenerate (solvable algebra);
  // everywhere else it must be invertible.
  if (kind != AlgebraKind::borel) {
    Eigen::FullPivLU<RMat> lu(form);
    if (!lu.isInvertible()) throw Error("bilinear form is degenerate");
    form_inv = lu.inverse();
  } else {
    form_inv = RMat::Zero(dim, dim);
  }

  // Self-checks: antisymmetry and Jacobi.
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      for (int c = 0; c < dim; ++c)
        if (std::abs(f(a, b, c) + f(b, a, c)) > 1e-12)
          throw Error("structure constants not antisymmetric");
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      RMat J = ad_basis[a] * ad_basis[b] - ad_basis[b] * ad_basis[a];
      RMat AB = RMat::Zero(dim, dim);
      for (int e = 0; e < dim; ++e) AB += f(a, b, e) * ad_basis[e];
      if ((J - AB).cwiseAbs().maxCoeff() > 1e-12)
        throw Error("Jacobi identity / rep homomorphism failure");
    }

  // ad-invariance of the form: <[x,y],z> + <y,[x,z]> = 0.
  for (int a = 0; a < dim; ++a) {
    RMat inv = ad_basis[a].transpose() * form + form * ad_basis[a];
    if (inv.cwiseAbs().maxCoeff() > 1e-12)
      throw Error("bilinear form is not ad-invariant");
  }
}

void GroupElement::validate(double tol) const {
  const int n = static_cast<int>(matrix.rows());
  cplx det = matrix.determinant();
  switch (tag) {
    case GroupTag::SL:
      if (std::abs(det - 1.0) > tol) throw DomainError("SL: det != 1");
      break;
    case GroupTag::SU: {
      if (std::abs(det - 1.0) > tol) throw DomainError("SU: det != 1");
      if ((matrix * matrix.adjoint() - Mat::Identity(n, n)).norm() > tol)
        throw DomainError("SU: not unitary");
      break;
    }
    case GroupTag::Borel: {
      for (int i = 0; i < n; ++i) {
        if (matrix(i, i).real() <= 0.0 || std::abs(matrix(i, i).imag()) > tol)
          throw DomainError("Borel: diagonal not positive real");
        for (int j = 0; j < i; ++j)
          if (std::abs(matrix(i, j)) > tol)
            throw DomainError("Borel: not upper triangular");
      }
      break;
    }
    case GroupTag::RealifiedDouble:
      if (std::abs(det - 1.0) > tol) throw DomainError("SL(n,C): det != 1");
      break;
  }
}

LieAlgebra build_sl(int n, ScalarField field) {
  if (n < 2) throw DomainError("sl(n): need n >= 2");
  LieAlgebra alg;
  alg.kind = AlgebraKind::sl_split;
  alg.field = field;
  alg.rank = n - 1;
  auto roots = positive_roots(n);
  for (auto [i, j] : roots) {
    alg.basis.push_back(unit(n, i, j));
    alg.labels.push_back("E(" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ")");
  }
  for (int k = 0; k + 1 < n; ++k) {
    alg.basis.push_back(unit(n, k, k) - unit(n, k + 1, k + 1));
    alg.labels.push_back("H" + std::to_string(k + 1));
  }
  for (auto [i, j] : roots) {
    alg.basis.push_back(unit(n, j, i));
    alg.labels.push_back("F(" + std::to_string(j + 1) + "," +
                         std::to_string(i + 1) + ")");
  }
  alg.finalize();
  return alg;
}

LieAlgebra build_su(int n) {
  if (n < 2) throw DomainError("su(n): need n >= 2");
  LieAlgebra alg;
  alg.kind = AlgebraKind::su_compact;
  alg.rank = n - 1;
  const cplx I(0, 1);
  auto roots = positive_roots(n);
  for (auto [i, j] : roots) {
    alg.basis.push_back(I * (unit(n, i, j) + unit(n, j, i)));
    alg.labels.push_back("X(" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ")");
  }
  for (auto [i, j] : roots) {
    alg.basis.push_back(unit(n, i, j) - unit(n, j, i));
    alg.labels.push_back("Y(" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ")");
  }
  for (int k = 0; k + 1 < n; ++k) {
    alg.basis.push_back(I * (unit(n, k, k) - unit(n, k + 1, k + 1)));
    alg.labels.push_back("iH" + std::to_string(k + 1));
  }
  alg.finalize();
  return alg;
}

LieAlgebra build_borel(int n) {
  if (n < 2) throw DomainError("borel(n): need n >= 2");
  LieAlgebra alg;
  alg.kind = AlgebraKind::borel;
  alg.rank = n - 1;
  const cplx I(0, 1);
  auto roots = positive_roots(n);
  for (auto [i, j] : roots) {
    alg.basis.push_back(unit(n, i, j));
    alg.labels.push_back("E(" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ")");
    alg.basis.push_back(I * unit(n, i, j));
    alg.labels.push_back("iE(" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ")");
  }
  for (int k = 0; k + 1 < n; ++k) {
    alg.basis.push_back(unit(n, k, k) - unit(n, k + 1, k + 1));
    alg.labels.push_back("H" + std::to_string(k + 1));
  }
  alg.finalize();
  return alg;
}

RealifiedDouble build_realified_double(int n, double theta) {
  if (theta == 0.0) throw DomainError("realified double: theta must be nonzero");
  RealifiedDouble d;
  d.theta = theta;
  d.compact = build_su(n);
  d.borel = build_borel(n);
  d.dim_g = d.compact.dim;

  LieAlgebra& a = d.dbl;
  a.kind = AlgebraKind::realified_double;
  a.rank = n - 1;
  a.basis = d.compact.basis;
  a.labels = d.compact.labels;
  for (int k = 0; k < d.borel.dim; ++k) {
    a.basis.push_back(d.borel.basis[k]);
    a.labels.push_back(d.borel.labels[k]);
  }
  a.finalize();
  // Invariant form of the double: <<X,Y>>_theta = (1/theta) Im tr(XY).
  for (int p = 0; p < a.dim; ++p)
    for (int q = 0; q < a.dim; ++q) {
      cplx t = (a.basis[p] * a.basis[q]).trace();
      a.form(p, q) = t.imag() / theta;
    }
  a.form_inv = a.form.inverse();
  for (int p = 0; p < a.dim; ++p)
    if ((a.ad_basis[p].transpose() * a.form + a.form * a.ad_basis[p])
            .cwiseAbs()
            .maxCoeff() > 1e-12)
      throw Error("realified double: <<,>>_theta not ad-invariant");

  // Isotropy and nondegeneracy checks (Eq.-(3.4) structure).
  int m = d.dim_g;
  if (a.form.topLeftCorner(m, m).cwiseAbs().maxCoeff() > 1e-12 ||
      a.form.bottomRightCorner(m, m).cwiseAbs().maxCoeff() > 1e-12)
    throw Error("realified double: halves are not isotropic");
  Eigen::JacobiSVD<RMat> svd(a.form.topRightCorner(m, m));
  if (svd.singularValues().minCoeff() < 1e-12)
    throw Error("realified double: g x B pairing degenerate");
  return d;
}

Mat RealifiedDouble::pi_g(const Mat& X) const {
  RVec c = dbl.coeffs_of(X);
  Mat out = Mat::Zero(dbl.matrix_size, dbl.matrix_size);
  for (int a = 0; a < dim_g; ++a) out += c(a) * dbl.basis[a];
  return out;
}

Mat RealifiedDouble::pi_b(const Mat& X) const { return X - pi_g(X); }

RMat RealifiedDouble::rho_coeff() const {
  RMat r = RMat::Zero(dbl.dim, dbl.dim);
  for (int a = 0; a < dbl.dim; ++a) r(a, a) = (a < dim_g) ? 0.5 : -0.5;
  return r;
}

LieAlgebra build_algebra(AlgebraKind kind, int rank, ScalarField field) {
  if (rank < 1) throw DomainError("rank must be >= 1");
  switch (kind) {
    case AlgebraKind::sl_split:
      return build_sl(rank + 1, field);
    case AlgebraKind::su_compact:
      if (field == ScalarField::complex_field)
        throw DomainError("su(n) is a real algebra");
      return build_su(rank + 1);
    case AlgebraKind::borel:
      if (field == ScalarField::complex_field)
        throw DomainError("borel is treated as a real algebra");
      return build_borel(rank + 1);
    case AlgebraKind::realified_double:
      throw DomainError("use build_realified_double for the double");
  }
  throw DomainError("unsupported kind");
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.parent != y.parent) throw DomainError("bracket: parent mismatch");
  return {x.parent, x.parent->bracket(x.coeffs, y.coeffs)};
}

double pairing(const AlgebraElement& x, const AlgebraElement& y,
               PairingKind which) {
  if (x.parent != y.parent) throw DomainError("pairing: parent mismatch");
  if (which == PairingKind::imaginary_theta &&
      x.parent->kind != AlgebraKind::realified_double)
    throw DomainError("imaginary_theta pairing needs the realified double");
  return x.parent->pair(x.coeffs, y.coeffs);
}

RMat ad_matrix(const AlgebraElement& x) { return x.parent->ad(x.coeffs); }

GroupElement group_exp(const LieAlgebra& alg, const RVec& coeffs,
                       GroupTag tag) {
  Mat X = alg.matrix_of(coeffs);
  GroupElement g{tag, X.exp(), &alg};
  g.validate(1e-10);
  return g;
}

AlgebraElement group_Ad(const GroupElement& g, const AlgebraElement& x) {
  const LieAlgebra& alg = *x.parent;
  Mat Y = g.matrix * alg.matrix_of(x.coeffs) * g.matrix.inverse();
  return {&alg, alg.coeffs_of(Y)};  // throws if outside the algebra
}

Mat dagger(const Mat& X) { return X.adjoint(); }

std::string algebra_to_json(const LieAlgebra& alg) {
  nlohmann::json j;
  j["schema"] = "wznw.algebra/1";
  j["dim"] = alg.dim;
  j["rank"] = alg.rank;
  j["labels"] = alg.labels;
  auto snap = [](double v) {
    double r = std::round(v * 1e12) / 1e12;
    return (r == 0.0) ? 0.0 : r;  // normalize -0
  };
  std::vector<std::vector<std::vector<double>>> f(alg.dim);
  for (int a = 0; a < alg.dim; ++a) {
    f[a].resize(alg.dim);
    for (int b = 0; b < alg.dim; ++b) {
      f[a][b].resize(alg.dim);
      for (int c = 0; c < alg.dim; ++c) f[a][b][c] = snap(alg.f(a, b, c));
    }
  }
  j["structure_constants"] = f;
  std::vector<std::vector<double>> g(alg.dim);
  for (int a = 0; a < alg.dim; ++a) {
    g[a].resize(alg.dim);
    for (int b = 0; b < alg.dim; ++b) g[a][b] = snap(alg.form(a, b));
  }
  j["bilinear_form"] = g;
  return j.dump(2);
}

}  // namespace wznw
