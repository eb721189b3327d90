#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace wznw {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;   // matrices in the defining representation
using RMat = Eigen::MatrixXd;   // operators on coefficient space
using RVec = Eigen::VectorXd;   // coefficient vectors in a fixed real basis
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Argument too close to a pole of coth/cot-type functions.
struct PoleProximityError : Error {
  using Error::Error;
};

/// Matrix logarithm requested outside the principal-branch domain.
struct BranchCutError : Error {
  using Error::Error;
};

/// A matrix could not be expressed in the algebra basis to tolerance.
struct BasisProjectionError : Error {
  using Error::Error;
};

/// Gauss-type factorization hit a vanishing principal minor.
struct FactorizationError : Error {
  using Error::Error;
};

/// Exact and finite-difference derivative routes disagree (implementation fault).
struct InternalFaultError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

}  // namespace wznw
