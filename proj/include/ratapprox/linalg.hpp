#pragma once

// Dense kernel boundary. Everything above this layer talks in Eigen
// containers and residual contracts; the LAPACK calls live in linalg.cpp.

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace ratapprox::linalg {

using DenseMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct Svd {
  DenseMatrix U;   // m x k, k = min(m, n)
  Vector S;        // descending
  DenseMatrix Vt;  // k x n
};

/// Thin SVD. Throws KernelError on non-convergence or non-finite input.
Svd svd(const DenseMatrix& M);

/// Singular values and the full n x n right factor (U not formed). Used
/// where a null vector of a tall or wide matrix is needed.
struct RightSvd {
  Vector S;
  DenseMatrix Vt;  // n x n
};
RightSvd right_svd(const DenseMatrix& M);

/// Singular values only, descending.
Vector singular_values(const DenseMatrix& M);

struct GeneralizedEigenvalue {
  std::complex<double> value;  // meaningful only when !infinite
  bool infinite = false;
};

struct GeneralizedEigen {
  std::vector<GeneralizedEigenvalue> values;
  Eigen::MatrixXcd vectors;  // right eigenvectors, column j for values[j]; empty unless requested
};

/// Eigenvalues of the pencil A - lambda B (QZ). Ordering is unspecified.
GeneralizedEigen generalized_eig(const DenseMatrix& A, const DenseMatrix& B,
                                 bool want_vectors = false);

/// Solves A x = b. Throws KernelError (carrying the condition estimate)
/// when A is singular to working precision.
Vector solve(const DenseMatrix& A, const Vector& b);

/// Reciprocal 1-norm condition estimate of a square matrix (0 when singular).
double rcond(const DenseMatrix& A);

/// rcond after row and column equilibration (dgeequ), so that a badly
/// scaled but regular matrix is not mistaken for a singular one.
double rcond_equilibrated(const DenseMatrix& A);

/// Orthogonal reduction of a pencil (A, E) to Hessenberg-triangular form,
/// H = Q^T A Z upper Hessenberg, T = Q^T E Z upper triangular. The transfer
/// function c (xE - A)^{-1} b becomes (cZ) (xT - H)^{-1} (Q^T b), so each
/// evaluation costs O(r^2).
struct HessenbergTriangular {
  DenseMatrix H;
  DenseMatrix T;
  Vector b;  // Q^T b
  Vector c;  // Z^T c^T
};

HessenbergTriangular hessenberg_triangular(const DenseMatrix& A, const DenseMatrix& E,
                                           const Vector& b, const Vector& c);

/// c^T (xT - H)^{-1} b for a Hessenberg-triangular pencil. Returns NaN when
/// the shifted matrix has an exactly zero pivot.
double hessenberg_transfer(const HessenbergTriangular& ht, double x);

}  // namespace ratapprox::linalg
