#include "ratapprox/linalg.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <lapacke.h>

#include "ratapprox/error.hpp"

namespace ratapprox::linalg {
namespace {

void require_finite(const DenseMatrix& M, const char* what) {
  if (!M.allFinite()) throw KernelError(std::string(what) + ": non-finite input entries");
}

}  // namespace

Svd svd(const DenseMatrix& M) {
  require_finite(M, "svd");
  const lapack_int m = static_cast<lapack_int>(M.rows());
  const lapack_int n = static_cast<lapack_int>(M.cols());
  const lapack_int k = std::min(m, n);
  Svd out;
  out.S.resize(k);
  out.U.resize(m, k);
  out.Vt.resize(k, n);
  if (k == 0) return out;

  DenseMatrix work = M;
  lapack_int info = LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'S', m, n, work.data(), m, out.S.data(),
                                   out.U.data(), m, out.Vt.data(), k);
  if (info > 0) {
    // divide-and-conquer occasionally fails to converge; the QR-iteration
    // driver is slower but more forgiving.
    work = M;
    Vector superb(k);
    info = LAPACKE_dgesvd(LAPACK_COL_MAJOR, 'S', 'S', m, n, work.data(), m, out.S.data(),
                          out.U.data(), m, out.Vt.data(), k, superb.data());
  }
  if (info != 0) throw KernelError("svd: LAPACK failed to converge (info=" + std::to_string(info) + ")");
  return out;
}

RightSvd right_svd(const DenseMatrix& M) {
  require_finite(M, "right_svd");
  const lapack_int m = static_cast<lapack_int>(M.rows());
  const lapack_int n = static_cast<lapack_int>(M.cols());
  const lapack_int k = std::min(m, n);
  RightSvd out;
  out.S.resize(k);
  out.Vt.resize(n, n);
  if (n == 0) return out;
  if (m == 0) {
    out.Vt.setIdentity();
    return out;
  }
  DenseMatrix work = M;
  Vector superb(std::max<lapack_int>(k, 1));
  double dummy = 0.0;
  lapack_int info = LAPACKE_dgesvd(LAPACK_COL_MAJOR, 'N', 'A', m, n, work.data(), m, out.S.data(),
                                   &dummy, 1, out.Vt.data(), n, superb.data());
  if (info != 0) throw KernelError("right_svd: LAPACK failed to converge (info=" + std::to_string(info) + ")");
  return out;
}

Vector singular_values(const DenseMatrix& M) {
  require_finite(M, "singular_values");
  const lapack_int m = static_cast<lapack_int>(M.rows());
  const lapack_int n = static_cast<lapack_int>(M.cols());
  const lapack_int k = std::min(m, n);
  Vector s(k);
  if (k == 0) return s;
  DenseMatrix work = M;
  lapack_int info =
      LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'N', m, n, work.data(), m, s.data(), nullptr, 1, nullptr, 1);
  if (info != 0) throw KernelError("singular_values: LAPACK failed (info=" + std::to_string(info) + ")");
  return s;
}

GeneralizedEigen generalized_eig(const DenseMatrix& A, const DenseMatrix& B, bool want_vectors) {
  if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
    throw ArgumentError("generalized_eig: A and B must be square and of equal size");
  require_finite(A, "generalized_eig");
  require_finite(B, "generalized_eig");
  const lapack_int n = static_cast<lapack_int>(A.rows());
  GeneralizedEigen out;
  if (n == 0) return out;

  DenseMatrix a = A;
  DenseMatrix b = B;
  Vector alphar(n), alphai(n), beta(n);
  DenseMatrix vr;
  if (want_vectors) vr.resize(n, n);
  double dummy = 0.0;
  lapack_int info = LAPACKE_dggev(LAPACK_COL_MAJOR, 'N', want_vectors ? 'V' : 'N', n, a.data(), n,
                                  b.data(), n, alphar.data(), alphai.data(), beta.data(), &dummy, 1,
                                  want_vectors ? vr.data() : &dummy, want_vectors ? n : 1);
  if (info != 0) {
    const double cond_a = A.norm() > 0 ? 1.0 / std::max(rcond(A), 1e-300) : 0.0;
    throw KernelError("generalized_eig: QZ failed (info=" + std::to_string(info) + ")", cond_a);
  }

  out.values.resize(n);
  for (lapack_int j = 0; j < n; ++j) {
    auto& ev = out.values[j];
    if (beta[j] == 0.0) {
      ev.infinite = true;
      continue;
    }
    ev.value = {alphar[j] / beta[j], alphai[j] / beta[j]};
    if (!std::isfinite(ev.value.real()) || !std::isfinite(ev.value.imag())) ev.infinite = true;
  }

  if (want_vectors) {
    out.vectors.resize(n, n);
    for (lapack_int j = 0; j < n; ++j) {
      if (alphai[j] == 0.0) {
        out.vectors.col(j) = vr.col(j).cast<std::complex<double>>();
      } else if (alphai[j] > 0.0 && j + 1 < n) {
        // conjugate pair stored as (re, im) in consecutive columns
        for (lapack_int i = 0; i < n; ++i) {
          out.vectors(i, j) = {vr(i, j), vr(i, j + 1)};
          out.vectors(i, j + 1) = {vr(i, j), -vr(i, j + 1)};
        }
        ++j;
      }
    }
  }
  return out;
}

double rcond(const DenseMatrix& A) {
  if (A.rows() != A.cols()) throw ArgumentError("rcond: matrix must be square");
  const lapack_int n = static_cast<lapack_int>(A.rows());
  if (n == 0) return 1.0;
  if (!A.allFinite()) return 0.0;
  DenseMatrix lu = A;
  std::vector<lapack_int> ipiv(n);
  const double anorm = A.cwiseAbs().colwise().sum().maxCoeff();
  lapack_int info = LAPACKE_dgetrf(LAPACK_COL_MAJOR, n, n, lu.data(), n, ipiv.data());
  if (info > 0) return 0.0;
  double rc = 0.0;
  LAPACKE_dgecon(LAPACK_COL_MAJOR, '1', n, lu.data(), n, anorm, &rc);
  return rc;
}

double rcond_equilibrated(const DenseMatrix& A) {
  if (A.rows() != A.cols()) throw ArgumentError("rcond_equilibrated: matrix must be square");
  const lapack_int n = static_cast<lapack_int>(A.rows());
  if (n == 0) return 1.0;
  if (!A.allFinite()) return 0.0;
  Vector r(n), c(n);
  double rowcnd = 0, colcnd = 0, amax = 0;
  const lapack_int info =
      LAPACKE_dgeequ(LAPACK_COL_MAJOR, n, n, A.data(), n, r.data(), c.data(), &rowcnd, &colcnd, &amax);
  if (info != 0) return 0.0;  // a zero row or column
  const DenseMatrix S = r.asDiagonal() * A * c.asDiagonal();
  return rcond(S);
}

Vector solve(const DenseMatrix& A, const Vector& b) {
  if (A.rows() != A.cols() || A.rows() != b.size())
    throw ArgumentError("solve: dimension mismatch");
  const lapack_int n = static_cast<lapack_int>(A.rows());
  if (n == 0) return b;
  require_finite(A, "solve");
  DenseMatrix lu = A;
  std::vector<lapack_int> ipiv(n);
  const double anorm = A.cwiseAbs().colwise().sum().maxCoeff();
  lapack_int info = LAPACKE_dgetrf(LAPACK_COL_MAJOR, n, n, lu.data(), n, ipiv.data());
  double rc = 0.0;
  if (info == 0) LAPACKE_dgecon(LAPACK_COL_MAJOR, '1', n, lu.data(), n, anorm, &rc);
  if (info != 0 || rc < std::numeric_limits<double>::epsilon()) {
    throw KernelError("solve: matrix is singular to working precision",
                      rc > 0 ? 1.0 / rc : std::numeric_limits<double>::infinity());
  }
  Vector x = b;
  LAPACKE_dgetrs(LAPACK_COL_MAJOR, 'N', n, 1, lu.data(), n, ipiv.data(), x.data(), n);
  return x;
}

HessenbergTriangular hessenberg_triangular(const DenseMatrix& A, const DenseMatrix& E,
                                           const Vector& b, const Vector& c) {
  const lapack_int n = static_cast<lapack_int>(A.rows());
  if (A.cols() != n || E.rows() != n || E.cols() != n || b.size() != n || c.size() != n)
    throw ArgumentError("hessenberg_triangular: dimension mismatch");
  require_finite(A, "hessenberg_triangular");
  require_finite(E, "hessenberg_triangular");
  HessenbergTriangular ht;
  ht.H = A;
  ht.T = E;
  ht.b = b;
  ht.c = c;
  if (n == 0) return ht;

  // E = Q0 R, then apply Q0^T to A and b
  Vector tau(n);
  LAPACKE_dgeqrf(LAPACK_COL_MAJOR, n, n, ht.T.data(), n, tau.data());
  LAPACKE_dormqr(LAPACK_COL_MAJOR, 'L', 'T', n, n, n, ht.T.data(), n, tau.data(), ht.H.data(), n);
  LAPACKE_dormqr(LAPACK_COL_MAJOR, 'L', 'T', n, 1, n, ht.T.data(), n, tau.data(), ht.b.data(), n);
  ht.T.triangularView<Eigen::StrictlyLower>().setZero();

  // LAPACKE scans Q and Z for NaN even when asked to initialize them
  DenseMatrix Q = DenseMatrix::Identity(n, n), Z = DenseMatrix::Identity(n, n);
  lapack_int info = LAPACKE_dgghrd(LAPACK_COL_MAJOR, 'I', 'I', n, 1, n, ht.H.data(), n,
                                   ht.T.data(), n, Q.data(), n, Z.data(), n);
  if (info != 0) throw KernelError("hessenberg_triangular: dgghrd failed (info=" + std::to_string(info) + ")");
  ht.b = Q.transpose() * ht.b;
  ht.c = Z.transpose() * c;
  for (lapack_int j = 0; j < n; ++j)
    for (lapack_int i = j + 2; i < n; ++i) ht.H(i, j) = 0.0;
  return ht;
}

double hessenberg_transfer(const HessenbergTriangular& ht, double x) {
  const Eigen::Index n = ht.H.rows();
  if (n == 0) return 0.0;
  thread_local std::vector<double> m;
  thread_local std::vector<double> rhs;
  m.assign(static_cast<size_t>(n * n), 0.0);
  rhs.assign(ht.b.data(), ht.b.data() + n);
  auto at = [&](Eigen::Index i, Eigen::Index j) -> double& { return m[static_cast<size_t>(i * n + j)]; };
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index j0 = i == 0 ? 0 : i - 1;
    for (Eigen::Index j = j0; j < n; ++j) at(i, j) = x * ht.T(i, j) - ht.H(i, j);
  }
  // Gaussian elimination with partial pivoting between adjacent rows.
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (std::abs(at(k + 1, k)) > std::abs(at(k, k))) {
      for (Eigen::Index j = k; j < n; ++j) std::swap(at(k, j), at(k + 1, j));
      std::swap(rhs[k], rhs[k + 1]);
    }
    const double piv = at(k, k);
    if (piv == 0.0) return std::numeric_limits<double>::quiet_NaN();
    const double l = at(k + 1, k) / piv;
    if (l != 0.0) {
      for (Eigen::Index j = k + 1; j < n; ++j) at(k + 1, j) -= l * at(k, j);
      rhs[k + 1] -= l * rhs[k];
    }
  }
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    double s = rhs[i];
    for (Eigen::Index j = i + 1; j < n; ++j) s -= at(i, j) * rhs[j];
    if (at(i, i) == 0.0) return std::numeric_limits<double>::quiet_NaN();
    rhs[i] = s / at(i, i);
  }
  double acc = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) acc += ht.c[i] * rhs[i];
  return acc;
}

}  // namespace ratapprox::linalg
