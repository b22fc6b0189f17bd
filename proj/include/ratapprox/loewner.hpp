#pragma once

#include <utility>
#include <variant>

#include "ratapprox/dataset.hpp"
#include "ratapprox/linalg.hpp"
#include "ratapprox/model.hpp"

namespace ratapprox::loewner {

using linalg::DenseMatrix;
using linalg::Vector;

/// Loewner L and shifted Loewner Ls (k_left x k_right_total), with the
/// data that generated them. The all-ones vectors R and L are implicit.
struct LoewnerPencil {
  DenseMatrix L;
  DenseMatrix Ls;
  Vector V;       // left values v_j
  Vector W;       // right values w_i (extras last)
  Vector lambda;  // right points (extras last)
  Vector mu;      // left points

  Eigen::Index rows() const { return L.rows(); }
  Eigen::Index cols() const { return L.cols(); }
};

/// Builds the pencil; OpenMP-parallel over rows. Throws DataError when a
/// left and a right abscissa coincide off the Hermite diagonal.
LoewnerPencil build_pencil(const PartitionedData& pd);

/// Single-threaded reference of build_pencil, entry-for-entry identical.
LoewnerPencil build_pencil_serial(const PartitionedData& pd);

struct SylvesterResiduals {
  double first;   // ||M L - L Lambda - (V R - L W)|| / ||V R - L W||
  double second;  // ||M Ls - Ls Lambda - (M V R - L W Lambda)|| / ||M V R - L W Lambda||
};

SylvesterResiduals sylvester_residuals(const LoewnerPencil& p);

/// Relative residuals of Ls = L Lambda + V R and Ls = M L + L W.
std::pair<double, double> shift_relation_residuals(const LoewnerPencil& p);

struct FixedRank {
  Eigen::Index r;
};
struct RelativeTolerance {
  double delta;  // keep sigma_k / sigma_1 > delta
};
using TruncationMode = std::variant<FixedRank, RelativeTolerance>;

struct SvdTruncation {
  Vector singular_values;  // all of them, descending
  Eigen::Index r = 0;
  DenseMatrix Xr;  // leading left singular vectors of L
  DenseMatrix Yr;  // leading right singular vectors of L
};

SvdTruncation svd_truncate(const LoewnerPencil& p, const TruncationMode& mode);
/// Truncation of an SVD of L computed once (for sweeps over r).
SvdTruncation svd_truncate(const linalg::Svd& dec, const TruncationMode& mode);

/// Projected model E = -Xr^T L Yr, A = -Xr^T Ls Yr, B = Xr^T V, C = W Yr.
/// Throws ArgumentError for r = 0 and DegenerateModelError when the
/// projected pencil is singular at the probe shifts.
RationalApproximant realize(const LoewnerPencil& p, const SvdTruncation& t);

/// Number of sigma_k with sigma_k / sigma_1 > delta.
Eigen::Index count_significant_svals(const LoewnerPencil& p, double delta);
Eigen::Index count_significant_svals(const Vector& singular_values, double delta);

}  // namespace ratapprox::loewner
