#pragma once

#include <span>
#include <vector>

#include "ratapprox/linalg.hpp"

namespace ratapprox {

/// Descriptor realization R(x) = C (xE - A)^{-1} B + D.
struct RationalApproximant {
  linalg::DenseMatrix E;
  linalg::DenseMatrix A;
  linalg::Vector B;
  linalg::Vector C;  // stored as a column; used as a row
  double D = 0.0;
  int num_degree = 0;
  int den_degree = 0;

  Eigen::Index order() const { return E.rows(); }
};

/// Throws ArgumentError when the matrix shapes disagree.
void check_shapes(const RationalApproximant& m);

/// Dense-solve evaluation. Throws PoleProximityError when the solve
/// residual exceeds 1e-6 ||B|| or the result is not finite.
double evaluate(const RationalApproximant& m, double x);

/// Equivalent model with E = I. Throws ConversionError when E has
/// condition number above 1e12.
RationalApproximant to_standard(const RationalApproximant& m);

/// True when x0 E - A is numerically singular at both fixed probe shifts.
bool pencil_looks_singular(const RationalApproximant& m);

/// Model reduced once to Hessenberg-triangular form for cheap repeated
/// evaluation. Immutable after construction; safe to share across threads.
class PreparedModel {
 public:
  explicit PreparedModel(const RationalApproximant& m);

  /// R(x), or NaN when x hits an exact pole of the reduced pencil.
  double operator()(double x) const;

  /// Evaluates at every point; OpenMP-parallel over points.
  void evaluate_many(std::span<const double> xs, std::span<double> out) const;
  /// Serial reference of evaluate_many.
  void evaluate_many_serial(std::span<const double> xs, std::span<double> out) const;

 private:
  linalg::HessenbergTriangular ht_;
  double d_;
};

}  // namespace ratapprox
