#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "ratapprox/dataset.hpp"
#include "ratapprox/model.hpp"

namespace ratapprox::aaa {

/// R(x) = sum_k a_k w_k / (x - nu_k) / sum_k a_k / (x - nu_k).
struct BarycentricForm {
  std::vector<double> support;  // nu_k
  std::vector<double> values;   // w_k
  std::vector<double> weights;  // a_k, unit Euclidean norm

  /// Order l: the form has l + 1 support points.
  int order() const { return static_cast<int>(support.size()) - 1; }
};

struct AaaIteration {
  std::size_t index;    // sample index chosen in this iteration
  double point;         // its abscissa
  double max_residual;  // max |F - R| over unselected samples before the choice
  BarycentricForm form; // form after adding the point and solving for weights
};

struct AaaTrace {
  std::vector<AaaIteration> iterations;
  double final_max_residual = 0.0;  // over samples not in the support
  bool early_stop = false;          // residual fell below 1e-15 before the requested order
};

struct StopAtOrder {
  int r;
};
struct StopAtTolerance {
  double tol;  // relative to max |f|
  int max_order = 100;
};
using AaaStop = std::variant<StopAtOrder, StopAtTolerance>;

struct AaaResult {
  BarycentricForm form;
  AaaTrace trace;
};

/// Greedy AAA fit. The first support point maximizes |f - mean(f)|; each
/// later one maximizes |f - R| over the unselected samples (ties go to the
/// smaller index). Requires at least 2 distinct samples and r < N / 2.
AaaResult aaa_fit(const MeasurementSet& ds, const AaaStop& stop);

/// Barycentric evaluation; exact stored value at support points. Throws
/// PoleProximityError when the denominator vanishes or the quotient is not finite.
double bary_eval(const BarycentricForm& b, double x);

/// Descriptor realization of dimension r + 2 with the last E diagonal entry zero.
RationalApproximant aaa_realization(const BarycentricForm& b);

/// Weighted residual vector of the linearized problem (rows: samples not in
/// the support). Its norm is the quantity minimized by the weights.
linalg::DenseMatrix aaa_loewner_matrix(const MeasurementSet& ds, const BarycentricForm& b);

}  // namespace ratapprox::aaa
