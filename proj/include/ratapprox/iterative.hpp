#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "ratapprox/dataset.hpp"
#include "ratapprox/maxerror.hpp"
#include "ratapprox/model.hpp"

namespace ratapprox::iterative {

struct IterateOptions {
  int r = 48;
  double xi = 1e-7;
  int max_steps = 22;  // steps 0 .. max_steps - 1
  PartitionScheme scheme = PartitionScheme::Same;
};

struct StepRecord {
  int step = 0;
  double eps_total = 0.0;
  double eps_at_0 = 0.0;
  double eps_minus = 0.0;
  double eps_plus = 0.0;
  double added_x1 = 0.0;  // NaN when nothing was added
  double added_x2 = 0.0;
  std::size_t data_size = 0;  // pairs in the dataset used for this step
  maxerror::ErrorReport report;
};

struct IterationTrace {
  std::vector<StepRecord> steps;
  std::vector<std::string> warnings;
  bool converged = false;  // eps_total < xi was reached
};

struct IterationResult {
  RationalApproximant model;
  IterationTrace trace;
  PartitionedData data;  // final dataset
};

/// Greedy refinement of a fixed-order Loewner fit of |x|:
///   step 0: fit, rho = interior abscissa of the largest error;
///   step 1: add (0, 0) and (rho, |rho|);
///   step 2: add (-1, 1) and (1, 1);
///   step m > 2: add the argmax points of the previous report on (-1, 0) and (0, 1).
/// Stops from step 2 on once eps_total < xi. The origin always goes to the
/// rectangular extra slot; other points become Hermite nodes for the Same
/// scheme and extra columns otherwise. Repeated abscissas are moved by 1e-12.
IterationResult loewner_iterate(const MeasurementSet& ds, const IterateOptions& opt);

/// CSV with columns step,eps_total,eps_at_0,eps_minus,eps_plus,added_x1,added_x2.
void write_trace_csv(std::ostream& out, const IterationTrace& trace);

}  // namespace ratapprox::iterative
