#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratapprox/aaa.hpp"
#include "ratapprox/dataset.hpp"
#include "ratapprox/loewner.hpp"
#include "ratapprox/maxerror.hpp"
#include "ratapprox/sampling.hpp"

namespace ratapprox::experiments {

enum class Method { Loewner, Aaa, Newman };

std::string_view to_string(Method m);
Method parse_method(std::string_view name);

struct ExperimentConfig {
  PointFamily points = PointFamily::Chebyshev;
  PartitionScheme partition = PartitionScheme::Same;
  double a = 0x1p-10;
  double b = 1.0;
  int n = 1024;  // points per half-interval
  bool add_zero = false;
  Method method = Method::Loewner;
  int order = 28;
  std::optional<double> delta;  // relative SVD tolerance; replaces order for Loewner fits
  double xi = 1e-7;
  int max_steps = 22;
  int order_min = 6;
  int order_max = 40;
  int grid_points = 100000;
  std::string out;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// JSON round trip. Unknown keys are a ConfigError.
std::string config_to_json(const ExperimentConfig& cfg);
ExperimentConfig config_from_json(std::string_view text, ExperimentConfig base = {});

/// |x| samples on the symmetric extension of the configured points.
MeasurementSet make_dataset(const ExperimentConfig& cfg);

struct FitOutcome {
  RationalApproximant model;
  maxerror::ErrorReport report;
  std::optional<aaa::BarycentricForm> barycentric;
  linalg::Vector singular_values;  // Loewner fits only
  int r = 0;
};

FitOutcome fit_loewner(const MeasurementSet& ds, PartitionScheme scheme, bool add_zero,
                       const loewner::TruncationMode& mode);
FitOutcome fit_aaa(const MeasurementSet& ds, bool add_zero, int r);
/// Exact realization of the closed-form approximant with parameter n.
FitOutcome fit_newman(int n);

/// End-to-end pipeline selected by cfg.method.
FitOutcome run_fit(const ExperimentConfig& cfg);

// ---- sweeps ---------------------------------------------------------------

struct SweepRow {
  int order;
  std::string method;
  double eps_total;  // NaN when the fit failed
  bool valid;
  double newman_upper;
  double bulanov_lower;
  double stahl_estimate;
};

/// Orders cfg.order_min..cfg.order_max for Loewner split/alternating/same,
/// AAA and the Newman approximant (parameter n = order). Failures become NaN rows.
std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg);

// ---- published tables -----------------------------------------------------

struct TableCell {
  std::string row;
  std::string column;
  double computed;
  double published;
  bool valid = true;  // false when the model has a pole in [-1, 1]
};

struct Table {
  int id;
  std::string title;
  bool counts;  // singular-value counts rather than errors
  std::vector<TableCell> cells;
};

/// Published values for tables 2-5, keyed by (row, column).
std::vector<TableCell> published_table(int id);

/// Recomputes a table with the published configuration.
Table reproduce_table(int id);

/// Single cell of a table (for tests that need only part of it).
TableCell reproduce_cell(int id, const std::string& row, const std::string& column);

}  // namespace ratapprox::experiments
