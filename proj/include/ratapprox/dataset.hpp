#pragma once

#include <functional>
#include <istream>
#include <optional>
#include <string_view>
#include <vector>

namespace ratapprox {

struct Sample {
  double tau;
  double f;
  friend bool operator==(const Sample&, const Sample&) = default;
};

/// Ordered measurement pairs (tau_l, f_l) with distinct abscissas.
struct MeasurementSet {
  std::vector<Sample> pairs;

  std::size_t size() const { return pairs.size(); }
};

enum class PartitionScheme { Split, Alternating, Same };

std::string_view to_string(PartitionScheme s);
PartitionScheme parse_partition_scheme(std::string_view name);

/// Derivative data at a Hermite node: d1 = f'(x), d2 = d[x f(x)]/dx.
struct HermiteSlopes {
  double d1;
  double d2;
};

/// Target function for sampling and for the Hermite slopes of the Same
/// scheme. Without a derivative, slopes come from a central difference
/// with step 1e-6 * max(1, |x|).
struct TargetFunction {
  std::function<double(double)> value;
  std::function<double(double)> derivative;  // may be empty

  HermiteSlopes slopes(double x) const;
};

/// |x| with sign(x) as derivative (undefined at 0).
TargetFunction abs_target();

/// Left/right split of the data. For the Same scheme left == right and
/// `hermite` carries one entry per node. `extra` holds additional right
/// pairs appended as rectangular columns (the origin, refinement points).
struct PartitionedData {
  PartitionScheme scheme = PartitionScheme::Split;
  std::vector<Sample> right;  // (lambda_i, w_i)
  std::vector<Sample> left;   // (mu_j, v_j)
  std::optional<std::vector<HermiteSlopes>> hermite;
  std::vector<Sample> extra;

  bool contains_abscissa(double x) const;
};

/// Samples |x| at the given points, in order. Duplicate points are a DataError.
MeasurementSet sample_abs(const std::vector<double>& points);

/// Samples an arbitrary target at the given points.
MeasurementSet sample_function(const std::vector<double>& points, const TargetFunction& target);

/// Partitions measurement pairs (sorted ascending first).
///   Split:       tau < 0 -> left, tau >= 0 -> right
///   Alternating: even positions -> right, odd -> left
///   Same:        both sides hold every pair; Hermite slopes from `target`
PartitionedData partition(const MeasurementSet& ds, PartitionScheme scheme,
                          const TargetFunction& target = abs_target());

/// Appends the pair (0, 0) to the rectangular extra slot.
PartitionedData add_origin(PartitionedData pd);

/// Reads (tau, f) rows: two numeric columns, comma separated, optional header.
MeasurementSet read_measurements_csv(std::istream& in);

}  // namespace ratapprox
