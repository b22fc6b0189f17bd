#include "ratapprox/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <unordered_set>

#include "ratapprox/error.hpp"

namespace ratapprox {

std::string_view to_string(PartitionScheme s) {
  switch (s) {
    case PartitionScheme::Split: return "split";
    case PartitionScheme::Alternating: return "alternating";
    case PartitionScheme::Same: return "same";
  }
  return "?";
}

PartitionScheme parse_partition_scheme(std::string_view name) {
  if (name == "split") return PartitionScheme::Split;
  if (name == "alternating" || name == "interlaced") return PartitionScheme::Alternating;
  if (name == "same") return PartitionScheme::Same;
  throw ConfigError("unknown partition scheme '" + std::string(name) + "'");
}

HermiteSlopes TargetFunction::slopes(double x) const {
  double d1 = 0.0;
  if (derivative) {
    d1 = derivative(x);
  } else {
    const double h = 1e-6 * std::max(1.0, std::abs(x));
    d1 = (value(x + h) - value(x - h)) / (2.0 * h);
  }
  return {d1, value(x) + x * d1};
}

TargetFunction abs_target() {
  return {[](double x) { return std::abs(x); },
          [](double x) {
            if (x == 0.0) throw DomainError("derivative of |x| is undefined at 0");
            return x > 0.0 ? 1.0 : -1.0;
          }};
}

bool PartitionedData::contains_abscissa(double x) const {
  auto has = [x](const std::vector<Sample>& v) {
    return std::any_of(v.begin(), v.end(), [x](const Sample& s) { return s.tau == x; });
  };
  return has(right) || has(left) || has(extra);
}

MeasurementSet sample_function(const std::vector<double>& points, const TargetFunction& target) {
  std::unordered_set<double> seen;
  MeasurementSet ds;
  ds.pairs.reserve(points.size());
  for (double p : points) {
    if (!std::isfinite(p)) throw DataError("sample: non-finite point");
    if (!seen.insert(p).second) throw DataError("sample: duplicate point " + std::to_string(p));
    ds.pairs.push_back({p, target.value(p)});
  }
  return ds;
}

MeasurementSet sample_abs(const std::vector<double>& points) {
  return sample_function(points, abs_target());
}

PartitionedData partition(const MeasurementSet& ds, PartitionScheme scheme,
                          const TargetFunction& target) {
  std::vector<Sample> sorted = ds.pairs;
  std::sort(sorted.begin(), sorted.end(), [](const Sample& l, const Sample& r) { return l.tau < r.tau; });
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i].tau == sorted[i - 1].tau) throw DataError("partition: duplicate abscissa");

  PartitionedData pd;
  pd.scheme = scheme;
  switch (scheme) {
    case PartitionScheme::Split:
    case PartitionScheme::Alternating:
      if (sorted.size() % 2 != 0)
        throw DataError("partition: split/alternating need an even number of pairs");
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        const bool to_right = scheme == PartitionScheme::Split ? sorted[i].tau >= 0.0 : i % 2 == 0;
        (to_right ? pd.right : pd.left).push_back(sorted[i]);
      }
      break;
    case PartitionScheme::Same: {
      std::vector<HermiteSlopes> slopes;
      slopes.reserve(sorted.size());
      for (const auto& s : sorted) {
        if (s.tau == 0.0) throw DomainError("partition: same scheme cannot use a node at 0");
        slopes.push_back(target.slopes(s.tau));
      }
      pd.right = sorted;
      pd.left = sorted;
      pd.hermite = std::move(slopes);
      break;
    }
  }
  return pd;
}

PartitionedData add_origin(PartitionedData pd) {
  if (pd.contains_abscissa(0.0)) throw DataError("add_origin: 0 is already present");
  pd.extra.push_back({0.0, 0.0});
  return pd;
}

MeasurementSet read_measurements_csv(std::istream& in) {
  MeasurementSet ds;
  std::string line;
  std::size_t lineno = 0;
  std::unordered_set<double> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw DataError("csv line " + std::to_string(lineno) + ": expected two columns");
    double tau = 0.0, f = 0.0;
    try {
      std::size_t used = 0;
      tau = std::stod(line.substr(0, comma), &used);
      f = std::stod(line.substr(comma + 1), &used);
    } catch (const std::exception&) {
      if (lineno == 1 && ds.pairs.empty()) continue;  // header
      throw DataError("csv line " + std::to_string(lineno) + ": not numeric");
    }
    if (!seen.insert(tau).second) throw DataError("csv line " + std::to_string(lineno) + ": duplicate tau");
    ds.pairs.push_back({tau, f});
  }
  return ds;
}

}  // namespace ratapprox
