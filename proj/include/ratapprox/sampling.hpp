#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ratapprox {

/// Positive half-interval [a, b] with n sample points per half.
struct IntervalConfig {
  double a = 0x1p-10;
  double b = 1.0;
  int n = 1024;
};

enum class PointFamily { Linspace, Logspace, Chebyshev, Zolotarev, Newman };

std::string_view to_string(PointFamily f);
PointFamily parse_point_family(std::string_view name);

/// Modulus data for the Zolotarev construction on [a, b].
struct EllipticModulus {
  double ell;        // a / b
  double ell_prime;  // sqrt(1 - ell^2)
  double K_prime;    // K(ell_prime)

  static EllipticModulus from_interval(double a, double b);
};

std::vector<double> linspace_points(const IntervalConfig& cfg);
std::vector<double> logspace_points(const IntervalConfig& cfg);
std::vector<double> chebyshev_points(const IntervalConfig& cfg);
std::vector<double> zolotarev_points(const IntervalConfig& cfg);

/// Powers alpha^n, ..., alpha^1 of alpha = exp(-sqrt(n)/n), ascending.
std::vector<double> newman_points(int n);

/// Dispatch on family. Newman ignores a and b and uses cfg.n.
std::vector<double> generate_points(PointFamily family, const IntervalConfig& cfg);

/// Sorted union of -p and p over strictly positive input points.
std::vector<double> symmetric_extend(const std::vector<double>& points);

}  // namespace ratapprox
