#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "ratapprox/model.hpp"

namespace ratapprox::maxerror {

/// Maximum of |R(x) - |x|| on [-1, 1], split into its five components.
struct ErrorReport {
  double eps_minus = 0.0;  // sup over (-1, 0)
  double eps_plus = 0.0;   // sup over (0, 1)
  double eps_at_minus1 = 0.0;
  double eps_at_0 = 0.0;
  double eps_at_1 = 0.0;
  double eps_total = 0.0;
  double argmax_minus = 0.0;
  double argmax_plus = 0.0;
  double argmax_total = 0.0;
  /// False when (A, E) has a real eigenvalue in [-1, 1]; the components are
  /// then only the values seen at candidates and grid points.
  bool valid = true;
  std::vector<double> poles_in_interval;
};

/// Real zeros of R'(x) - d_bar from the augmented pencil of dimension 2r + 1,
/// restricted to (0, 1) for d_bar = +1 and to (-1, 0) for d_bar = -1. Sorted.
std::vector<double> extrema_candidates(const RationalApproximant& m, int d_bar);

/// Real eigenvalues of (A, E) lying in [-1, 1].
std::vector<double> real_poles_in_interval(const RationalApproximant& m);

/// Eigenvalue method plus a 10^4-point interior grid on each half.
ErrorReport max_error(const RationalApproximant& m);

struct GridResult {
  double value = 0.0;
  double argmax = 0.0;
  std::size_t skipped = 0;  // grid points at a pole (non-finite R)
};

/// Uniform grid on [-1, 1] containing both endpoints and 0 (an even count
/// gets 0 appended). Ties resolve to the smallest abscissa index.
GridResult grid_max_error(const RationalApproximant& m, std::size_t points);
/// Serial reference of grid_max_error.
GridResult grid_max_error_serial(const RationalApproximant& m, std::size_t points);

/// Grid maximum of |R(x) - f(x)| for an arbitrary target.
GridResult grid_max_error(const RationalApproximant& m, std::size_t points,
                          const std::function<double(double)>& target);

/// The abscissas used by grid_max_error.
std::vector<double> uniform_grid(std::size_t points);

}  // namespace ratapprox::maxerror
