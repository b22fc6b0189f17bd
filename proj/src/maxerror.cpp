#include "ratapprox/maxerror.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/core.h>

#include "ratapprox/error.hpp"

namespace ratapprox::maxerror {
namespace {

constexpr double kImagTol = 1e-8;
constexpr double kMargin = 1e-12;
constexpr std::size_t kBackupGrid = 10000;

bool is_real(const linalg::GeneralizedEigenvalue& ev) {
  return !ev.infinite && std::abs(ev.value.imag()) <= kImagTol * (1.0 + std::abs(ev.value.real()));
}

double target_abs(double x) { return std::abs(x); }

template <class Eval>
GridResult scan(const std::vector<double>& xs, Eval&& eval_into,
                const std::function<double(double)>& target) {
  std::vector<double> vals(xs.size());
  eval_into(xs, vals);
  GridResult g;
  g.value = -1.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(vals[i])) {
      ++g.skipped;
      continue;
    }
    const double e = std::abs(vals[i] - target(xs[i]));
    if (e > g.value) {
      g.value = e;
      g.argmax = xs[i];
    }
  }
  if (g.value < 0.0) g.value = std::numeric_limits<double>::quiet_NaN();
  return g;
}

}  // namespace

std::vector<double> extrema_candidates(const RationalApproximant& m, int d_bar) {
  if (d_bar != 1 && d_bar != -1) throw ArgumentError("extrema_candidates: d_bar must be +1 or -1");
  check_shapes(m);
  const Eigen::Index r = m.order();
  if (r < 1) throw ArgumentError("extrema_candidates: model order must be at least 1");
  const Eigen::Index n = 2 * r + 1;
  linalg::DenseMatrix X = linalg::DenseMatrix::Zero(n, n);
  linalg::DenseMatrix Eb = linalg::DenseMatrix::Zero(n, n);
  X.block(0, 0, r, r) = m.A;
  X.block(0, r, r, r) = m.E;
  X.block(r, r, r, r) = m.A;
  X.block(r, 2 * r, r, 1) = m.B;
  X.block(2 * r, 0, 1, r) = m.C.transpose();
  X(2 * r, 2 * r) = static_cast<double>(d_bar);
  Eb.block(0, 0, r, r) = m.E;
  Eb.block(r, r, r, r) = m.E;

  const auto eig = linalg::generalized_eig(X, Eb);
  const double lo = d_bar > 0 ? kMargin : -1.0 + kMargin;
  const double hi = d_bar > 0 ? 1.0 - kMargin : -kMargin;
  std::vector<double> out;
  for (const auto& ev : eig.values) {
    if (!is_real(ev)) continue;
    const double x = ev.value.real();
    if (x > lo && x < hi) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> real_poles_in_interval(const RationalApproximant& m) {
  check_shapes(m);
  const auto eig = linalg::generalized_eig(m.A, m.E);
  std::vector<double> out;
  for (const auto& ev : eig.values) {
    if (!is_real(ev)) continue;
    const double x = ev.value.real();
    if (x >= -1.0 && x <= 1.0) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// An eigenvalue cancelled by a zero leaves R bounded nearby; a genuine pole
// makes |R| grow like 1/h as the probe distance h shrinks.
bool is_genuine_pole(const PreparedModel& pm, double x) {
  const double s = 1.0 + std::abs(x);
  auto peak = [&](double h) {
    double v = 0.0;
    for (double t : {x - h * s, x + h * s}) {
      const double r = std::abs(pm(t));
      if (!std::isfinite(r)) return std::numeric_limits<double>::infinity();
      v = std::max(v, r);
    }
    return v;
  };
  const double far = peak(1e-4), near = peak(1e-7);
  return !std::isfinite(near) || near > 30.0 * far;
}

}  // namespace

ErrorReport max_error(const RationalApproximant& m) {
  check_shapes(m);
  const PreparedModel pm(m);
  ErrorReport rep;
  for (double x : real_poles_in_interval(m))
    if (is_genuine_pole(pm, x)) rep.poles_in_interval.push_back(x);
  rep.valid = rep.poles_in_interval.empty();

  auto err = [&](double x) {
    const double v = pm(x);
    return std::isfinite(v) ? std::abs(v - std::abs(x)) : std::numeric_limits<double>::infinity();
  };
  rep.eps_at_minus1 = err(-1.0);
  rep.eps_at_0 = err(0.0);
  rep.eps_at_1 = err(1.0);
  if (!std::isfinite(rep.eps_at_minus1) || !std::isfinite(rep.eps_at_0) || !std::isfinite(rep.eps_at_1))
    rep.valid = false;

  // candidates: stationary points of R(x) - |x| plus a coarse interior grid
  for (int side : {-1, 1}) {
    std::vector<double> xs = extrema_candidates(m, side);
    const std::size_t first_grid = xs.size();
    for (std::size_t j = 1; j <= kBackupGrid; ++j)
      xs.push_back(side * static_cast<double>(j) / static_cast<double>(kBackupGrid + 1));
    std::sort(xs.begin() + static_cast<std::ptrdiff_t>(first_grid), xs.end());
    std::vector<double> vals(xs.size());
    pm.evaluate_many(xs, vals);
    double best = 0.0, arg = side * 0.5;
    bool any = false;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!std::isfinite(vals[i])) continue;
      const double e = std::abs(vals[i] - std::abs(xs[i]));
      if (!any || e > best) {
        best = e;
        arg = xs[i];
        any = true;
      }
    }
    if (side < 0) {
      rep.eps_minus = best;
      rep.argmax_minus = arg;
    } else {
      rep.eps_plus = best;
      rep.argmax_plus = arg;
    }
  }

  const std::pair<double, double> parts[] = {{rep.eps_minus, rep.argmax_minus},
                                             {rep.eps_plus, rep.argmax_plus},
                                             {rep.eps_at_minus1, -1.0},
                                             {rep.eps_at_1, 1.0},
                                             {rep.eps_at_0, 0.0}};
  rep.eps_total = -1.0;
  for (const auto& [e, x] : parts) {
    if (e > rep.eps_total) {
      rep.eps_total = e;
      rep.argmax_total = x;
    }
  }
  return rep;
}

std::vector<double> uniform_grid(std::size_t points) {
  if (points < 2) throw ArgumentError("uniform_grid: at least two points are required");
  std::vector<double> xs(points);
  const double step = 2.0 / static_cast<double>(points - 1);
  for (std::size_t j = 0; j < points; ++j) xs[j] = -1.0 + step * static_cast<double>(j);
  xs.back() = 1.0;
  if (points % 2 == 1) {
    xs[points / 2] = 0.0;
  } else {
    xs.insert(std::upper_bound(xs.begin(), xs.end(), 0.0), 0.0);
  }
  return xs;
}

GridResult grid_max_error(const RationalApproximant& m, std::size_t points) {
  return grid_max_error(m, points, target_abs);
}

GridResult grid_max_error(const RationalApproximant& m, std::size_t points,
                          const std::function<double(double)>& target) {
  const PreparedModel pm(m);
  return scan(uniform_grid(points),
              [&](const std::vector<double>& xs, std::vector<double>& v) { pm.evaluate_many(xs, v); },
              target);
}

GridResult grid_max_error_serial(const RationalApproximant& m, std::size_t points) {
  const PreparedModel pm(m);
  return scan(uniform_grid(points),
              [&](const std::vector<double>& xs, std::vector<double>& v) { pm.evaluate_many_serial(xs, v); },
              target_abs);
}

}  // namespace ratapprox::maxerror
