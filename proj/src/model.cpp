#include "ratapprox/model.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <fmt/core.h>

#include "ratapprox/error.hpp"
#include "ratapprox/parallel.hpp"

namespace ratapprox {

void check_shapes(const RationalApproximant& m) {
  const auto r = m.E.rows();
  if (m.E.cols() != r || m.A.rows() != r || m.A.cols() != r || m.B.size() != r || m.C.size() != r)
    throw ArgumentError("rational approximant: inconsistent matrix shapes");
}

double evaluate(const RationalApproximant& m, double x) {
  check_shapes(m);
  if (m.order() == 0) return m.D;
  const linalg::DenseMatrix M = x * m.E - m.A;
  const Eigen::PartialPivLU<linalg::DenseMatrix> lu(M);
  const linalg::Vector z = lu.solve(m.B);
  const double residual = (M * z - m.B).norm();
  const double value = m.C.dot(z) + m.D;
  if (!z.allFinite() || !std::isfinite(value) || residual > 1e-6 * m.B.norm())
    throw PoleProximityError(fmt::format("evaluate: x = {:.17g} is at or near a pole", x), x);
  return value;
}

RationalApproximant to_standard(const RationalApproximant& m) {
  check_shapes(m);
  const auto r = m.order();
  if (r == 0) return m;
  const linalg::Vector s = linalg::singular_values(m.E);
  if (s[0] == 0.0 || s[r - 1] / s[0] < 1e-12)
    throw ConversionError(fmt::format("to_standard: E is numerically singular (sigma_min/sigma_max = {:.3g})",
                                      s[0] == 0.0 ? 0.0 : s[r - 1] / s[0]));
  const Eigen::PartialPivLU<linalg::DenseMatrix> lu(m.E);
  RationalApproximant out;
  out.E = linalg::DenseMatrix::Identity(r, r);
  out.A = lu.solve(m.A);
  out.B = lu.solve(m.B);
  out.C = m.C;
  out.D = m.D;
  out.num_degree = m.num_degree;
  out.den_degree = m.den_degree;
  return out;
}

bool pencil_looks_singular(const RationalApproximant& m) {
  check_shapes(m);
  if (m.order() == 0) return false;
  constexpr double kProbeShifts[] = {0.5772156649015329, -1.3247179572447460};
  for (double x0 : kProbeShifts) {
    const linalg::DenseMatrix M = x0 * m.E - m.A;
    if (linalg::rcond_equilibrated(M) > std::numeric_limits<double>::epsilon()) return false;
  }
  return true;
}

PreparedModel::PreparedModel(const RationalApproximant& m)
    : ht_(linalg::hessenberg_triangular(m.A, m.E, m.B, m.C)), d_(m.D) {
  check_shapes(m);
}

double PreparedModel::operator()(double x) const { return linalg::hessenberg_transfer(ht_, x) + d_; }

void PreparedModel::evaluate_many(std::span<const double> xs, std::span<double> out) const {
  if (out.size() != xs.size()) throw ArgumentError("evaluate_many: output size mismatch");
  const auto n = static_cast<std::ptrdiff_t>(xs.size());
#pragma omp parallel for schedule(static) num_threads(max_threads())
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = (*this)(xs[i]);
}

void PreparedModel::evaluate_many_serial(std::span<const double> xs, std::span<double> out) const {
  if (out.size() != xs.size()) throw ArgumentError("evaluate_many: output size mismatch");
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = (*this)(xs[i]);
}

}  // namespace ratapprox
