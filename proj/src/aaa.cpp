#include "ratapprox/aaa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include <fmt/core.h>

#include "ratapprox/error.hpp"

namespace ratapprox::aaa {
namespace {

std::size_t argmax_unselected(const std::vector<double>& res, const std::vector<char>& selected) {
  std::size_t best = res.size();
  double best_val = -1.0;
  for (std::size_t i = 0; i < res.size(); ++i) {
    if (selected[i]) continue;
    if (res[i] > best_val) {
      best_val = res[i];
      best = i;
    }
  }
  return best;
}

// Barycentric quotient without the support lookup; NaN at a pole.
double quotient(const BarycentricForm& b, double x) {
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < b.support.size(); ++k) {
    const double c = b.weights[k] / (x - b.support[k]);
    num += c * b.values[k];
    den += c;
  }
  if (den == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return num / den;
}

}  // namespace

linalg::DenseMatrix aaa_loewner_matrix(const MeasurementSet& ds, const BarycentricForm& b) {
  std::set<double> sup(b.support.begin(), b.support.end());
  std::vector<const Sample*> rows;
  for (const auto& s : ds.pairs)
    if (!sup.count(s.tau)) rows.push_back(&s);
  linalg::DenseMatrix L(static_cast<Eigen::Index>(rows.size()),
                        static_cast<Eigen::Index>(b.support.size()));
  for (Eigen::Index i = 0; i < L.rows(); ++i)
    for (Eigen::Index k = 0; k < L.cols(); ++k)
      L(i, k) = (rows[i]->f - b.values[k]) / (rows[i]->tau - b.support[k]);
  return L;
}

AaaResult aaa_fit(const MeasurementSet& ds, const AaaStop& stop) {
  const std::size_t N = ds.size();
  {
    std::vector<double> taus;
    for (const auto& s : ds.pairs) taus.push_back(s.tau);
    std::sort(taus.begin(), taus.end());
    if (std::adjacent_find(taus.begin(), taus.end()) != taus.end())
      throw DataError("aaa_fit: duplicate abscissas");
    if (N < 2) throw DataError("aaa_fit: at least two distinct samples are required");
  }
  int target_order = 0;
  double tol = 0.0;
  if (const auto* s = std::get_if<StopAtOrder>(&stop)) {
    if (s->r < 0 || 2 * static_cast<std::size_t>(s->r) >= N)
      throw ArgumentError(fmt::format("aaa_fit: order {} needs r < N/2 with N = {}", s->r, N));
    target_order = s->r;
  } else {
    const auto& t = std::get<StopAtTolerance>(stop);
    if (!(t.tol >= 0.0)) throw ArgumentError("aaa_fit: tolerance must be nonnegative");
    target_order = std::min<int>(t.max_order, static_cast<int>((N - 1) / 2));
    tol = t.tol;
  }

  double fmax = 0.0, mean = 0.0;
  for (const auto& s : ds.pairs) {
    fmax = std::max(fmax, std::abs(s.f));
    mean += s.f;
  }
  mean /= static_cast<double>(N);
  const double tol_abs = tol * fmax;
  constexpr double kTiny = 1e-15;

  std::vector<double> res(N);
  for (std::size_t i = 0; i < N; ++i) res[i] = std::abs(ds.pairs[i].f - mean);
  std::vector<char> selected(N, 0);

  AaaResult out;
  BarycentricForm form;
  for (int ell = 0; ell <= target_order; ++ell) {
    const std::size_t idx = argmax_unselected(res, selected);
    const double chosen_res = res[idx];
    selected[idx] = 1;
    form.support.push_back(ds.pairs[idx].tau);
    form.values.push_back(ds.pairs[idx].f);

    // least-squares weights: last right singular vector of the Loewner matrix
    const auto L = aaa_loewner_matrix(ds, form);
    const auto rs = linalg::right_svd(L);
    const Eigen::Index m = static_cast<Eigen::Index>(form.support.size());
    form.weights.resize(static_cast<std::size_t>(m));
    for (Eigen::Index k = 0; k < m; ++k) form.weights[k] = rs.Vt(m - 1, k);
    // fix the sign for reproducibility: the first nonzero weight is positive
    for (double w : form.weights) {
      if (w == 0.0) continue;
      if (w < 0.0)
        for (double& v : form.weights) v = -v;
      break;
    }

    double maxres = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      if (selected[i]) {
        res[i] = 0.0;
        continue;
      }
      const double r = quotient(form, ds.pairs[i].tau);
      res[i] = std::isfinite(r) ? std::abs(ds.pairs[i].f - r) : std::numeric_limits<double>::infinity();
      maxres = std::max(maxres, res[i]);
    }
    out.trace.iterations.push_back({idx, ds.pairs[idx].tau, chosen_res, form});
    out.trace.final_max_residual = maxres;

    if (maxres < kTiny) {
      out.trace.early_stop = ell < target_order;
      break;
    }
    if (std::holds_alternative<StopAtTolerance>(stop) && maxres <= tol_abs) break;
  }
  out.form = std::move(form);
  return out;
}

double bary_eval(const BarycentricForm& b, double x) {
  for (std::size_t k = 0; k < b.support.size(); ++k)
    if (x == b.support[k]) return b.values[k];
  const double r = quotient(b, x);
  if (!std::isfinite(r)) throw PoleProximityError(fmt::format("bary_eval: pole near x = {:.17g}", x), x);
  return r;
}

RationalApproximant aaa_realization(const BarycentricForm& b) {
  const auto m = static_cast<Eigen::Index>(b.support.size());
  if (m == 0 || b.values.size() != b.support.size() || b.weights.size() != b.support.size())
    throw ArgumentError("aaa_realization: inconsistent barycentric form");
  const Eigen::Index n = m + 1;
  RationalApproximant R;
  R.E = linalg::DenseMatrix::Identity(n, n);
  R.E(m, m) = 0.0;
  R.B.resize(n);
  R.C.resize(n);
  linalg::Vector diag(n);
  for (Eigen::Index k = 0; k < m; ++k) {
    R.B[k] = b.weights[k];
    R.C[k] = b.values[k];
    diag[k] = b.support[k];
  }
  R.B[m] = 1.0;
  R.C[m] = 0.0;
  diag[m] = 1.0;
  R.A = linalg::DenseMatrix(diag.asDiagonal());
  R.A -= R.B * linalg::Vector::Ones(n).transpose();
  R.num_degree = static_cast<int>(m) - 1;
  R.den_degree = static_cast<int>(m) - 1;
  return R;
}

}  // namespace ratapprox::aaa
