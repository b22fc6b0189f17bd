#include "ratapprox/newman.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/core.h>

#include "ratapprox/error.hpp"
#include "ratapprox/loewner.hpp"

namespace ratapprox::newman {

NewmanApproximant make_newman(int n) {
  if (n < 2) throw DomainError(fmt::format("make_newman: n = {} must be at least 2", n));
  const double nd = static_cast<double>(n);
  return {n, std::exp(-std::sqrt(nd) / nd)};
}

double newman_eval(const NewmanApproximant& na, double x) {
  if (!(x >= -1.0 && x <= 1.0)) throw DomainError(fmt::format("newman_eval: x = {} outside [-1, 1]", x));
  x = std::abs(x);
  if (x == 0.0) return 0.0;
  // f = p(-x)/p(x) = prod (a^k - x)/(a^k + x), accumulated as log|f| and a sign
  const double log_alpha = std::log(na.alpha);
  double log_mag = 0.0;
  bool negative = false;
  for (int k = 1; k < na.n; ++k) {
    const double ak = std::exp(k * log_alpha);
    const double d = ak - x;
    if (d == 0.0) return x;  // p(-x) = 0
    if (d < 0.0) negative = !negative;
    log_mag += std::log(std::abs(d)) - std::log(ak + x);
  }
  const double f = (negative ? -1.0 : 1.0) * std::exp(log_mag);
  return x * (1.0 - f) / (1.0 + f);
}

std::vector<Sample> newman_interpolation_pairs(const NewmanApproximant& na) {
  std::vector<Sample> out;
  out.reserve(static_cast<std::size_t>(na.n));
  out.push_back({0.0, 0.0});
  const double log_alpha = std::log(na.alpha);
  for (int k = 1; k < na.n; ++k) {
    const double ak = std::exp(k * log_alpha);
    out.push_back({-ak, ak});
  }
  return out;
}

RationalApproximant newman_loewner_model(const NewmanApproximant& na) {
  const auto pairs = newman_interpolation_pairs(na);
  PartitionedData pd;
  pd.scheme = PartitionScheme::Split;
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    pd.left.push_back(pairs[k]);
    pd.right.push_back({-pairs[k].tau, pairs[k].f});
  }
  pd.extra.push_back(pairs[0]);
  const auto pencil = loewner::build_pencil(pd);
  const auto dec = linalg::svd(pencil.L);
  auto r = loewner::svd_truncate(dec, loewner::RelativeTolerance{1e-14}).r;
  if (r % 2 == 0) r = std::max<Eigen::Index>(r - 1, 1);
  return loewner::realize(pencil, loewner::svd_truncate(dec, loewner::FixedRank{r}));
}

RationalApproximant newman_model(const NewmanApproximant& na) {
  const int n = na.n;
  const double log_alpha = std::log(na.alpha);
  std::vector<double> powers(static_cast<std::size_t>(n));  // powers[k] = alpha^k
  for (int k = 0; k < n; ++k) powers[k] = std::exp(k * log_alpha);

  // log p(alpha^k), p evaluated at a positive node
  auto log_p_at = [&](double x) {
    double s = 0.0;
    for (int j = 1; j < n; ++j) s += std::log(x + powers[j]);
    return s;
  };

  std::vector<double> nodes{0.0};
  std::vector<double> vals{0.0};
  std::vector<double> log_d{std::log(2.0) + log_p_at(0.0)};  // log of (p + q) at the node
  for (int k = 1; k < n; ++k) {
    const bool odd = (k % 2) == 1;
    nodes.push_back(odd ? powers[k] : -powers[k]);
    vals.push_back(odd ? 1.0 : -1.0);
    log_d.push_back(log_p_at(powers[k]));
  }

  // weights d(nu_j) / prod_{i != j} (nu_j - nu_i); p + q > 0 on [-1, 1]
  const std::size_t m = nodes.size();
  std::vector<double> log_w(m), sign_w(m);
  double log_max = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < m; ++j) {
    double lw = log_d[j];
    bool neg = false;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == j) continue;
      const double diff = nodes[j] - nodes[i];
      if (diff < 0) neg = !neg;
      lw -= std::log(std::abs(diff));
    }
    log_w[j] = lw;
    sign_w[j] = neg ? -1.0 : 1.0;
    log_max = std::max(log_max, lw);
  }
  std::vector<double> w(m);
  double norm2 = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    w[j] = sign_w[j] * std::exp(log_w[j] - log_max);
    norm2 += w[j] * w[j];
  }
  for (double& v : w) v /= std::sqrt(norm2);

  // AAA-type realization of g; then x g = sum nu_k w_k z_k - (sum a_k w_k) z_last
  const auto mi = static_cast<Eigen::Index>(m);
  RationalApproximant R;
  R.E = linalg::DenseMatrix::Identity(mi + 1, mi + 1);
  R.E(mi, mi) = 0.0;
  R.B.resize(mi + 1);
  R.C.resize(mi + 1);
  linalg::Vector diag(mi + 1);
  double aw = 0.0;
  for (Eigen::Index k = 0; k < mi; ++k) {
    R.B[k] = w[k];
    R.C[k] = nodes[k] * vals[k];
    diag[k] = nodes[k];
    aw += w[k] * vals[k];
  }
  R.B[mi] = 1.0;
  R.C[mi] = -aw;
  diag[mi] = 1.0;
  R.A = linalg::DenseMatrix(diag.asDiagonal());
  R.A -= R.B * linalg::Vector::Ones(mi + 1).transpose();
  R.num_degree = n;
  R.den_degree = n - 1;
  return R;
}

}  // namespace ratapprox::newman
