#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "ratapprox/dataset.hpp"
#include "ratapprox/model.hpp"

namespace testing {

/// r(x) = d + sum_i c_i / (x - p_i) with real poles outside [-1.5, 1.5].
struct PoleResidue {
  std::vector<double> poles;
  std::vector<double> residues;
  double d = 0.0;

  double operator()(double x) const {
    double s = d;
    for (std::size_t i = 0; i < poles.size(); ++i) s += residues[i] / (x - poles[i]);
    return s;
  }
};

inline PoleResidue random_rational(int q, std::mt19937_64& rng, bool proper = false) {
  std::uniform_real_distribution<double> mag(2.0, 4.0), res(0.5, 2.0), coin(0.0, 1.0);
  PoleResidue r;
  for (int i = 0; i < q; ++i) {
    // well separated poles keep the rank decision crisp
    const double base = 2.0 + 2.0 * i / std::max(q, 1);
    r.poles.push_back((coin(rng) < 0.5 ? -1.0 : 1.0) * (base + 0.1 * mag(rng) / 4.0));
    r.residues.push_back((coin(rng) < 0.5 ? -1.0 : 1.0) * res(rng));
  }
  if (!proper) r.d = res(rng);
  return r;
}

inline std::vector<double> random_points(int count, double lo, double hi, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> xs;
  while (static_cast<int>(xs.size()) < count) {
    const double x = u(rng);
    bool dup = false;
    for (double y : xs) dup = dup || std::abs(x - y) < 1e-6;
    if (!dup) xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  return xs;
}

/// Descriptor model with E = I and poles (eigenvalues of A) outside [-1, 1].
inline ratapprox::RationalApproximant random_stable_model(int r, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto pr = random_rational(r, rng, true);
  ratapprox::RationalApproximant m;
  m.E = Eigen::MatrixXd::Identity(r, r);
  m.A = Eigen::MatrixXd::Zero(r, r);
  m.B.resize(r);
  m.C.resize(r);
  for (int i = 0; i < r; ++i) {
    m.A(i, i) = pr.poles[i];
    m.B[i] = 1.0;
    m.C[i] = pr.residues[i];
  }
  // orthogonal similarity hides the diagonal structure
  Eigen::MatrixXd G(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) G(i, j) = u(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(G);
  const Eigen::MatrixXd Q = qr.householderQ();
  m.A = Q * m.A * Q.transpose();
  m.B = Q * m.B;
  m.C = Q * m.C;
  m.num_degree = r - 1;
  m.den_degree = r;
  return m;
}

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace testing
