#pragma once

#include <vector>

#include "ratapprox/dataset.hpp"
#include "ratapprox/model.hpp"

namespace ratapprox::newman {

/// R(x) = x (p(x) - p(-x)) / (p(x) + p(-x)), p(x) = prod_{k=1}^{n-1} (x + alpha^k).
struct NewmanApproximant {
  int n;
  double alpha;  // exp(-sqrt(n) / n)
};

/// Throws DomainError for n < 2.
NewmanApproximant make_newman(int n);

/// Evaluates R on [-1, 1] from log-magnitudes and signs; uses evenness for
/// x < 0. Throws DomainError outside [-1, 1].
double newman_eval(const NewmanApproximant& na, double x);

/// The n pairs (0, 0), (-alpha^k, alpha^k), k = 1..n-1.
std::vector<Sample> newman_interpolation_pairs(const NewmanApproximant& na);

/// Loewner model built from the interpolation pairs: left data the pairs
/// (-alpha^k, alpha^k), right data their mirror images, origin as extra
/// column. The trailing singular values sit at the rounding floor, so the
/// order is the largest odd r with sigma_r > 1e-14 sigma_1; an even order
/// cannot carry the constant at infinity of an even function and puts a pole
/// in [-1, 1]. Close to the closed form for n >= 8; for smaller n the n - 1
/// rows do not pin it down.
RationalApproximant newman_loewner_model(const NewmanApproximant& na);

/// Exact descriptor realization of the closed form (dimension n + 1). The
/// sign-like factor (p - q)/(p + q), q(x) = p(-x), is written in
/// barycentric form on the interleaved nodes {0} U {alpha^k, k odd} U
/// {-alpha^k, k even}; multiplying by x only changes the output row.
RationalApproximant newman_model(const NewmanApproximant& na);

}  // namespace ratapprox::newman
