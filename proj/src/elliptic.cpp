#include "ratapprox/elliptic.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "ratapprox/error.hpp"

namespace ratapprox {
namespace {

constexpr int kMaxLandenSteps = 64;
constexpr double kLandenTolerance = 1e-15;

double agm(double a, double b) {
  for (int i = 0; i < kMaxLandenSteps && std::abs(a - b) > kLandenTolerance * a; ++i) {
    const double next_a = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = next_a;
  }
  return 0.5 * (a + b);
}

void check_modulus(double k, const char* who) {
  if (!(k >= 0.0 && k < 1.0))
    throw DomainError(std::string(who) + ": modulus must lie in [0, 1), got " + std::to_string(k));
}

}  // namespace

double complete_elliptic_K_complement(double kc) {
  if (!(kc > 0.0 && kc <= 1.0))
    throw DomainError("complete_elliptic_K_complement: complementary modulus must lie in (0, 1]");
  return std::numbers::pi / (2.0 * agm(1.0, kc));
}

double complete_elliptic_Kprime(double ell_prime) {
  check_modulus(ell_prime, "complete_elliptic_Kprime");
  return complete_elliptic_K_complement(std::sqrt((1.0 - ell_prime) * (1.0 + ell_prime)));
}

SnCn jacobi_sn_cn(double u, double k) {
  check_modulus(k, "jacobi_sn_cn");
  return jacobi_sn_cn(u, k, std::sqrt((1.0 - k) * (1.0 + k)));
}

SnCn jacobi_sn_cn(double u, double k, double kc) {
  check_modulus(k, "jacobi_sn_cn");
  std::array<double, kMaxLandenSteps + 1> a{};
  std::array<double, kMaxLandenSteps + 1> c{};
  a[0] = 1.0;
  double b = kc;
  c[0] = k;
  int n = 0;
  while (n < kMaxLandenSteps && std::abs(c[n]) > kLandenTolerance) {
    a[n + 1] = 0.5 * (a[n] + b);
    c[n + 1] = 0.5 * (a[n] - b);
    b = std::sqrt(a[n] * b);
    ++n;
  }
  double phi = std::ldexp(a[n] * u, n);
  for (int i = n; i > 0; --i) phi = 0.5 * (phi + std::asin(c[i] / a[i] * std::sin(phi)));
  return {std::sin(phi), std::cos(phi)};
}

}  // namespace ratapprox
