#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "doctest.h"
#include "ratapprox/elliptic.hpp"
#include "ratapprox/error.hpp"

using namespace ratapprox;

namespace {

// incomplete integral of the first kind by adaptive quadrature
double F_quad(double phi, double k) {
  auto f = [k](double t) { return 1.0 / std::sqrt(1.0 - k * k * std::sin(t) * std::sin(t)); };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, phi, 15, 1e-14);
}

}  // namespace

TEST_CASE("K by AGM agrees with quadrature") {
  for (double k : {0.0, 0.3, 0.9, 0.999}) {
    const double quad = F_quad(std::numbers::pi / 2, k);
    CHECK(std::abs(complete_elliptic_Kprime(k) - quad) <= 1e-10 * quad);
  }
  CHECK(complete_elliptic_Kprime(0.0) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
}

TEST_CASE("K via the complementary modulus") {
  const double kc = 0x1p-10;
  const double k = std::sqrt((1 - kc) * (1 + kc));
  CHECK(complete_elliptic_K_complement(kc) == doctest::Approx(complete_elliptic_Kprime(k)).epsilon(1e-9));
  // K grows like log(4 / kc) as kc -> 0
  CHECK(complete_elliptic_K_complement(1e-12) == doctest::Approx(std::log(4e12)).epsilon(1e-10));
}

TEST_CASE("K rejects moduli outside [0, 1)") {
  CHECK_THROWS_AS(complete_elliptic_Kprime(1.0), DomainError);
  CHECK_THROWS_AS(complete_elliptic_Kprime(-0.1), DomainError);
}

TEST_CASE("sn and cn invert the incomplete integral") {
  for (double k : {0.2, 0.7, 0.99}) {
    for (double phi : {0.1, 0.6, 1.2, 1.5}) {
      const double u = F_quad(phi, k);
      const auto [sn, cn] = jacobi_sn_cn(u, k);
      CHECK(sn == doctest::Approx(std::sin(phi)).epsilon(1e-11));
      CHECK(cn == doctest::Approx(std::cos(phi)).epsilon(1e-11));
    }
  }
}

TEST_CASE("sn^2 + cn^2 = 1 on random arguments") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> U(-10.0, 10.0), K(0.0, 0.999999);
  for (int i = 0; i < 1000; ++i) {
    const auto [sn, cn] = jacobi_sn_cn(U(rng), K(rng));
    CHECK(std::abs(sn * sn + cn * cn - 1.0) <= 1e-12);
  }
}

TEST_CASE("degenerate moduli reduce to sin/cos") {
  const auto [sn, cn] = jacobi_sn_cn(0.4, 0.0);
  CHECK(sn == doctest::Approx(std::sin(0.4)));
  CHECK(cn == doctest::Approx(std::cos(0.4)));
}
