#include <random>

#include "doctest.h"
#include "ratapprox/bounds.hpp"
#include "ratapprox/error.hpp"
#include "ratapprox/maxerror.hpp"
#include "ratapprox/newman.hpp"

using namespace ratapprox;
using namespace ratapprox::newman;

namespace {

// direct product form, fine for small n
double naive(int n, double x) {
  const double a = std::exp(-std::sqrt(double(n)) / n);
  double p = 1, q = 1;
  for (int k = 1; k < n; ++k) {
    p *= x + std::pow(a, k);
    q *= -x + std::pow(a, k);
  }
  return x * (p - q) / (p + q);
}

}  // namespace

TEST_CASE("closed form agrees with the naive product for small n") {
  const auto na = make_newman(9);
  for (double x : {-0.9, -0.3, 0.01, 0.5, 1.0}) CHECK(newman_eval(na, x) == doctest::Approx(naive(9, x)).epsilon(1e-12));
  CHECK(newman_eval(na, 0.0) == 0.0);
}

TEST_CASE("evenness") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto na = make_newman(100);
  for (int i = 0; i < 10000; ++i) {
    const double x = u(rng);
    CHECK(std::abs(newman_eval(na, x) - newman_eval(na, -x)) <= 1e-13);
  }
}

TEST_CASE("grid error below 3 exp(-sqrt n)") {
  for (int n : {9, 16, 25, 36}) {
    const auto na = make_newman(n);
    double worst = 0;
    const int pts = n == 25 ? 1000000 : 100000;
    for (int i = 0; i <= pts; ++i) {
      const double x = static_cast<double>(i) / pts;
      worst = std::max(worst, std::abs(newman_eval(na, x) - x));
    }
    CHECK(worst <= bounds::bound_value(bounds::BoundKind::NewmanUpper, n));
  }
}

TEST_CASE("denominator p(x) + p(-x) keeps its sign on [0, 1]") {
  const int n = 30;
  const double a = std::exp(-std::sqrt(double(n)) / n);
  for (int i = 0; i <= 10000; ++i) {
    const double x = i / 10000.0;
    double f = 1;
    for (int k = 1; k < n; ++k) {
      f *= (std::pow(a, k) - x) / (std::pow(a, k) + x);
    }
    CHECK(1.0 + f > 0.0);  // (p + q) / p with p > 0
  }
}

TEST_CASE("interpolation pairs") {
  const auto two = newman_interpolation_pairs(make_newman(2));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == Sample{0.0, 0.0});
  CHECK(two[1].tau == doctest::Approx(-std::exp(-std::sqrt(2.0) / 2)));
  const auto na = make_newman(40);
  const auto pairs = newman_interpolation_pairs(na);
  CHECK(pairs.size() == 40);
  for (const auto& s : pairs) {
    CHECK(std::abs(newman_eval(na, s.tau) - s.f) <= 1e-12);
    CHECK(std::abs(newman_eval(na, -s.tau) - s.f) <= 1e-12);
  }
  CHECK_THROWS_AS(make_newman(1), DomainError);
  CHECK_THROWS_AS(newman_eval(na, 1.5), DomainError);
}

TEST_CASE("exact realization reproduces the closed form") {
  for (int n : {5, 12, 25, 40}) {
    const auto na = make_newman(n);
    const auto m = newman_model(na);
    const PreparedModel pm(m);
    for (int i = 0; i <= 400; ++i) {
      const double x = -1.0 + i / 200.0;
      CHECK(std::abs(pm(x) - newman_eval(na, x)) <= 1e-10);
    }
  }
}

TEST_CASE("Loewner model from the interpolation pairs at n = 25") {
  const auto m = newman_loewner_model(make_newman(25));
  const auto rep = maxerror::max_error(m);
  CHECK(rep.valid);
  CHECK(rep.eps_total <= 3 * std::exp(-5.0));
}

TEST_CASE("Loewner route stays within the bound and has odd order") {
  for (int n = 8; n <= 40; n += 4) {
    const auto m = newman_loewner_model(make_newman(n));
    CHECK(m.order() % 2 == 1);
    const auto rep = maxerror::max_error(m);
    CHECK(rep.valid);
    CHECK(rep.eps_total <= 3 * std::exp(-std::sqrt(static_cast<double>(n))));
  }
}
