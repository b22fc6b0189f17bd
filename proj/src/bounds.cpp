#include "ratapprox/bounds.hpp"

#include <cmath>
#include <numbers>

#include <fmt/core.h>

#include "ratapprox/error.hpp"

namespace ratapprox::bounds {

std::string_view to_string(BoundKind k) {
  switch (k) {
    case BoundKind::NewmanUpper: return "NewmanUpper";
    case BoundKind::NewmanLower: return "NewmanLower";
    case BoundKind::BulanovLower: return "BulanovLower";
    case BoundKind::StahlEstimate: return "StahlEstimate";
  }
  return "?";
}

int min_valid_n(BoundKind k) {
  switch (k) {
    case BoundKind::NewmanUpper:
    case BoundKind::NewmanLower: return 4;
    case BoundKind::BulanovLower: return 0;
    case BoundKind::StahlEstimate: return 1;
  }
  return 0;
}

double bound_value(BoundKind k, int n) {
  if (n < min_valid_n(k))
    throw DomainError(fmt::format("{} is stated for n >= {}, got n = {}", to_string(k), min_valid_n(k), n));
  const double s = std::sqrt(static_cast<double>(n));
  constexpr double pi = std::numbers::pi;
  switch (k) {
    case BoundKind::NewmanUpper: return 3.0 * std::exp(-s);
    case BoundKind::NewmanLower: return 0.5 * std::exp(-9.0 * s);
    case BoundKind::BulanovLower: return std::exp(-pi * std::sqrt(static_cast<double>(n) + 1.0));
    case BoundKind::StahlEstimate: return 8.0 * std::exp(-pi * s);
  }
  return 0.0;
}

}  // namespace ratapprox::bounds
