#pragma once

#include <string_view>

namespace ratapprox::bounds {

/// Classical error bounds for best type-(n, n) approximation of |x| on [-1, 1].
/// StahlEstimate is an asymptotic law, not a bound.
enum class BoundKind { NewmanUpper, NewmanLower, BulanovLower, StahlEstimate };

std::string_view to_string(BoundKind k);

/// Smallest n for which the formula is stated.
int min_valid_n(BoundKind k);

/// NewmanUpper 3 e^{-sqrt n}, NewmanLower e^{-9 sqrt n} / 2 (n >= 4),
/// BulanovLower e^{-pi sqrt(n+1)} (n >= 0), StahlEstimate 8 e^{-pi sqrt n} (n >= 1).
/// Throws DomainError below the validity range.
double bound_value(BoundKind k, int n);

}  // namespace ratapprox::bounds
