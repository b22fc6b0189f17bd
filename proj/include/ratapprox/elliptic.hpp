#pragma once

namespace ratapprox {

/// Complete elliptic integral of the first kind K(k) for modulus k = ell_prime,
/// via the arithmetic-geometric mean. Domain 0 <= ell_prime < 1.
double complete_elliptic_Kprime(double ell_prime);

/// Same integral, parameterised by the complementary modulus kc = sqrt(1 - k^2).
/// Avoids the cancellation in forming kc when k is close to 1.
double complete_elliptic_K_complement(double kc);

struct SnCn {
  double sn;
  double cn;
};

/// Jacobi elliptic functions sn(u; k), cn(u; k) by the descending Landen
/// (AGM) transformation. Domain 0 <= k < 1.
SnCn jacobi_sn_cn(double u, double k);

/// As above with both the modulus and its complement supplied.
SnCn jacobi_sn_cn(double u, double k, double kc);

}  // namespace ratapprox
