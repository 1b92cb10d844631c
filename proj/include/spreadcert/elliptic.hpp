#pragma once

#include "spreadcert/common.hpp"

namespace spreadcert {

struct EllipticIntegrals {
  double K = 0.0;
  double E = 0.0;
};

/// K(mu) and E(mu) by the arithmetic-geometric mean, 0 <= mu < 1.
EllipticIntegrals complete_elliptic(double mu);

/// Same, with the complementary modulus supplied separately so that moduli
/// close to 1 keep full relative accuracy in mu' = sqrt(1 - mu^2).
EllipticIntegrals complete_elliptic(double mu, double mu_prime);

/// Modulus, nome and both complete integrals at one point.
struct EllipticPoint {
  double mu = 0.0;
  double q = 0.0;
  double K = 0.0;
  double E = 0.0;

  static EllipticPoint from_modulus(double mu);
  static EllipticPoint from_nome(double q);
};

/// q = exp(-pi K(mu') / K(mu)).
double nome(double mu);

/// Inverse of nome, by bisection in u = log(mu / mu').
double modulus_from_nome(double q);

}  // namespace spreadcert
