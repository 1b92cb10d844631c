#include "spreadcert/elliptic.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace spreadcert {

namespace {

constexpr double kMaxLogRatio = 700.0;

// mu and mu' parametrised by u = log(mu / mu'), written so neither underflows early.
void split_modulus(double u, double& mu, double& mu_prime) {
  if (u >= 0.0) {
    const double t = std::exp(-u);
    const double s = std::sqrt(1.0 + t * t);
    mu = 1.0 / s;
    mu_prime = t / s;
  } else {
    const double t = std::exp(u);
    const double s = std::sqrt(1.0 + t * t);
    mu = t / s;
    mu_prime = 1.0 / s;
  }
}

double log_nome(double mu, double mu_prime) {
  const double k = complete_elliptic(mu, mu_prime).K;
  const double kp = complete_elliptic(mu_prime, mu).K;
  return -std::numbers::pi * kp / k;
}

void modulus_pair_from_nome(double q, double& mu, double& mu_prime) {
  if (!(q > 0.0 && q < 1.0)) throw Error(ErrorCode::ModulusOutOfRange, "nome must lie in (0, 1)");
  const double target = std::log(q);
  auto f = [&](double u) {
    split_modulus(u, mu, mu_prime);
    return log_nome(mu, mu_prime) - target;
  };
  double lo = -kMaxLogRatio;
  double hi = kMaxLogRatio;
  if (f(lo) > 0.0 || f(hi) < 0.0) throw Error(ErrorCode::ModulusOutOfRange, "nome outside the representable range");
  // log q is increasing in u
  for (int i = 0; i < 200 && hi - lo > 1e-15 * (1.0 + std::abs(lo)); ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  split_modulus(0.5 * (lo + hi), mu, mu_prime);
}

}  // namespace

EllipticIntegrals complete_elliptic(double mu, double mu_prime) {
  // mu may round to 1 when mu' is tiny; only mu' > 0 matters for K.
  if (!(mu >= 0.0 && mu <= 1.0) || !(mu_prime > 0.0 && mu_prime <= 1.0)) {
    throw Error(ErrorCode::ModulusOutOfRange, "modulus must lie in [0, 1)");
  }
  double a = 1.0;
  double b = mu_prime;
  double c = mu;
  double weight = 0.5;
  double sum = weight * c * c;
  // a - b can stall at one ulp; once c is below epsilon the next term is below rounding
  for (int i = 0; i < 64 && std::abs(c) > std::numeric_limits<double>::epsilon() * a; ++i) {
    const double an = 0.5 * (a + b);
    c = 0.5 * (a - b);
    b = std::sqrt(a * b);
    a = an;
    weight *= 2.0;
    sum += weight * c * c;
  }
  EllipticIntegrals out;
  out.K = std::numbers::pi / (2.0 * a);
  out.E = out.K * (1.0 - sum);
  return out;
}

EllipticIntegrals complete_elliptic(double mu) {
  if (!(mu >= 0.0 && mu < 1.0)) throw Error(ErrorCode::ModulusOutOfRange, "modulus must lie in [0, 1)");
  return complete_elliptic(mu, std::sqrt((1.0 - mu) * (1.0 + mu)));
}

double nome(double mu) {
  if (!(mu > 0.0 && mu < 1.0)) throw Error(ErrorCode::ModulusOutOfRange, "modulus must lie in (0, 1)");
  return std::exp(log_nome(mu, std::sqrt((1.0 - mu) * (1.0 + mu))));
}

double modulus_from_nome(double q) {
  double mu = 0.0;
  double mu_prime = 0.0;
  modulus_pair_from_nome(q, mu, mu_prime);
  return mu;
}

EllipticPoint EllipticPoint::from_modulus(double mu) {
  if (!(mu > 0.0 && mu < 1.0)) throw Error(ErrorCode::ModulusOutOfRange, "modulus must lie in (0, 1)");
  const auto ke = complete_elliptic(mu);
  return {mu, nome(mu), ke.K, ke.E};
}

EllipticPoint EllipticPoint::from_nome(double q) {
  double mu = 0.0;
  double mu_prime = 0.0;
  modulus_pair_from_nome(q, mu, mu_prime);
  const auto ke = complete_elliptic(mu, mu_prime);
  return {mu, q, ke.K, ke.E};
}

}  // namespace spreadcert
