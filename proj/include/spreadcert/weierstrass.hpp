#pragma once

#include <functional>

#include "spreadcert/certificate.hpp"
#include "spreadcert/dilation.hpp"
#include "spreadcert/spread_toeplitz.hpp"

namespace spreadcert {

// Dilated Weierstrass families w_n(x) = n^{-alpha} W_{lambda_n}(n x) with
// W_lambda(x) = sqrt(2) sum_j lambda^j sin(p^j pi x).

enum class WeierstrassRegion { S0, S1 };

struct WeierstrassSpec {
  int p = 2;
  double alpha = 0.0;
  double mu = 0.0;  // sup_n lambda_n
  WeierstrassRegion region = WeierstrassRegion::S0;

  double nu() const;  // mu * p^alpha
  void validate() const;
};

/// l if k = p^l for some l >= 0, otherwise -1.
int lacunary_level(long k, int p);

/// W_lambda^(k): lambda^l when k = p^l, else 0.
double w_fourier(double lambda, int p, long k);

/// W_lambda in H^alpha iff lambda < p^{-alpha}.
bool membership_space(double lambda, int p, double alpha);

FourierProfile weierstrass_profile(double lambda, int p, double alpha);

/// Sum of the discarded coefficient norms: nu^{d+1} / (1 - nu).
double s1_tail_bound(double nu, long d);
/// Lower bound for the truncated geometric symbol: (1 - nu^{d+1}) / (1 + nu).
double s1_symbol_bound(double nu, long d);
/// Smallest d >= 1 with s1_tail_bound < s1_symbol_bound.
long minimal_degree_S1(double nu);

/// alpha_n(z) = 1 + sum_{k<=d} (lambda_n p^alpha)^k z^k, with envelope parameter nu.
/// Without an explicit sequence lambda_n = mu for every n.
SymbolFamily weierstrass_family(int p, double alpha, double mu, long d,
                                std::function<double(long)> lambda_of = {});

/// c_j(n) for the section of T: (lambda_n p^alpha)^l if j = p^l, else 0.
SectionCoefficient weierstrass_section(int p, double alpha, std::function<double(long)> lambda_of);

/// Neumann-series certificate: sum_{l>=1} nu^l < 1.
Certificate certify_S0(const WeierstrassSpec& spec);

/// Perturbation certificate with the minimal truncation degree d, rerun through
/// the generic perturbation test with the exact truncated symbol.
Certificate certify_S1(const WeierstrassSpec& spec, const Settings& cfg = {});

/// Re(s) = log_p lambda, the pole line of p^s / (p^s - lambda).
double dirichlet_pole_abscissa(double lambda, int p);
cplx weierstrass_dirichlet(double lambda, int p, cplx s);

}  // namespace spreadcert
