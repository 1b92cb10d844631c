#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "spreadcert/certificate.hpp"
#include "spreadcert/dilation.hpp"
#include "spreadcert/lambert.hpp"
#include "spreadcert/spread_toeplitz.hpp"

namespace spreadcert {

// Dilated stationary Gross-Pitaevskii states, parametrised by the nome q of
// the elliptic modulus. The profile has sine coefficients g^(n) (see lambert.hpp).

/// a(q) = p^alpha (1-q) q^{(p-1)/2} / (1 - q^p).
double a_coeff(double q, double alpha, int p);
/// b(q) = p^{2 alpha} (1-q) q^{(p^2-1)/2} / (1 - q^{p^2}).
double b_coeff(double q, double alpha, int p);

/// (a, b) in G_2 for nonnegative reals: b < 1 and a < 1 + b.
bool in_g2(double a, double b);

/// min over the closed disc of |1 + a z + b z^2| for nonnegative (a, b) in G_2.
double min_quadratic(double a, double b);

struct ThresholdResult {
  double value = 0.0;
  double residual = 0.0;  // defining difference at value
  bool single_sign_change = true;
  std::vector<std::string> events;
};

/// Right-hand side 2 + p^alpha (1-q) q^{(p^2-1)/2} / (2 (1 - q^{p^2})).
double r1_rhs(double q, double alpha, int p);
/// Right-hand side 1 + a + b + min_quadratic(a, b).
double r1_tilde_rhs(double q, double alpha, int p);

ThresholdResult solve_r0(double alpha, long terms = 500, const Settings& cfg = {});
ThresholdResult solve_r1(double alpha, int p, long terms = 500, const Settings& cfg = {});
/// Conjectured sharp threshold.
ThresholdResult solve_r1_tilde(double alpha, int p, long terms = 500, const Settings& cfg = {});

/// Neumann-series test sum_{j>=2} ||C_j|| = s_alpha(sup_q) - 1 < 1.
Certificate certify_T0(double sup_q, double alpha, long terms = 500);

/// Two-term structured part A_1 = C_p, A_2 = C_{p^2} with the remaining C_j as perturbation.
Certificate certify_T1(double sup_q, double alpha, int p, long terms = 500, const Settings& cfg = {});

/// Experimental: structured part C_p, ..., C_{p^d} fed to the generic perturbation test.
Certificate certify_Td(double sup_q, double alpha, int p, int d, long terms = 500, const Settings& cfg = {});

FourierProfile gp_profile(double q, double alpha);

/// Symbols 1 + sum_{k<=d} p^{k alpha} g^(p^k) z^k over q in (0, sup_q], or at q_of(n) when given.
SymbolFamily gp_family(int p, double alpha, int d, double sup_q, std::function<double(long)> q_of = {});

/// c_j(n) = j^alpha g^(j) at q_of(n).
SectionCoefficient gp_section(double alpha, std::function<double(long)> q_of);

struct EigenSample {
  std::vector<double> values;
  double tail_bound = 0.0;  // sup-norm truncation error
};

/// u_n(x) = 2^{5/2} pi n sqrt(q) sum_l q^l / (1 - q^{2l+1}) sin((2l+1) n pi x) on a grid.
EigenSample eigenfunction(long n, double mu, std::span<const double> x, long terms = 500);

/// eta_n = 4 n^2 (1 + mu^2) K(mu)^2.
double eigenvalue(long n, double mu);

}  // namespace spreadcert
