#pragma once

#include <functional>
#include <span>
#include <vector>

#include "spreadcert/common.hpp"

namespace spreadcert {

/**
 * Sine-series profile f with coefficients f^(j) = sqrt(2) int_0^1 f(x) sin(j pi x) dx,
 * normalised so that f^(1) = 1, together with a decay certificate.
 *
 * `l1_tail(beta, n)` must bound sum_{j > n} j^beta |f^(j)| from above and return
 * +inf when that sum diverges. Every truncation error reported by this module
 * is derived from it.
 */
struct FourierProfile {
  std::function<cplx(long j)> coeff;
  std::function<double(double beta, long n)> l1_tail;
  double alpha = 0.0;  // Sobolev exponent of the ambient space H^alpha
};

/// Validates the normalisation f^(1) = 1.
FourierProfile make_profile(std::function<cplx(long)> coeff, std::function<double(double, long)> l1_tail,
                            double alpha);

/// f^(1) = 1, all other coefficients zero.
FourierProfile single_mode_profile(double alpha);

struct SobolevNorm {
  double value = 0.0;       // sqrt(sum_{n<=terms} n^{2 alpha} |f^(n)|^2)
  double tail_bound = 0.0;  // true norm <= value + tail_bound
};

SobolevNorm sobolev_norm(const FourierProfile& profile, long terms);

/// h_n(x) = sqrt(2) sin(n pi x) / n^alpha, orthonormal in H^alpha.
double h_basis(long n, double alpha, double x);

/// (n,n) entry of C_j in the h-basis: j^alpha f_{s_n}^(j).
cplx trajectory_coeff(const std::function<FourierProfile(long n)>& profile_of, long j, long n);

struct DilatedSample {
  std::vector<double> values;
  double tail_bound = 0.0;  // sup-norm truncation error
};

/// g_n(x) = n^{-alpha} f(n x) on a grid in [0, 1], using the odd 2-periodic extension of f.
DilatedSample dilated_sample(const FourierProfile& profile, long n, std::span<const double> x, long terms);

}  // namespace spreadcert
