#pragma once

#include "spreadcert/common.hpp"

namespace spreadcert {

struct SeriesValue {
  double value = 0.0;       // partial sum
  double tail_bound = 0.0;  // true sum lies in [value, value + tail_bound]

  double upper() const { return value + tail_bound; }
};

/// g^(n) = (1-q) q^l / (1 - q^{2l+1}) for n = 2l+1, zero for even n.
double g_fourier(double q, long n);

/// (1-q) q^{(m-1)/2} / (1 - q^m) for real m >= 1; equals g^(m) at odd integers.
double g_odd_weight(double q, double m);

/// s_alpha(q) = sum_l (2l+1)^alpha g^(2l+1), summed over l < terms.
SeriesValue s_alpha(double q, double alpha, long terms = 500);

/// Weight f(n) = (scale n)^power.
struct PowerWeight {
  double scale = 1.0;
  double power = 0.0;

  double operator()(long n) const;
};

/// L_f(r) = sum_{n<=terms} f(n) r^n / (1 - r^n).
SeriesValue lambert_series(const PowerWeight& f, double r, long terms = 500);

/// sum_{n<=terms} f(n) r^n / (1 - r^{2n}), the odd-even split of L_f(r) - L_f(r^2).
SeriesValue lambert_split(const PowerWeight& f, double r, long terms = 500);

/// s_alpha through L_f(sqrt q) - L_f(q) - L_{f2}(q) + L_{f2}(q^2), f = n^alpha, f2 = (2n)^alpha.
double s_alpha_lambert(double q, double alpha, long terms = 500);

/// sum_n n r^n / (1 - r^{2n}) = K (K - E) / (2 pi^2) at the modulus whose nome is r.
double lambert_n_elliptic(double r);

/// s_1(q) from two elliptic evaluations, at the nomes sqrt(q) and q.
double s1_elliptic(double q);

}  // namespace spreadcert
