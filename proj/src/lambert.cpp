#include "spreadcert/lambert.hpp"

#include <cmath>
#include <numbers>

#include "spreadcert/elliptic.hpp"
#include "spreadcert/series_tail.hpp"

namespace spreadcert {

namespace {

void check_unit_interval(double x, const char* what) {
  if (!(x > 0.0 && x < 1.0)) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must lie in (0, 1)");
}

}  // namespace

double g_odd_weight(double q, double m) {
  check_unit_interval(q, "q");
  const double lq = std::log(q);
  // expm1 keeps (1-q)/(1-q^m) accurate as q -> 1
  return std::expm1(lq) / std::expm1(m * lq) * std::exp(0.5 * (m - 1.0) * lq);
}

double g_fourier(double q, long n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "index must be positive");
  check_unit_interval(q, "q");
  return n % 2 == 0 ? 0.0 : g_odd_weight(q, static_cast<double>(n));
}

SeriesValue s_alpha(double q, double alpha, long terms) {
  check_unit_interval(q, "q");
  if (alpha < 0.0) throw Error(ErrorCode::InvalidArgument, "alpha must be nonnegative");
  if (terms < 1) throw Error(ErrorCode::InvalidArgument, "need at least one term");
  const double lq = std::log(q);
  const double head = std::expm1(lq);
  SeriesValue out;
  for (long l = 0; l < terms; ++l) {
    const double m = 2.0 * static_cast<double>(l) + 1.0;
    const double term = std::pow(m, alpha) * head / std::expm1(m * lq) * std::exp(static_cast<double>(l) * lq);
    if (term == 0.0) break;
    out.value += term;
  }
  // (1-q)/(1-q^{2l+1}) <= 1
  out.tail_bound = power_geometric_tail(alpha, q, terms, 2.0, 1.0);
  return out;
}

double PowerWeight::operator()(long n) const { return std::pow(scale * static_cast<double>(n), power); }

SeriesValue lambert_series(const PowerWeight& f, double r, long terms) {
  check_unit_interval(r, "r");
  const double lr = std::log(r);
  SeriesValue out;
  for (long n = 1; n <= terms; ++n) {
    const double x = static_cast<double>(n) * lr;
    out.value += f(n) * std::exp(x) / -std::expm1(x);
  }
  out.tail_bound = std::pow(f.scale, f.power) * power_geometric_tail(f.power, r, terms + 1) / (1.0 - r);
  return out;
}

SeriesValue lambert_split(const PowerWeight& f, double r, long terms) {
  check_unit_interval(r, "r");
  const double lr = std::log(r);
  SeriesValue out;
  for (long n = 1; n <= terms; ++n) {
    const double x = static_cast<double>(n) * lr;
    out.value += f(n) * std::exp(x) / -std::expm1(2.0 * x);
  }
  out.tail_bound = std::pow(f.scale, f.power) * power_geometric_tail(f.power, r, terms + 1) / (1.0 - r * r);
  return out;
}

double s_alpha_lambert(double q, double alpha, long terms) {
  check_unit_interval(q, "q");
  const PowerWeight f{1.0, alpha};
  const PowerWeight f2{2.0, alpha};
  const double sq = std::sqrt(q);
  const double odd_even = lambert_series(f, sq, terms).value - lambert_series(f, q, terms).value;
  const double even = lambert_series(f2, q, terms).value - lambert_series(f2, q * q, terms).value;
  return -std::expm1(std::log(q)) / sq * (odd_even - even);
}

double lambert_n_elliptic(double r) {
  const EllipticPoint pt = EllipticPoint::from_nome(r);
  return pt.K * (pt.K - pt.E) / (2.0 * std::numbers::pi * std::numbers::pi);
}

double s1_elliptic(double q) {
  check_unit_interval(q, "q");
  const double sq = std::sqrt(q);
  // odd n only: S(r) - 2 S(r^2) at r = sqrt(q)
  return -std::expm1(std::log(q)) / sq * (lambert_n_elliptic(sq) - 2.0 * lambert_n_elliptic(q));
}

}  // namespace spreadcert
