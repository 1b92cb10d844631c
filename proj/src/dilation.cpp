#include "spreadcert/dilation.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/sin_pi.hpp>

#include "spreadcert/series_tail.hpp"

namespace spreadcert {

double power_geometric_tail(double power, double ratio, long first, double scale, double shift) {
  if (!(ratio < 1.0)) return std::numeric_limits<double>::infinity();
  if (ratio <= 0.0) return 0.0;
  auto base = [&](long l) { return scale * static_cast<double>(l) + shift; };
  if (!(base(first) > 0.0)) throw Error(ErrorCode::InvalidArgument, "tail base must be positive");
  const double closing = 0.5 * (1.0 + ratio);
  double total = 0.0;
  double term = std::pow(base(first), power) * std::pow(ratio, static_cast<double>(first));
  long l = first;
  for (; l < first + 10'000; ++l) {
    const double step = std::pow(base(l + 1) / base(l), power) * ratio;
    if (step <= closing) {
      // Consecutive ratios are non-increasing, so the remainder is geometric-majorised.
      return total + term / (1.0 - step);
    }
    total += term;
    term *= step;
    if (term == 0.0) return total;
  }
  // Ratio close to 1: f(x) = base(x)^power ratio^x is unimodal, so
  // sum_{k>=l} f(k) <= int_l^inf f + max_{x>=l} f.
  const double c = -std::log(ratio) / scale;
  const double y0 = base(l);
  const double ystar = std::max(y0, power / c);
  const double peak = std::exp(power * std::log(ystar) - c * (ystar - shift));
  const double integral = std::exp(c * shift - (power + 1.0) * std::log(c) - std::log(scale)) *
                          boost::math::tgamma(power + 1.0, c * y0);
  return total + integral + peak;
}

FourierProfile make_profile(std::function<cplx(long)> coeff, std::function<double(double, long)> l1_tail,
                            double alpha) {
  if (alpha < 0.0) throw Error(ErrorCode::InvalidArgument, "Sobolev exponent must be nonnegative");
  if (std::abs(coeff(1) - cplx{1.0}) > 1e-14) {
    throw Error(ErrorCode::InvalidArgument, "profile must be normalised with first coefficient 1");
  }
  return FourierProfile{std::move(coeff), std::move(l1_tail), alpha};
}

FourierProfile single_mode_profile(double alpha) {
  return make_profile([](long j) { return j == 1 ? cplx{1.0} : cplx{0.0}; },
                      [](double, long n) { return n >= 1 ? 0.0 : 1.0; }, alpha);
}

SobolevNorm sobolev_norm(const FourierProfile& profile, long terms) {
  if (terms < 1) throw Error(ErrorCode::InvalidArgument, "need at least one term");
  const double tail = profile.l1_tail(profile.alpha, terms);
  if (!std::isfinite(tail)) throw Error(ErrorCode::DivergentProfile, "profile is not in H^alpha");
  double sum = 0.0;
  for (long n = 1; n <= terms; ++n) {
    sum += std::pow(static_cast<double>(n), 2.0 * profile.alpha) * std::norm(profile.coeff(n));
  }
  SobolevNorm out;
  out.value = std::sqrt(sum);
  // sum of squares of a nonnegative sequence is bounded by the square of its sum
  out.tail_bound = std::sqrt(sum + tail * tail) - out.value;
  return out;
}

double h_basis(long n, double alpha, double x) {
  return std::numbers::sqrt2 * boost::math::sin_pi(static_cast<double>(n) * x) /
         std::pow(static_cast<double>(n), alpha);
}

cplx trajectory_coeff(const std::function<FourierProfile(long)>& profile_of, long j, long n) {
  const FourierProfile profile = profile_of(n);
  return std::pow(static_cast<double>(j), profile.alpha) * profile.coeff(j);
}

DilatedSample dilated_sample(const FourierProfile& profile, long n, std::span<const double> x, long terms) {
  if (n < 1 || terms < 1) throw Error(ErrorCode::InvalidArgument, "dilation index and term count must be positive");
  const double tail = profile.l1_tail(0.0, terms);
  if (!std::isfinite(tail)) throw Error(ErrorCode::DivergentProfile, "sine series does not converge absolutely");
  const double scale = std::pow(static_cast<double>(n), -profile.alpha);

  std::vector<cplx> c(static_cast<std::size_t>(terms));
  for (long j = 1; j <= terms; ++j) c[j - 1] = profile.coeff(j);

  DilatedSample out;
  out.values.reserve(x.size());
  for (double xi : x) {
    if (xi < 0.0 || xi > 1.0) throw Error(ErrorCode::InvalidArgument, "grid points must lie in [0, 1]");
    double acc = 0.0;
    for (long j = 1; j <= terms; ++j) {
      if (c[j - 1] == cplx{0.0}) continue;
      acc += c[j - 1].real() * boost::math::sin_pi(static_cast<double>(j * n) * xi);
    }
    out.values.push_back(std::numbers::sqrt2 * scale * acc);
  }
  out.tail_bound = std::numbers::sqrt2 * scale * tail;
  return out;
}

}  // namespace spreadcert
