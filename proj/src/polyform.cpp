#include "spreadcert/polyform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/tools/minima.hpp>

namespace spreadcert {

Polynomial::Polynomial(std::vector<cplx> coeffs, bool padded)
  : coeffs_(std::move(coeffs)), padded_(padded) {
  if (coeffs_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "polynomial needs at least one coefficient");
  }
  if (!padded_ && coeffs_.size() > 1 && coeffs_.back() == cplx{0.0}) {
    throw Error(ErrorCode::InvalidArgument, "leading coefficient is zero (use Polynomial::padded)");
  }
}

cplx Polynomial::operator()(cplx z) const {
  cplx acc = coeffs_.back();
  for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

cplx Polynomial::derivative(cplx z) const {
  if (coeffs_.size() == 1) return 0.0;
  const std::size_t d = coeffs_.size() - 1;
  cplx acc = static_cast<double>(d) * coeffs_[d];
  for (std::size_t k = d - 1; k >= 1; --k) {
    acc = acc * z + static_cast<double>(k) * coeffs_[k];
  }
  return acc;
}

Polynomial Polynomial::trimmed() const {
  std::vector<cplx> c = coeffs_;
  while (c.size() > 1 && c.back() == cplx{0.0}) c.pop_back();
  return Polynomial(std::move(c));
}

namespace {

// Horner evaluation of p and p' together, plus the running bound
// sum |c_k| |z|^k used for the rounding-error stopping test.
struct HornerValue {
  cplx value;
  cplx deriv;
  double magnitude;
};

HornerValue horner(std::span<const cplx> c, cplx z) {
  const double r = std::abs(z);
  cplx v = c.back();
  cplx dv = 0.0;
  double m = std::abs(c.back());
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    dv = dv * z + v;
    v = v * z + c[k];
    m = m * r + std::abs(c[k]);
  }
  return {v, dv, m};
}

}  // namespace

RootSet roots(const Polynomial& p, const Settings& cfg) {
  const int d = p.degree();
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "roots() needs degree >= 1");
  if (p[d] == cplx{0.0}) throw Error(ErrorCode::InvalidArgument, "roots() needs a nonzero leading coefficient");

  std::vector<cplx> c(p.coeffs().begin(), p.coeffs().end());
  const cplx lead = c.back();
  for (auto& x : c) x /= lead;

  RootSet out;
  if (d == 1) {
    out.roots = {-c[0]};
    out.residual = std::abs(p(out.roots[0]));
    return out;
  }

  double bound = 0.0;
  for (int k = 0; k < d; ++k) bound = std::max(bound, std::abs(c[k]));
  const double radius = 1.0 + bound;

  std::vector<cplx> z(d);
  for (int k = 0; k < d; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / d + 0.4;
    z[k] = std::polar(radius, theta);
  }

  constexpr double eps = std::numeric_limits<double>::epsilon();
  std::vector<bool> frozen(d, false);
  int iter = 0;
  for (; iter < cfg.root_max_iter; ++iter) {
    double max_step = 0.0;
    bool all_frozen = true;
    for (int i = 0; i < d; ++i) {
      if (frozen[i]) continue;
      const HornerValue h = horner(c, z[i]);
      // Value at the rounding-error level: the root is as accurate as double allows.
      if (std::abs(h.value) <= 4.0 * eps * h.magnitude) {
        frozen[i] = true;
        continue;
      }
      all_frozen = false;
      const cplx ratio = h.value / h.deriv;
      cplx repulsion = 0.0;
      for (int j = 0; j < d; ++j) {
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      }
      const cplx step = ratio / (1.0 - ratio * repulsion);
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(z[i])));
      if (std::abs(step) <= cfg.root_tol * std::max(1.0, std::abs(z[i]))) frozen[i] = true;
    }
    if (all_frozen || max_step <= cfg.root_tol) break;
  }
  if (iter == cfg.root_max_iter) {
    throw Error(ErrorCode::NonConvergence, "Aberth iteration hit the iteration cap");
  }

  out.roots = std::move(z);
  out.iterations = iter;
  for (const auto& r : out.roots) out.residual = std::max(out.residual, std::abs(p(r)));
  return out;
}

std::vector<cplx> elementary_symmetric(std::span<const cplx> lambdas) {
  // e[k] after processing the first m entries is pi_{m,k}.
  std::vector<cplx> e(lambdas.size() + 1, cplx{0.0});
  e[0] = 1.0;
  std::size_t m = 0;
  for (const cplx& lam : lambdas) {
    ++m;
    for (std::size_t k = m; k >= 1; --k) e[k] += lam * e[k - 1];
  }
  return {e.begin() + 1, e.end()};
}

Polynomial conjugate_poly(const Polynomial& p) {
  std::vector<cplx> q(p.coeffs().rbegin(), p.coeffs().rend());
  for (auto& x : q) x = std::conj(x);
  return Polynomial(std::move(q), true);
}

DiscMinimum disc_minimum(const Polynomial& p_in, const Settings& cfg) {
  const Polynomial p = p_in.trimmed();
  DiscMinimum out;
  if (p.degree() == 0) {
    out.value = std::abs(p[0]);
    return out;
  }

  const RootSet rs = roots(p, cfg);
  for (const cplx& r : rs.roots) {
    const double m = std::abs(r);
    if (m <= 1.0 + cfg.boundary_tol) {
      out.value = 0.0;
      out.argmin = r;
      out.root_in_disc = true;
      out.near_boundary = out.near_boundary || m >= 1.0 - cfg.boundary_tol;
    }
  }
  if (out.root_in_disc) return out;

  // No zeros in the closed disc: 1/p is analytic there, so the minimum of |p|
  // lies on the unit circle.
  const int n = std::max(cfg.angle_grid, 8);
  const double h = 2.0 * std::numbers::pi / n;
  auto modulus = [&](double theta) { return std::abs(p(std::polar(1.0, theta))); };
  std::vector<double> f(n);
  for (int k = 0; k < n; ++k) f[k] = modulus(k * h);

  std::vector<int> local;
  for (int k = 0; k < n; ++k) {
    if (f[k] <= f[(k + n - 1) % n] && f[k] <= f[(k + 1) % n]) local.push_back(k);
  }
  std::sort(local.begin(), local.end(), [&](int a, int b) { return f[a] < f[b]; });
  if (local.size() > 3) local.resize(3);

  int best_k = static_cast<int>(std::min_element(f.begin(), f.end()) - f.begin());
  double best_theta = best_k * h;
  double best = f[best_k];
  constexpr int bits = std::numeric_limits<double>::digits / 2;
  for (int k : local) {
    const auto [theta, val] = boost::math::tools::brent_find_minima(modulus, (k - 1) * h, (k + 1) * h, bits);
    if (val < best) {
      best = val;
      best_theta = theta;
    }
  }
  out.value = best;
  out.argmin = std::polar(1.0, best_theta);
  return out;
}

}  // namespace spreadcert
