#include "spreadcert/weierstrass.hpp"

#include <cmath>
#include <limits>

namespace spreadcert {

double WeierstrassSpec::nu() const { return mu * std::pow(static_cast<double>(p), alpha); }

void WeierstrassSpec::validate() const {
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "p must be an integer >= 2");
  if (alpha < 0.0) throw Error(ErrorCode::InvalidArgument, "alpha must be nonnegative");
  if (!(mu > 0.0)) throw Error(ErrorCode::InvalidArgument, "mu must be positive");
}

int lacunary_level(long k, int p) {
  if (k < 1) return -1;
  int level = 0;
  while (k % p == 0) {
    k /= p;
    ++level;
  }
  return k == 1 ? level : -1;
}

double w_fourier(double lambda, int p, long k) {
  const int l = lacunary_level(k, p);
  return l < 0 ? 0.0 : std::pow(lambda, l);
}

bool membership_space(double lambda, int p, double alpha) {
  return lambda < std::pow(static_cast<double>(p), -alpha);
}

FourierProfile weierstrass_profile(double lambda, int p, double alpha) {
  if (!(lambda > 0.0 && lambda < 1.0)) throw Error(ErrorCode::InvalidArgument, "lambda must lie in (0, 1)");
  auto coeff = [lambda, p](long j) { return cplx{w_fourier(lambda, p, j)}; };
  auto tail = [lambda, p](double beta, long n) {
    // sum over p^l > n of (p^beta lambda)^l
    const double x = std::pow(static_cast<double>(p), beta) * lambda;
    if (x >= 1.0) return std::numeric_limits<double>::infinity();
    long level = 0;
    for (long pk = 1; pk <= n; pk *= p) ++level;
    return std::pow(x, static_cast<double>(level)) / (1.0 - x);
  };
  return make_profile(coeff, tail, alpha);
}

double s1_tail_bound(double nu, long d) { return std::pow(nu, static_cast<double>(d + 1)) / (1.0 - nu); }

double s1_symbol_bound(double nu, long d) { return (1.0 - std::pow(nu, static_cast<double>(d + 1))) / (1.0 + nu); }

long minimal_degree_S1(double nu) {
  if (!(nu > 0.0 && nu < 1.0)) throw Error(ErrorCode::InvalidArgument, "nu must lie in (0, 1)");
  auto holds = [nu](long d) { return s1_tail_bound(nu, d) < s1_symbol_bound(nu, d); };
  // Starting guess from 2 nu^{d+1} < 1 - nu; the scan below decides.
  const double guess = std::log(0.5 * (1.0 - nu)) / std::log(nu) - 1.0;
  if (!std::isfinite(guess) || guess > 1e9) throw Error(ErrorCode::InvalidArgument, "nu is too close to 1");
  long d = std::max(1L, static_cast<long>(std::floor(guess)) - 3);
  while (d > 1 && holds(d - 1)) --d;
  while (!holds(d)) ++d;
  return d;
}

SymbolFamily weierstrass_family(int p, double alpha, double mu, long d, std::function<double(long)> lambda_of) {
  const double scale = std::pow(static_cast<double>(p), alpha);
  const double nu = mu * scale;
  if (!lambda_of) lambda_of = [mu](long) { return mu; };
  SymbolFamily f;
  f.kind = SymbolKind::WeierstrassGeometric;
  f.period = p;
  f.degree = static_cast<int>(d);
  f.coeff = [lambda_of, scale](long n, int k) { return cplx{std::pow(lambda_of(n) * scale, k)}; };
  for (long k = 1; k <= d; ++k) f.envelope.push_back(std::pow(nu, static_cast<double>(k)));
  // min_{|z|<=1} |sum_k (t z)^k| is a minimum over the disc of radius t, hence non-increasing in t.
  f.parametric = ParametricEnvelope{[d](double t) {
                                      std::vector<cplx> c(static_cast<std::size_t>(d) + 1);
                                      double power = 1.0;
                                      for (auto& x : c) {
                                        x = power;
                                        power *= t;
                                      }
                                      return Polynomial::padded(std::move(c));
                                    },
                                    nu, true};
  return f;
}

SectionCoefficient weierstrass_section(int p, double alpha, std::function<double(long)> lambda_of) {
  const double scale = std::pow(static_cast<double>(p), alpha);
  return [p, scale, lambda_of = std::move(lambda_of)](long j, long n) {
    const int l = lacunary_level(j, p);
    return l < 0 ? cplx{0.0} : cplx{std::pow(lambda_of(n) * scale, l)};
  };
}

namespace {

void record_spec(Certificate& cert, const WeierstrassSpec& spec) {
  cert.parameters["family"] = "weierstrass";
  cert.parameters["p"] = spec.p;
  cert.parameters["alpha"] = spec.alpha;
  cert.parameters["mu"] = spec.mu;
  cert.parameters["region"] = spec.region == WeierstrassRegion::S0 ? "S0" : "S1";
}

}  // namespace

Certificate certify_S0(const WeierstrassSpec& spec) {
  spec.validate();
  const double nu = spec.nu();
  const double sum = nu < 1.0 ? nu / (1.0 - nu) : std::numeric_limits<double>::infinity();
  Certificate cert;
  cert.kind = CertificateKind::S0;
  record_spec(cert, spec);
  cert.margin("nu", nu).margin("geometric_sum", sum).margin("margin", 1.0 - sum);
  cert.verdict = sum < 1.0 ? Verdict::Certified : Verdict::NotCertified;
  if (!cert.certified()) cert.notes.emplace_back("mu p^alpha >= 1/2: outside S0");
  return cert;
}

Certificate certify_S1(const WeierstrassSpec& spec, const Settings& cfg) {
  spec.validate();
  const double nu = spec.nu();
  Certificate cert;
  cert.kind = CertificateKind::S1;
  record_spec(cert, spec);
  cert.margin("nu", nu);
  cert.notes.emplace_back("attests lambda_n = lambda_{pn} for all n; eventual periodicity is not covered");
  if (!(nu < 1.0)) {
    cert.verdict = Verdict::NotCertified;
    cert.notes.emplace_back("mu p^alpha >= 1: W_lambda leaves H^alpha");
    return cert;
  }
  const long d = minimal_degree_S1(nu);
  const double lhs = s1_tail_bound(nu, d);
  const double rhs = s1_symbol_bound(nu, d);
  cert.parameters["d"] = d;
  cert.margin("tail_bound", lhs).margin("symbol_lower_bound", rhs).margin("proof_margin", rhs - lhs);

  const SymbolFamily family = weierstrass_family(spec.p, spec.alpha, spec.mu, d);
  TailSpec tail;
  tail.sup_b = [p = spec.p, nu, d](long j) {
    const int l = lacunary_level(j, p);
    return l > d ? std::pow(nu, l) : 0.0;
  };
  tail.tail_sum = lhs;
  const Certificate exact = perturbation_certificate(family, tail, {}, cfg);
  cert.margin("exact_symbol_inf", exact.margin("symbol_inf")).margin("exact_margin", exact.margin("margin"));
  cert.mode = exact.mode;
  cert.verdict = (lhs < rhs && exact.certified()) ? Verdict::Certified : Verdict::NotCertified;
  return cert;
}

double dirichlet_pole_abscissa(double lambda, int p) {
  if (!(lambda > 0.0 && lambda < 1.0)) throw Error(ErrorCode::InvalidArgument, "lambda must lie in (0, 1)");
  return std::log(lambda) / std::log(static_cast<double>(p));
}

cplx weierstrass_dirichlet(double lambda, int p, cplx s) {
  const cplx ps = std::exp(s * std::log(static_cast<double>(p)));
  return ps / (ps - lambda);
}

}  // namespace spreadcert
