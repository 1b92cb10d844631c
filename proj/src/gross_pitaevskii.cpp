#include "spreadcert/gross_pitaevskii.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/math/special_functions/sin_pi.hpp>
#include <boost/math/tools/roots.hpp>

#include "spreadcert/elliptic.hpp"
#include "spreadcert/polydisc.hpp"
#include "spreadcert/series_tail.hpp"

namespace spreadcert {

namespace {

constexpr double kQLow = 1e-9;
constexpr double kQHigh = 1.0 - 1e-9;

void check_params(double alpha, int p) {
  if (alpha < 0.0) throw Error(ErrorCode::InvalidArgument, "alpha must be nonnegative");
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "p must be an integer >= 2");
}

void check_q(double q) {
  if (!(q > 0.0 && q < 1.0)) throw Error(ErrorCode::InvalidArgument, "q must lie in (0, 1)");
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

long ipow(long base, int k) {
  long out = 1;
  while (k-- > 0) out *= base;
  return out;
}

// Root of an increasing difference on [lo, hi]: coarse prescan, then bisection.
ThresholdResult solve_increasing(const std::function<double(double)>& diff, double lo, double hi,
                                 const Settings& cfg, std::vector<std::string> events) {
  const int n = std::max(cfg.prescan_points, 2);
  std::vector<double> xs(n);
  std::vector<double> fs(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = lo + (hi - lo) * i / (n - 1);
    fs[i] = diff(xs[i]);
  }
  if (!(fs.front() < 0.0 && fs.back() > 0.0)) {
    throw Error(ErrorCode::BracketFailure, "difference does not change sign on [" + fmt(lo) + ", " + fmt(hi) + "]");
  }
  ThresholdResult out;
  int changes = 0;
  int first = -1;
  bool monotone = true;
  for (int i = 1; i < n; ++i) {
    if ((fs[i - 1] < 0.0) != (fs[i] < 0.0)) {
      ++changes;
      if (first < 0) first = i;
    }
    if (fs[i] < fs[i - 1]) monotone = false;
  }
  out.single_sign_change = changes == 1;
  if (changes != 1) events.push_back(std::to_string(changes) + " sign changes on the prescan grid");
  if (!monotone) events.push_back("difference is not monotone on the prescan grid");

  std::uintmax_t iters = static_cast<std::uintmax_t>(cfg.bisection_max_iter);
  const double tol = cfg.bisection_tol;
  const auto [a, b] = boost::math::tools::bisect(
      [&](double q) { return diff(q); }, xs[first - 1], xs[first],
      [tol](double l, double r) { return r - l <= tol; }, iters);
  if (b - a > tol) events.push_back("bisection stopped at the iteration cap");
  out.value = 0.5 * (a + b);
  out.residual = diff(out.value);
  out.events = std::move(events);
  return out;
}

void record_gp(Certificate& cert, double sup_q, double alpha, int p, long terms) {
  cert.parameters["family"] = "gp";
  cert.parameters["p"] = p;
  cert.parameters["alpha"] = alpha;
  cert.parameters["sup_q"] = sup_q;
  cert.parameters["terms"] = terms;
}

// Upper bound for sum_{j >= 2, j not in skip} ||C_j|| at sup_q.
double gp_tail_sum(double sup_q, double alpha, int p, int d, long terms) {
  double tail = s_alpha(sup_q, alpha, terms).upper() - 1.0;
  for (int k = 1; k <= d; ++k) {
    const double j = static_cast<double>(ipow(p, k));
    tail -= std::pow(j, alpha) * g_fourier(sup_q, ipow(p, k));
  }
  return std::max(tail, 0.0);
}

TailSpec gp_tail(double sup_q, double alpha, int p, int d, long terms) {
  TailSpec tail;
  tail.sup_b = [sup_q, alpha, p, d](long j) {
    for (int k = 1; k <= d; ++k) {
      if (j == ipow(p, k)) return 0.0;
    }
    return std::pow(static_cast<double>(j), alpha) * g_fourier(sup_q, j);
  };
  tail.tail_sum = gp_tail_sum(sup_q, alpha, p, d, terms);
  return tail;
}

}  // namespace

double a_coeff(double q, double alpha, int p) {
  check_params(alpha, p);
  return std::pow(static_cast<double>(p), alpha) * g_odd_weight(q, p);
}

double b_coeff(double q, double alpha, int p) {
  check_params(alpha, p);
  const double p2 = static_cast<double>(p) * p;
  return std::pow(static_cast<double>(p), 2.0 * alpha) * g_odd_weight(q, p2);
}

bool in_g2(double a, double b) { return b < 1.0 && a < 1.0 + b; }

double min_quadratic(double a, double b) {
  if (!(a >= 0.0 && b >= 0.0)) throw Error(ErrorCode::InvalidArgument, "coefficients must be nonnegative");
  if (!in_g2(a, b)) throw Error(ErrorCode::NotInG2, "(" + fmt(a) + ", " + fmt(b) + ") is not in G_2");
  if (b == 0.0) return 1.0 - a;
  if (a * (b + 1.0) / (4.0 * b) >= 1.0) return 1.0 - a + b;
  return (1.0 - b) * std::sqrt(1.0 - a * a / (4.0 * b));
}

double r1_rhs(double q, double alpha, int p) {
  return 2.0 + b_coeff(q, alpha, p) / (2.0 * std::pow(static_cast<double>(p), alpha));
}

double r1_tilde_rhs(double q, double alpha, int p) {
  const double a = a_coeff(q, alpha, p);
  const double b = b_coeff(q, alpha, p);
  return 1.0 + a + b + min_quadratic(a, b);
}

ThresholdResult solve_r0(double alpha, long terms, const Settings& cfg) {
  check_params(alpha, 2);
  auto diff = [=](double q) { return s_alpha(q, alpha, terms).value - 2.0; };
  return solve_increasing(diff, kQLow, kQHigh, cfg, {});
}

ThresholdResult solve_r1(double alpha, int p, long terms, const Settings& cfg) {
  check_params(alpha, p);
  auto diff = [=](double q) { return s_alpha(q, alpha, terms).value - r1_rhs(q, alpha, p); };
  return solve_increasing(diff, kQLow, kQHigh, cfg, {});
}

ThresholdResult solve_r1_tilde(double alpha, int p, long terms, const Settings& cfg) {
  check_params(alpha, p);
  std::vector<std::string> events{"conjectural"};
  auto inside = [=](double q) { return in_g2(a_coeff(q, alpha, p), b_coeff(q, alpha, p)); };
  double hi = kQHigh;
  if (!inside(hi)) {
    // (a, b) grows with q, so the admissible nomes form an interval (0, q*)
    double lo = kQLow;
    if (!inside(lo)) throw Error(ErrorCode::NotInG2, "(a, b) is outside G_2 for every q");
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
      const double mid = 0.5 * (lo + hi);
      (inside(mid) ? lo : hi) = mid;
    }
    hi = lo;
    events.push_back("bracket shrunk to q <= " + fmt(hi) + " where (a, b) leaves G_2");
  }
  auto diff = [=](double q) { return s_alpha(q, alpha, terms).value - r1_tilde_rhs(q, alpha, p); };
  return solve_increasing(diff, kQLow, hi, cfg, std::move(events));
}

Certificate certify_T0(double sup_q, double alpha, long terms) {
  check_q(sup_q);
  const SeriesValue s = s_alpha(sup_q, alpha, terms);
  Certificate cert;
  cert.kind = CertificateKind::T0;
  record_gp(cert, sup_q, alpha, 0, terms);
  cert.parameters.erase("p");
  cert.margin("s_alpha", s.value).margin("s_alpha_tail", s.tail_bound).margin("neumann_sum", s.upper() - 1.0);
  cert.margin("margin", 2.0 - s.upper());
  cert.verdict = s.upper() < 2.0 ? Verdict::Certified : Verdict::NotCertified;
  return cert;
}

Certificate certify_T1(double sup_q, double alpha, int p, long terms, const Settings& cfg) {
  check_q(sup_q);
  check_params(alpha, p);
  const double pa = std::pow(static_cast<double>(p), alpha);
  const double a = a_coeff(sup_q, alpha, p);
  const double b = b_coeff(sup_q, alpha, p);
  const SeriesValue s = s_alpha(sup_q, alpha, terms);
  const double tail = s.upper() - 1.0 - a - b;
  const double bound = 1.0 - a - b * (1.0 - 1.0 / (2.0 * pa));

  Certificate cert;
  cert.kind = CertificateKind::T1;
  record_gp(cert, sup_q, alpha, p, terms);
  cert.margin("a", a).margin("b", b).margin("s_alpha", s.value).margin("s_alpha_tail", s.tail_bound);
  cert.margin("tail", tail).margin("symbol_lower_bound", bound);

  const double margin_tail = bound - tail;
  const double margin_g2 = std::min(1.0 - b, 1.0 + b - a);
  const std::vector<cplx> ab{a, b};
  const MembershipVerdict oracle = in_polydisc_roots(ab, cfg);
  // (1 - a + b) - bound and (1 - b)(1 - a/2) - bound, expanded: b is often
  // far below rounding of 1 at small q
  const double branch_edge = b * (2.0 - 1.0 / (2.0 * pa));
  const double branch_interior = 0.5 * a * (1.0 + b) - b / (2.0 * pa);
  cert.margin("margin", margin_tail).margin("g2_margin", margin_g2).margin("root_oracle_margin", oracle.margin);
  cert.margin("branch_edge_margin", branch_edge).margin("branch_interior_margin", branch_interior);

  const bool g2_ok = margin_g2 > 0.0 && oracle.inside;
  if ((margin_g2 > 0.0) != oracle.inside && !oracle.indeterminate) {
    cert.notes.emplace_back("closed-form G_2 test and root oracle disagree");
  }

  if (p % 2 == 0) {
    cert.notes.emplace_back("g^(p) and g^(p^2) vanish for even p; a and b follow the closed form only");
  }
  if (g2_ok) {
    const Certificate exact = perturbation_certificate(gp_family(p, alpha, 2, sup_q), gp_tail(sup_q, alpha, p, 2, terms),
                                                       {}, cfg);
    cert.margin("exact_symbol_inf", exact.margin("symbol_inf")).margin("exact_margin", exact.margin("margin"));
  }

  const bool ok = margin_tail > 0.0 && g2_ok && branch_edge > 0.0 && branch_interior > 0.0;
  cert.verdict = ok ? Verdict::Certified : Verdict::NotCertified;
  return cert;
}

Certificate certify_Td(double sup_q, double alpha, int p, int d, long terms, const Settings& cfg) {
  check_q(sup_q);
  check_params(alpha, p);
  if (d < 1 || d > 8) throw Error(ErrorCode::InvalidArgument, "degree must lie in 1..8");
  Certificate cert =
      perturbation_certificate(gp_family(p, alpha, d, sup_q), gp_tail(sup_q, alpha, p, d, terms), {}, cfg);
  record_gp(cert, sup_q, alpha, p, terms);
  cert.parameters["d"] = d;
  cert.notes.emplace_back("experimental: no closed-form threshold backs this verdict");
  return cert;
}

FourierProfile gp_profile(double q, double alpha) {
  check_q(q);
  auto coeff = [q](long j) { return cplx{g_fourier(q, j)}; };
  // g^(2l+1) <= q^l; j > n means l >= floor((n+1)/2)
  auto tail = [q](double beta, long n) { return power_geometric_tail(beta, q, (n + 1) / 2, 2.0, 1.0); };
  return make_profile(coeff, tail, alpha);
}

SymbolFamily gp_family(int p, double alpha, int d, double sup_q, std::function<double(long)> q_of) {
  check_q(sup_q);
  check_params(alpha, p);
  auto coeff_at = [p, alpha](double q, int k) {
    const long j = ipow(p, k);
    return std::pow(static_cast<double>(j), alpha) * g_fourier(q, j);
  };
  SymbolFamily f;
  f.kind = SymbolKind::GrossPitaevskii;
  f.period = p;
  f.degree = d;
  for (int k = 1; k <= d; ++k) f.envelope.push_back(coeff_at(sup_q, k));
  if (q_of) {
    f.coeff = [coeff_at, q_of](long n, int k) { return cplx{coeff_at(q_of(n), k)}; };
    return f;
  }
  f.coeff = [coeff_at, sup_q](long, int k) { return cplx{coeff_at(sup_q, k)}; };
  // The disc minimum is not monotone in q, so (0, sup_q] is scanned.
  f.parametric = ParametricEnvelope{[coeff_at, d](double t) {
                                      std::vector<cplx> c(static_cast<std::size_t>(d) + 1, cplx{1.0});
                                      for (int k = 1; k <= d; ++k) c[k] = coeff_at(t, k);
                                      return Polynomial::padded(std::move(c));
                                    },
                                    sup_q, false};
  return f;
}

SectionCoefficient gp_section(double alpha, std::function<double(long)> q_of) {
  return [alpha, q_of = std::move(q_of)](long j, long n) {
    return cplx{std::pow(static_cast<double>(j), alpha) * g_fourier(q_of(n), j)};
  };
}

EigenSample eigenfunction(long n, double mu, std::span<const double> x, long terms) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "mode index must be positive");
  if (terms < 1) throw Error(ErrorCode::InvalidArgument, "need at least one term");
  const double q = nome(mu);
  const double lq = std::log(q);
  std::vector<double> c;
  for (long l = 0; l < terms; ++l) {
    const double cl = std::exp(static_cast<double>(l) * lq) / -std::expm1((2.0 * l + 1.0) * lq);
    if (cl == 0.0) break;
    c.push_back(cl);
  }
  const double scale = 4.0 * std::numbers::sqrt2 * std::numbers::pi * static_cast<double>(n) * std::sqrt(q);
  EigenSample out;
  out.values.reserve(x.size());
  for (double xi : x) {
    double acc = 0.0;
    for (std::size_t l = 0; l < c.size(); ++l) {
      acc += c[l] * boost::math::sin_pi(static_cast<double>((2 * static_cast<long>(l) + 1) * n) * xi);
    }
    out.values.push_back(scale * acc);
  }
  out.tail_bound = scale * std::exp(static_cast<double>(terms) * lq) / ((1.0 - q) * (1.0 - q));
  return out;
}

double eigenvalue(long n, double mu) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "mode index must be positive");
  const double k = complete_elliptic(mu).K;
  return 4.0 * static_cast<double>(n * n) * (1.0 + mu * mu) * k * k;
}

}  // namespace spreadcert
