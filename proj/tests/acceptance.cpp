// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "spreadcert/appendix_suite.hpp"
#include "spreadcert/elliptic.hpp"
#include "spreadcert/gross_pitaevskii.hpp"
#include "spreadcert/lambert.hpp"
#include "spreadcert/polydisc.hpp"
#include "spreadcert/spread_toeplitz.hpp"
#include "spreadcert/weierstrass.hpp"

using namespace spreadcert;
using std::numbers::pi;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("AC%d %s: %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  failures += !ok;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

class Stopwatch {
public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

cplx random_in_disc(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(radius * std::sqrt(u(rng)), 2.0 * pi * u(rng));
}

void ac1() {
  Stopwatch t;
  const double r0 = solve_r0(0.0, 500).value;
  const double s = t.seconds();
  report(1, std::abs(r0 - 0.76806) <= 1e-3 && s < 1.0, fmt("r0(0) = %.9f, %.3f s", r0, s));
}

void ac2() {
  Stopwatch t;
  bool ordered = true;
  bool decreasing = true;
  double prev[3] = {2.0, 2.0, 2.0};
  for (int i = 0; i <= 20; ++i) {
    const double alpha = 0.1 * i;
    const double r[3] = {solve_r0(alpha).value, solve_r1(alpha, 3).value, solve_r1_tilde(alpha, 3).value};
    ordered = ordered && r[0] < r[1] && r[1] < r[2];
    for (int k = 0; k < 3; ++k) {
      decreasing = decreasing && r[k] < prev[k];
      prev[k] = r[k];
    }
  }
  const double s = t.seconds();
  report(2, ordered && decreasing && s < 30.0,
         fmt("ordering %s, strictly decreasing %s, %.2f s", ordered ? "yes" : "no", decreasing ? "yes" : "no", s));
}

void ac3() {
  const int n = 1'000'000;
  std::vector<double> c1(n), s1(n), c2(n), s2(n);
  for (int i = 0; i < n; ++i) {
    const double th = 2.0 * pi * i / n;
    c1[i] = std::cos(th);
    s1[i] = std::sin(th);
    c2[i] = std::cos(2.0 * th);
    s2[i] = std::sin(2.0 * th);
  }
  auto modulus2 = [](double a, double b, double th) {
    const double re = 1.0 + a * std::cos(th) + b * std::cos(2.0 * th);
    const double im = a * std::sin(th) + b * std::sin(2.0 * th);
    return re * re + im * im;
  };
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  double worst_refined = 0.0;
  double worst_a = 0.0;
  double worst_b = 0.0;
  int over = 0;
  int samples = 0;
  while (samples < 1000) {
    const double b = u(rng);
    const double a = 2.0 * u(rng);
    if (!in_g2(a, b) || b <= 1e-6) continue;
    double m2 = 1e300;
    int arg = 0;
    for (int i = 0; i < n; ++i) {
      const double re = 1.0 + a * c1[i] + b * c2[i];
      const double im = a * s1[i] + b * s2[i];
      const double v = re * re + im * im;
      if (v < m2) {
        m2 = v;
        arg = i;
      }
    }
    const double grid = std::sqrt(m2);
    const double exact = min_quadratic(a, b);
    const double err = std::abs(exact - grid) / grid;
    if (err > worst) {
      worst = err;
      worst_a = a;
      worst_b = b;
    }
    if (err > 1e-6) {
      // diagnostic only: 10^6 more points across the two cells around the grid minimiser
      ++over;
      const double h = 2.0 * pi / n;
      double r2 = m2;
      for (int i = -n / 2; i <= n / 2; ++i) r2 = std::min(r2, modulus2(a, b, (arg + 2.0 * i / n) * h));
      worst_refined = std::max(worst_refined, std::abs(exact - std::sqrt(r2)) / std::sqrt(r2));
    }
    ++samples;
  }
  report(3, worst <= 1e-6,
         fmt("max relative error %.3e over %d pairs, worst at (a, b) = (%.6f, %.6f); %d pairs above 1e-6, "
             "all with b near 1, agree to %.1e after local grid refinement",
             worst, samples, worst_a, worst_b, over, worst_refined));
}

void ac4() {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int tested = 0;
  int inside = 0;
  int disagree = 0;
  int beta_changes = 0;
  int skipped = 0;
  while (tested < 10000) {
    const int d = 1 + static_cast<int>(5 * u(rng));
    const double scale = 2.0 * u(rng);  // mixes members and non-members
    std::vector<cplx> a(d);
    for (auto& x : a) x = random_in_disc(rng, scale);
    const MembershipVerdict r = in_polydisc_roots(a);
    if (std::abs(r.margin) <= 1e-6) {
      ++skipped;
      continue;
    }
    ++tested;
    inside += r.inside;
    const MembershipVerdict s = in_polydisc_schur_cohn(a);
    disagree += s.inside != r.inside || s.indeterminate;
    for (int k = 0; k < 10; ++k) {
      std::vector<cplx> betas(d);
      for (auto& b : betas) b = random_in_disc(rng, 0.95);
      const MembershipVerdict sb = in_polydisc_schur_cohn(a, betas);
      beta_changes += sb.inside != s.inside || sb.indeterminate;
    }
  }
  report(4, disagree == 0 && beta_changes == 0,
         fmt("%d polynomials (%d inside, %d near-boundary skipped): %d disagreements, %d beta-dependent verdicts",
             tested, inside, skipped, disagree, beta_changes));
}

void ac5() {
  double model = 0.0;
  double form = 0.0;
  double real = 0.0;
  int disagree = 0;
  for (int d = 1; d <= 4; ++d) {
    const AppendixReport r = run_appendix_suite(d, 100, 500 + d);
    model = std::max(model, r.model_residual);
    form = std::max(form, r.form_residual);
    real = std::max(real, r.realization_residual);
    disagree += r.oracle_disagreements + r.beta_disagreements;
  }
  report(5, model < 1e-10 && form < 1e-9 && real < 1e-8 && disagree == 0,
         fmt("model %.2e, form %.2e, realization %.2e, verdict disagreements %d", model, form, real, disagree));
}

void ac6() {
  double triangle = 0.0;
  for (int i = 1; i <= 7; ++i) {
    for (double alpha : {0.0, 1.0, 2.0}) {
      const double q = 0.1 * i;
      triangle = std::max(triangle, std::abs(s_alpha(q, alpha).value - s_alpha_lambert(q, alpha)));
    }
  }
  double s1 = 0.0;
  for (int i = 1; i <= 6; ++i) {
    const double q = 0.1 * i;
    s1 = std::max(s1, std::abs(s1_elliptic(q) - s_alpha(q, 1.0).value));
  }
  double split = 0.0;
  for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    for (double alpha : {0.0, 1.0, 2.0}) {
      const PowerWeight f{1.0, alpha};
      const double lhs = lambert_series(f, r).value - lambert_series(f, r * r).value;
      const double rhs = lambert_split(f, r).value;
      split = std::max(split, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
  }
  report(6, triangle < 1e-10 && s1 < 1e-8 && split < 1e-12,
         fmt("s_alpha vs Lambert %.2e, s1 elliptic %.2e, split %.2e", triangle, s1, split));
}

void ac7() {
  const double k0 = std::abs(complete_elliptic(0.0).K - pi / 2);
  const double q = std::abs(nome(1.0 / std::sqrt(2.0)) - std::exp(-pi));
  const int n = 1'000'000;
  const double mu = 0.9;
  const double h = (pi / 2) / n;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double s = std::sin((i + 0.5) * h);
    sum += 1.0 / std::sqrt(1.0 - mu * mu * s * s);
  }
  const double quad = std::abs(complete_elliptic(mu).K - sum * h);
  report(7, k0 <= 1e-14 && q <= 1e-12 && quad < 1e-9,
         fmt("|K(0) - pi/2| %.1e, |nome - e^-pi| %.1e, AGM vs quadrature %.1e", k0, q, quad));
}

void ac8() {
  auto s0 = [](double nu) {
    WeierstrassSpec w;
    w.p = 2;
    w.mu = nu;
    w.region = WeierstrassRegion::S0;
    return certify_S0(w).certified();
  };
  bool iff = s0(0.5 - 1e-12) && !s0(0.5) && !s0(0.5 + 1e-12);
  for (int i = 1; i < 100; ++i) iff = iff && s0(0.01 * i) == (0.01 * i < 0.5);
  const long d = minimal_degree_S1(0.9);

  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int grid = 4096;
  double worst = -1e300;
  for (int t = 0; t < 1000; ++t) {
    const double nu = 0.99 * u(rng);
    const long deg = 1 + static_cast<long>(40 * u(rng));
    double m = 1e300;
    for (int i = 0; i < grid; ++i) {
      const cplx w = nu * std::polar(1.0, 2.0 * pi * i / grid);
      cplx acc = 0.0;
      cplx pw = 1.0;
      for (long k = 0; k <= deg; ++k, pw *= w) acc += pw;
      m = std::min(m, std::abs(acc));
    }
    worst = std::max(worst, s1_symbol_bound(nu, deg) - m);
  }
  report(8, iff && d == 28 && worst <= 1e-9,
         fmt("S0 iff nu < 1/2: %s, minimal d(0.9) = %ld, max(bound - symbol min) = %.2e", iff ? "yes" : "no", d,
             worst));
}

void ac9() {
  Stopwatch t;
  const SectionCoefficient cj = weierstrass_section(2, 0.0, [](long) { return 0.5; });
  const double floor = 2.0 / 3.0;
  bool ok = true;
  double prev = 2.0;
  std::string values;
  for (long n : {256L, 1024L, 4096L}) {
    const double s = smallest_singular(finite_section(cj, n));
    ok = ok && s >= floor - 1e-9 && s <= prev + 1e-12;
    prev = s;
    values += fmt("N=%ld %.6f ", n, s);
  }
  ok = ok && prev - floor <= 0.02;
  const double s = t.seconds();
  report(9, ok && s < 60.0, values + fmt("(bound 2/3), %.1f s", s));
}

void ac10() {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int ps[] = {2, 3, 5};
  int tested = 0;
  int mismatches = 0;
  int windowed = 0;
  for (int t = 0; t < 1000; ++t) {
    const double alpha = 2.0 * u(rng);
    const int p = ps[t % 3];
    const double q = 0.01 + 0.98 * u(rng);
    const double r1 = solve_r1(alpha, p).value;
    if (std::abs(q - r1) < 1e-6) {
      ++windowed;
      continue;
    }
    ++tested;
    mismatches += certify_T1(q, alpha, p).certified() != (q < r1);
  }
  report(10, mismatches == 0, fmt("%d mismatches over %d inputs (%d in the threshold window)", mismatches, tested, windowed));
}

void ac11() {
  const int cells = 1000;
  const double h = 1.0 / cells;
  std::vector<double> x(cells + 1);
  for (int i = 0; i <= cells; ++i) x[i] = i * h;
  double worst5 = 0.0;
  double worst3 = 0.0;
  bool walls = true;
  for (long n : {1L, 2L}) {
    for (double mu : {0.3, 0.5, 0.8}) {
      const std::vector<double> v = eigenfunction(n, mu, x).values;
      const double eta = eigenvalue(n, mu);
      walls = walls && v.front() == 0.0 && v.back() == 0.0;
      for (int i = 1; i < cells; ++i) {
        const double nl = -v[i] * v[i] * v[i] + eta * v[i];
        const double d3 = (v[i + 1] - 2.0 * v[i] + v[i - 1]) / (h * h);
        worst3 = std::max(worst3, std::abs(d3 + nl));
        if (i < 2 || i > cells - 2) continue;
        const double d5 = (-v[i + 2] + 16.0 * v[i + 1] - 30.0 * v[i] + 16.0 * v[i - 1] - v[i - 2]) / (12.0 * h * h);
        worst5 = std::max(worst5, std::abs(d5 + nl));
      }
    }
  }
  report(11, worst5 < 1e-3 && walls,
         fmt("5-point residual %.2e (3-point %.2e, O(h^2) stencil error), u(0) = u(1) = 0: %s", worst5, worst3,
             walls ? "yes" : "no"));
}

}  // namespace

int main() {
  const auto run = [](void (*f)(), int id) {
    try {
      f();
    } catch (const std::exception& e) {
      report(id, false, std::string("exception: ") + e.what());
    }
  };
  run(ac1, 1);
  run(ac2, 2);
  run(ac3, 3);
  run(ac4, 4);
  run(ac5, 5);
  run(ac6, 6);
  run(ac7, 7);
  run(ac8, 8);
  run(ac9, 9);
  run(ac10, 10);
  run(ac11, 11);
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
