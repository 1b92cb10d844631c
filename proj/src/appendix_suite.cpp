#include "spreadcert/appendix_suite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "spreadcert/polydisc.hpp"

namespace spreadcert {

bool AppendixReport::passed() const {
  return oracle_disagreements == 0 && beta_disagreements == 0 && model_residual < kModelTol &&
         form_residual < kFormTol && realization_residual < kRealizationTol;
}

namespace {

// Uniform in the disc of the given radius. Written out so the stream of draws
// does not depend on the standard library's distribution internals.
cplx disc_point(std::mt19937_64& rng, double radius) {
  const double u = std::generate_canonical<double, 53>(rng);
  const double v = std::generate_canonical<double, 53>(rng);
  return std::polar(radius * std::sqrt(u), 2.0 * std::numbers::pi * v);
}

double relative(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

AppendixReport run_appendix_suite(int d, int trials, std::uint64_t seed, const Settings& cfg) {
  if (d < 1 || d > 8) throw Error(ErrorCode::InvalidArgument, "d must lie in 1..8");
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "need at least one trial");
  AppendixReport rep;
  rep.d = d;
  rep.trials = trials;
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  const PtakYoungMatrix y = default_ptak_young(d);
  const Eigen::MatrixXcd& ym = y.matrix();

  for (int t = 0; t < trials; ++t) {
    std::vector<cplx> lambdas(d);
    for (auto& l : lambdas) l = disc_point(rng, 0.95);

    // Oracle agreement on a free coefficient vector, and on one known to lie inside.
    std::vector<cplx> free(d);
    for (auto& a : free) a = disc_point(rng, 2.0);
    std::vector<cplx> inside = elementary_symmetric(lambdas);
    for (auto& a : inside) a = std::conj(a);
    std::vector<std::vector<cplx>> betas(3, std::vector<cplx>(d));
    for (auto& row : betas) {
      for (auto& b : row) b = disc_point(rng, 0.9);
    }
    for (const auto* a : {&free, &inside}) {
      const MembershipVerdict r = in_polydisc_roots(*a, cfg);
      const MembershipVerdict s = in_polydisc_schur_cohn(*a, {}, cfg);
      if (r.indeterminate || s.indeterminate) continue;
      ++rep.oracle_checked;
      if (r.inside != s.inside) ++rep.oracle_disagreements;
      for (const auto& row : betas) {
        const MembershipVerdict sb = in_polydisc_schur_cohn(*a, row, cfg);
        if (!sb.indeterminate && sb.inside != s.inside) ++rep.beta_disagreements;
      }
    }

    for (int i = 0; i < 20; ++i) {
      const cplx z = disc_point(rng, 0.99);
      for (int k = 0; k < 20; ++k) {
        const cplx w = disc_point(rng, 0.99);
        rep.model_residual = std::max(rep.model_residual, model_residual(lambdas, z, w));
      }
    }

    // c are the coefficients of the monic P with zeros -lambda_j.
    const std::vector<cplx> c = elementary_symmetric(lambdas);
    Eigen::VectorXcd x(d);
    for (int k = 0; k < d; ++k) x(k) = disc_point(rng, 1.0);
    const Eigen::MatrixXcd sc = schur_cohn_form(c, y);
    const double reference = x.dot(sc * x).real();
    rep.form_residual = std::max(rep.form_residual, relative(hermitian_form_tm(c, y, x, cfg), reference));

    const Eigen::MatrixXcd h = realization(y, lambdas);
    const Eigen::MatrixXcd qy = eval_matrix(conjugate_poly(monic_from_coeffs(c)), ym);
    const Eigen::VectorXcd image = h * (model_stack(lambdas, ym) * (qy * x));
    rep.realization_residual = std::max(rep.realization_residual, relative(image.squaredNorm(), reference));
  }
  return rep;
}

}  // namespace spreadcert
