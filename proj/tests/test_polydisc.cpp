#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "spreadcert/polydisc.hpp"

using namespace spreadcert;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;

namespace {

cplx disc_point(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(radius * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
}

int numerical_rank(const MatrixXcd& m, double tol) {
  Eigen::JacobiSVD<MatrixXcd> svd(m);
  int r = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i) r += svd.singularValues()(i) > tol;
  return r;
}

}  // namespace

TEST_CASE("Ptak-Young matrices are contractions with rank-one defects") {
  std::mt19937_64 rng(3);
  for (int d = 1; d <= 6; ++d) {
    std::vector<cplx> betas(d);
    for (auto& b : betas) b = disc_point(rng, 0.9);
    const PtakYoungMatrix y(betas);
    const MatrixXcd& m = y.matrix();
    for (int j = 0; j < d; ++j) {
      CHECK(std::abs(m(j, j) - betas[j]) < 1e-15);
      for (int k = 0; k < j; ++k) CHECK(m(j, k) == cplx{0.0});
    }
    Eigen::JacobiSVD<MatrixXcd> svd(m);
    CHECK(svd.singularValues()(0) <= 1.0 + 1e-14);
    const MatrixXcd id = MatrixXcd::Identity(d, d);
    CHECK(numerical_rank(id - m.adjoint() * m, 1e-12) == 1);
    CHECK(numerical_rank(id - m * m.adjoint(), 1e-12) == 1);
  }
}

TEST_CASE("Ptak-Young rejects betas on or outside the circle") {
  const std::vector<cplx> bad{0.5, 1.0};
  CHECK_THROWS_AS(PtakYoungMatrix(bad), Error);
  try {
    PtakYoungMatrix{std::vector<cplx>{cplx{0.0, 1.2}}};
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidBeta);
  }
}

TEST_CASE("Schur-Cohn form in dimension one has the closed form (1-|b|^2)(1-|c|^2)") {
  for (const cplx c : {cplx{0.3, 0.2}, cplx{-0.9, 0.0}, cplx{1.5, 0.5}}) {
    for (const cplx b : {cplx{0.5}, cplx{0.0, -0.7}}) {
      const std::vector<cplx> cs{c};
      const std::vector<cplx> bs{b};
      const MatrixXcd form = schur_cohn_form(cs, ptak_young(bs));
      const double expect = (1.0 - std::norm(b)) * (1.0 - std::norm(c));
      CHECK(std::abs(form(0, 0) - expect) < 1e-14);
    }
  }
}

TEST_CASE("Schur-Cohn membership agrees with the root oracle") {
  std::mt19937_64 rng(17);
  int decisive = 0;
  for (int t = 0; t < 600; ++t) {
    const int d = 1 + t % 5;
    std::vector<cplx> a(d);
    for (auto& x : a) x = disc_point(rng, 1.5);
    const MembershipVerdict r = in_polydisc_roots(a);
    const MembershipVerdict s = in_polydisc_schur_cohn(a);
    if (r.indeterminate || s.indeterminate) continue;
    ++decisive;
    CHECK(r.inside == s.inside);
    CHECK(r.method == MembershipMethod::Roots);
    CHECK(s.method == MembershipMethod::SchurCohn);
  }
  CHECK(decisive > 500);
}

TEST_CASE("membership of images of the polydisc") {
  std::mt19937_64 rng(23);
  for (int d = 1; d <= 5; ++d) {
    std::vector<cplx> lam(d);
    for (auto& l : lam) l = disc_point(rng, 0.9);
    std::vector<cplx> a = elementary_symmetric(lam);
    CHECK(in_polydisc_roots(a).inside);
    CHECK(in_polydisc_schur_cohn(a).inside);
    lam[0] = 1.2;  // zero of 1 + sum a_k z^k moves to -1/1.2 inside the disc
    a = elementary_symmetric(lam);
    for (auto& x : a) x = std::conj(x);
    CHECK_FALSE(in_polydisc_roots(a).inside);
    CHECK_FALSE(in_polydisc_schur_cohn(a).inside);
  }
}

TEST_CASE("boundary coefficients are flagged indeterminate") {
  const std::vector<cplx> a{1.0};  // zero at z = -1
  CHECK(in_polydisc_roots(a).indeterminate);
  CHECK(in_polydisc_schur_cohn(a).indeterminate);
  const std::vector<cplx> zero{0.0, 0.0};
  CHECK(in_polydisc_roots(zero).inside);
}

TEST_CASE("Takenaka-Malmquist functions are orthonormal on the circle") {
  const std::vector<cplx> lam{{0.3, 0.4}, {-0.5, 0.1}, {0.0, -0.7}};
  const int n = 4096;
  MatrixXcd gram = MatrixXcd::Zero(3, 3);
  for (int i = 0; i < n; ++i) {
    const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * i / n);
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        gram(j, k) += takenaka_malmquist(lam, j + 1, z) * std::conj(takenaka_malmquist(lam, k + 1, z)) / double(n);
      }
    }
  }
  CHECK((gram - MatrixXcd::Identity(3, 3)).norm() < 1e-12);
}

TEST_CASE("Blaschke product is unimodular and vanishes at -lambda") {
  const std::vector<cplx> lam{{0.3, 0.4}, {-0.5, 0.1}};
  for (int i = 0; i < 16; ++i) {
    CHECK(std::abs(std::abs(blaschke(lam, std::polar(1.0, 0.4 * i))) - 1.0) < 1e-14);
  }
  CHECK(std::abs(blaschke(lam, -lam[0])) < 1e-15);
  CHECK(std::abs(blaschke(lam, -lam[1])) < 1e-15);
}

TEST_CASE("model identity holds on a grid") {
  std::mt19937_64 rng(29);
  for (int d = 1; d <= 4; ++d) {
    std::vector<cplx> lam(d);
    for (auto& l : lam) l = disc_point(rng, 0.95);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      for (int k = 0; k < 20; ++k) {
        worst = std::max(worst, model_residual(lam, disc_point(rng, 0.99), disc_point(rng, 0.99)));
      }
    }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("matrix Takenaka-Malmquist functions act entrywise on diagonal arguments") {
  const std::vector<cplx> lam{{0.2, -0.1}, {0.6, 0.3}};
  const std::vector<cplx> diag{{0.1, 0.5}, {-0.4, 0.0}, {0.0, -0.3}};
  MatrixXcd y = MatrixXcd::Zero(3, 3);
  for (int i = 0; i < 3; ++i) y(i, i) = diag[i];
  for (int j = 1; j <= 2; ++j) {
    const MatrixXcd e = takenaka_malmquist(lam, j, y);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(e(i, i) - takenaka_malmquist(lam, j, diag[i])) < 1e-14);
  }
}

TEST_CASE("lambdas reproduce the monic coefficients") {
  const std::vector<cplx> c{{0.2, 0.1}, {-0.3, 0.05}, {0.01, 0.02}};
  const std::vector<cplx> lam = lambdas_from_coeffs(c);
  const std::vector<cplx> back = elementary_symmetric(lam);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(back[k] - c[k]) < 1e-12);
}

TEST_CASE("Takenaka-Malmquist form equals the Schur-Cohn form") {
  std::mt19937_64 rng(31);
  for (int d = 1; d <= 4; ++d) {
    std::vector<cplx> lam(d);
    for (auto& l : lam) l = disc_point(rng, 0.9);
    const std::vector<cplx> c = elementary_symmetric(lam);
    const PtakYoungMatrix y = default_ptak_young(d);
    const MatrixXcd sc = schur_cohn_form(c, y);
    for (int t = 0; t < 10; ++t) {
      VectorXcd x(d);
      for (int k = 0; k < d; ++k) x(k) = disc_point(rng, 1.0);
      const double ref = x.dot(sc * x).real();
      CHECK(std::abs(hermitian_form_tm(c, y, x) - ref) < 1e-9 * std::max(1.0, std::abs(ref)));
    }
  }
}

TEST_CASE("Takenaka-Malmquist form rejects coefficients outside the polydisc") {
  const std::vector<cplx> c{2.0};
  VectorXcd x(1);
  x << 1.0;
  try {
    hermitian_form_tm(c, default_ptak_young(1), x);
    FAIL("expected NotInPolydisc");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInPolydisc);
  }
}

TEST_CASE("realization reproduces the Schur-Cohn form") {
  std::mt19937_64 rng(37);
  for (int d = 1; d <= 4; ++d) {
    std::vector<cplx> lam(d);
    for (auto& l : lam) l = disc_point(rng, 0.95);
    const std::vector<cplx> c = elementary_symmetric(lam);
    const PtakYoungMatrix y = default_ptak_young(d);
    const MatrixXcd h = realization(y, lam);
    REQUIRE(h.rows() == d);
    REQUIRE(h.cols() == d * d);
    const MatrixXcd u = model_stack(lam, y.matrix());
    const MatrixXcd q = eval_matrix(conjugate_poly(monic_from_coeffs(c)), y.matrix());
    const MatrixXcd sc = schur_cohn_form(c, y);
    for (int t = 0; t < 25; ++t) {
      VectorXcd x(d);
      for (int k = 0; k < d; ++k) x(k) = disc_point(rng, 1.0);
      const double ref = x.dot(sc * x).real();
      const double got = (h * (u * (q * x))).squaredNorm();
      CHECK(std::abs(got - ref) < 1e-8 * std::max(1.0, ref));
    }
  }
}
