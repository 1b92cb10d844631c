#include "spreadcert/polydisc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace spreadcert {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

namespace {

MembershipVerdict make_verdict(double margin, MembershipMethod method, double tol) {
  MembershipVerdict v;
  v.margin = margin;
  v.method = method;
  v.inside = margin > tol;
  v.indeterminate = std::abs(margin) <= tol;
  return v;
}

void require_unit_lambdas(std::span<const cplx> lambdas) {
  for (const cplx& lam : lambdas) {
    if (!(std::abs(lam) < 1.0)) {
      throw Error(ErrorCode::NotInPolydisc, "zeros of the Blaschke product must lie in the open disc");
    }
  }
}

MatrixXcd resolvent_factor(cplx lambda, const MatrixXcd& y) {
  // (I + conj(lambda) Y)^{-1}; invertible because ||Y|| <= 1 and |lambda| < 1.
  const auto id = MatrixXcd::Identity(y.rows(), y.cols());
  return (id + std::conj(lambda) * y).partialPivLu().inverse();
}

}  // namespace

MembershipVerdict in_polydisc_roots(std::span<const cplx> a, const Settings& cfg) {
  if (a.empty()) throw Error(ErrorCode::InvalidArgument, "membership test needs d >= 1");
  std::vector<cplx> c{cplx{1.0}};
  c.insert(c.end(), a.begin(), a.end());
  const Polynomial alpha = Polynomial::padded(std::move(c)).trimmed();
  if (alpha.degree() == 0) {
    return make_verdict(std::numeric_limits<double>::infinity(), MembershipMethod::Roots, cfg.membership_tol);
  }
  const RootSet rs = roots(alpha, cfg);
  double smallest = std::numeric_limits<double>::infinity();
  for (const cplx& r : rs.roots) smallest = std::min(smallest, std::abs(r));
  return make_verdict(smallest - 1.0, MembershipMethod::Roots, cfg.membership_tol);
}

PtakYoungMatrix::PtakYoungMatrix(std::vector<cplx> betas) : betas_(std::move(betas)) {
  const int d = dim();
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "Ptak-Young matrix needs d >= 1");
  std::vector<double> s(d);
  for (int j = 0; j < d; ++j) {
    const double m = std::abs(betas_[j]);
    if (!(m < 1.0 - 1e-12)) throw Error(ErrorCode::InvalidBeta, "every |beta_j| must be below 1 - 1e-12");
    s[j] = std::sqrt(1.0 - m * m);
  }
  matrix_ = MatrixXcd::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    matrix_(j, j) = betas_[j];
    // Entry (j,k) = s_j * prod_{l=j+1}^{k-1} (-conj beta_l) * s_k.
    cplx chain = 1.0;
    for (int k = j + 1; k < d; ++k) {
      matrix_(j, k) = s[j] * chain * s[k];
      chain *= -std::conj(betas_[k]);
    }
  }
}

PtakYoungMatrix default_ptak_young(int d) {
  return PtakYoungMatrix(std::vector<cplx>(static_cast<std::size_t>(d), cplx{0.5}));
}

MatrixXcd eval_matrix(const Polynomial& p, const MatrixXcd& y) {
  const auto c = p.coeffs();
  const auto id = MatrixXcd::Identity(y.rows(), y.cols());
  MatrixXcd acc = c.back() * id;
  for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * y + c[k] * id;
  return acc;
}

Polynomial monic_from_coeffs(std::span<const cplx> c) {
  std::vector<cplx> asc(c.rbegin(), c.rend());
  asc.push_back(1.0);
  return Polynomial(std::move(asc));
}

MatrixXcd schur_cohn_form(std::span<const cplx> c, const PtakYoungMatrix& y) {
  if (static_cast<int>(c.size()) != y.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "coefficient count must equal the Ptak-Young dimension");
  }
  const Polynomial p = monic_from_coeffs(c);
  const Polynomial q = conjugate_poly(p);
  const MatrixXcd py = eval_matrix(p, y.matrix());
  const MatrixXcd qy = eval_matrix(q, y.matrix());
  MatrixXcd form = qy.adjoint() * qy - py.adjoint() * py;
  return 0.5 * (form + form.adjoint());
}

MembershipVerdict in_polydisc_schur_cohn(std::span<const cplx> a, std::span<const cplx> betas, const Settings& cfg) {
  if (a.empty()) throw Error(ErrorCode::InvalidArgument, "membership test needs d >= 1");
  const int d = static_cast<int>(a.size());
  // 1 + sum a_k z^k plays the role of Q, so the monic P carries c_k = conj(a_k).
  std::vector<cplx> c(a.begin(), a.end());
  for (auto& x : c) x = std::conj(x);
  const PtakYoungMatrix y = betas.empty() ? default_ptak_young(d) : ptak_young(betas);
  const MatrixXcd form = schur_cohn_form(c, y);
  Eigen::SelfAdjointEigenSolver<MatrixXcd> eig(form, Eigen::EigenvaluesOnly);
  return make_verdict(eig.eigenvalues().minCoeff(), MembershipMethod::SchurCohn, cfg.membership_tol);
}

cplx takenaka_malmquist(std::span<const cplx> lambdas, int j, cplx z) {
  const int d = static_cast<int>(lambdas.size());
  if (j < 1 || j > d) throw Error(ErrorCode::InvalidArgument, "Takenaka-Malmquist index out of range");
  require_unit_lambdas(lambdas);
  auto denom = [&](int k) {
    const cplx v = 1.0 + std::conj(lambdas[k]) * z;
    if (std::abs(v) < 1e-14) throw Error(ErrorCode::PoleAtZ, "evaluation point hits a pole");
    return v;
  };
  const cplx& lj = lambdas[j - 1];
  cplx value = std::sqrt(1.0 - std::norm(lj)) / denom(j - 1);
  for (int k = 0; k < j - 1; ++k) value *= (z + lambdas[k]) / denom(k);
  return value;
}

cplx blaschke(std::span<const cplx> lambdas, cplx z) {
  cplx value = 1.0;
  for (const cplx& lam : lambdas) value *= (z + lam) / (1.0 + std::conj(lam) * z);
  return value;
}

double model_residual(std::span<const cplx> lambdas, cplx z, cplx w) {
  const cplx lhs = 1.0 - std::conj(blaschke(lambdas, w)) * blaschke(lambdas, z);
  cplx rhs = 0.0;
  const int d = static_cast<int>(lambdas.size());
  for (int j = 1; j <= d; ++j) {
    rhs += std::conj(takenaka_malmquist(lambdas, j, w)) * (1.0 - std::conj(w) * z) * takenaka_malmquist(lambdas, j, z);
  }
  return std::abs(lhs - rhs);
}

MatrixXcd takenaka_malmquist(std::span<const cplx> lambdas, int j, const MatrixXcd& y) {
  const int d = static_cast<int>(lambdas.size());
  if (j < 1 || j > d) throw Error(ErrorCode::InvalidArgument, "Takenaka-Malmquist index out of range");
  require_unit_lambdas(lambdas);
  const auto id = MatrixXcd::Identity(y.rows(), y.cols());
  const cplx& lj = lambdas[j - 1];
  MatrixXcd value = std::sqrt(1.0 - std::norm(lj)) * resolvent_factor(lj, y);
  for (int k = 0; k < j - 1; ++k) {
    value = value * (y + lambdas[k] * id) * resolvent_factor(lambdas[k], y);
  }
  return value;
}

std::vector<cplx> lambdas_from_coeffs(std::span<const cplx> c, const Settings& cfg) {
  const RootSet rs = roots(monic_from_coeffs(c), cfg);
  std::vector<cplx> lambdas;
  lambdas.reserve(rs.roots.size());
  for (const cplx& r : rs.roots) lambdas.push_back(-r);
  return lambdas;
}

double hermitian_form_tm(std::span<const cplx> c, const PtakYoungMatrix& y, const VectorXcd& x, const Settings& cfg) {
  const int d = y.dim();
  if (static_cast<int>(c.size()) != d || x.size() != d) {
    throw Error(ErrorCode::DimensionMismatch, "coefficients, Ptak-Young matrix and vector must share d");
  }
  std::vector<cplx> a(c.begin(), c.end());
  for (auto& v : a) v = std::conj(v);
  if (!in_polydisc_roots(a, cfg).inside) {
    throw Error(ErrorCode::NotInPolydisc, "coefficients are not in the symmetrised polydisc");
  }
  const std::vector<cplx> lambdas = lambdas_from_coeffs(c, cfg);
  const MatrixXcd& ym = y.matrix();
  const MatrixXcd defect = MatrixXcd::Identity(d, d) - ym.adjoint() * ym;
  const VectorXcd qx = eval_matrix(conjugate_poly(monic_from_coeffs(c)), ym) * x;
  double total = 0.0;
  for (int j = 1; j <= d; ++j) {
    const VectorXcd v = takenaka_malmquist(lambdas, j, ym) * qx;
    total += v.dot(defect * v).real();
  }
  return total;
}

MatrixXcd model_stack(std::span<const cplx> lambdas, const MatrixXcd& y) {
  const int d = static_cast<int>(y.rows());
  const int m = static_cast<int>(lambdas.size());
  MatrixXcd u(m * d, d);
  for (int j = 1; j <= m; ++j) u.block((j - 1) * d, 0, d, d) = takenaka_malmquist(lambdas, j, y);
  return u;
}

MatrixXcd realization(const PtakYoungMatrix& y, std::span<const cplx> lambdas) {
  const int d = y.dim();
  if (static_cast<int>(lambdas.size()) != d) {
    throw Error(ErrorCode::DimensionMismatch, "need one lambda per Ptak-Young dimension");
  }
  require_unit_lambdas(lambdas);
  const int dd = d * d;
  const int big = d + dd;
  const MatrixXcd& ym = y.matrix();
  const MatrixXcd u = model_stack(lambdas, ym);

  // (I (x) Y) u and the Gram matrix G with <G z, z> = ||u z||^2 - ||(I (x) Y) u z||^2.
  MatrixXcd shifted(dd, d);
  for (int j = 0; j < d; ++j) shifted.block(j * d, 0, d, d) = ym * u.block(j * d, 0, d, d);
  MatrixXcd gram = u.adjoint() * u - shifted.adjoint() * shifted;
  gram = 0.5 * (gram + gram.adjoint());
  Eigen::SelfAdjointEigenSolver<MatrixXcd> eig(gram);
  const Eigen::VectorXd clamped = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const MatrixXcd root = eig.eigenvectors() * clamped.asDiagonal() * eig.eigenvectors().adjoint();

  // Source vectors (0, u z) and targets (y, (I (x) Y) u z) with y = G^{1/2} z.
  MatrixXcd source = MatrixXcd::Zero(big, d);
  source.bottomRows(dd) = u;
  MatrixXcd target(big, d);
  target.topRows(d) = root;
  target.bottomRows(dd) = shifted;

  const MatrixXcd gs = source.adjoint() * source;
  const double gram_gap = (gs - target.adjoint() * target).norm();
  if (gram_gap > 1e-8 * std::max(1.0, gs.norm())) {
    throw Error(ErrorCode::RankDeficiency, "source and target Gramians disagree");
  }

  Eigen::ColPivHouseholderQR<MatrixXcd> qr(source);
  qr.setThreshold(1e-10);
  if (qr.rank() != d) throw Error(ErrorCode::RankDeficiency, "model vectors do not span a d-dimensional space");
  const MatrixXcd q_source = qr.householderQ();
  const MatrixXcd r = qr.matrixR().topLeftCorner(d, d).triangularView<Eigen::Upper>();
  // source * P = Q1 R, so L Q1 = target * P * R^{-1}.
  const MatrixXcd target_perm = target * qr.colsPermutation();
  const MatrixXcd image = r.triangularView<Eigen::Upper>().solve<Eigen::OnTheRight>(target_perm);

  Eigen::HouseholderQR<MatrixXcd> qr_image(image);
  const MatrixXcd q_image = qr_image.householderQ();

  const MatrixXcd unitary = image * q_source.leftCols(d).adjoint() +
                            q_image.rightCols(big - d) * q_source.rightCols(big - d).adjoint();
  const double unitarity = (unitary.adjoint() * unitary - MatrixXcd::Identity(big, big)).norm();
  if (unitarity > 1e-8) throw Error(ErrorCode::RankDeficiency, "isometry extension is not unitary");
  return unitary.block(0, d, d, dd);
}

}  // namespace spreadcert
