#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "spreadcert/common.hpp"
#include "spreadcert/polyform.hpp"

namespace spreadcert {

enum class MembershipMethod { Roots, SchurCohn };

/// Outcome of a symmetrised-polydisc membership test.
///
/// `margin` is min|root| - 1 for the root oracle and the smallest eigenvalue of
/// the Schur-Cohn form otherwise. Verdicts with |margin| <= membership_tol are
/// flagged indeterminate: the set is open and the theorems need strict interiority.
struct MembershipVerdict {
  bool inside = false;
  bool indeterminate = false;
  double margin = 0.0;
  MembershipMethod method = MembershipMethod::Roots;
};

/// Is (a_1, ..., a_d) in G_d, i.e. does 1 + sum a_k z^k have no zeros in the closed disc?
MembershipVerdict in_polydisc_roots(std::span<const cplx> a, const Settings& cfg = {});

/// Upper triangular contraction with diagonal betas and rank-one defect I - Y^*Y.
/// Its spectrum {beta_j} lies in the open disc, while ||Y|| = 1 once d >= 2.
class PtakYoungMatrix {
public:
  explicit PtakYoungMatrix(std::vector<cplx> betas);

  int dim() const { return static_cast<int>(betas_.size()); }
  const std::vector<cplx>& betas() const { return betas_; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

private:
  std::vector<cplx> betas_;
  Eigen::MatrixXcd matrix_;
};

inline PtakYoungMatrix ptak_young(std::span<const cplx> betas) {
  return PtakYoungMatrix({betas.begin(), betas.end()});
}

/// beta_j = 1/2 for all j.
PtakYoungMatrix default_ptak_young(int d);

/// p(Y) for a square matrix Y, by Horner.
Eigen::MatrixXcd eval_matrix(const Polynomial& p, const Eigen::MatrixXcd& y);

/// Monic P(z) = z^d + c_1 z^{d-1} + ... + c_d.
Polynomial monic_from_coeffs(std::span<const cplx> c);

/// Q(Y)^* Q(Y) - P(Y)^* P(Y) for monic P built from c and its conjugate Q.
Eigen::MatrixXcd schur_cohn_form(std::span<const cplx> c, const PtakYoungMatrix& y);

/// Membership of a (convention 1 + sum a_k z^k) through positivity
/// of the Schur-Cohn form. Empty betas selects the default Ptak-Young matrix.
MembershipVerdict in_polydisc_schur_cohn(std::span<const cplx> a, std::span<const cplx> betas = {},
                                         const Settings& cfg = {});

/// Takenaka-Malmquist function E_j(z), j in 1..d.
cplx takenaka_malmquist(std::span<const cplx> lambdas, int j, cplx z);

/// Finite Blaschke product with zeros at -lambda_j.
cplx blaschke(std::span<const cplx> lambdas, cplx z);

/// |1 - conj(B(w)) B(z) - sum_j conj(E_j(w)) (1 - conj(w) z) E_j(z)|.
double model_residual(std::span<const cplx> lambdas, cplx z, cplx w);

/// E_j(Y) through rational matrix calculus.
Eigen::MatrixXcd takenaka_malmquist(std::span<const cplx> lambdas, int j, const Eigen::MatrixXcd& y);

/// lambda with P(z) = prod (z + lambda_j) for the monic polynomial built from c.
std::vector<cplx> lambdas_from_coeffs(std::span<const cplx> c, const Settings& cfg = {});

/// sum_j <Q(Y)^* E_j(Y)^* (I - Y^*Y) E_j(Y) Q(Y) x, x>. Requires c in G_d.
double hermitian_form_tm(std::span<const cplx> c, const PtakYoungMatrix& y, const Eigen::VectorXcd& x,
                         const Settings& cfg = {});

/// Stack (E_1(Y); ...; E_d(Y)) as a d^2 x d matrix.
Eigen::MatrixXcd model_stack(std::span<const cplx> lambdas, const Eigen::MatrixXcd& y);

/// H(Y) (d x d^2) with ||H(Y) u(Y) Q(Y) x||^2 equal to the Schur-Cohn form at x,
/// obtained by extending the lurking isometry to a unitary.
Eigen::MatrixXcd realization(const PtakYoungMatrix& y, std::span<const cplx> lambdas);

}  // namespace spreadcert
