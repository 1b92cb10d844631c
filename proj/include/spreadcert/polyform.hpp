#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "spreadcert/common.hpp"

namespace spreadcert {

/**
 * Univariate polynomial with complex coefficients stored in ascending degree
 * order. The leading coefficient is nonzero unless the polynomial is built as
 * padded (symbol families keep a fixed degree even when a_d(n) vanishes).
 */
class Polynomial {
public:
  Polynomial() : coeffs_{cplx{0.0}} {}
  Polynomial(std::initializer_list<cplx> coeffs) : Polynomial(std::vector<cplx>(coeffs)) {}
  explicit Polynomial(std::vector<cplx> coeffs, bool padded = false);

  static Polynomial padded(std::vector<cplx> coeffs) { return Polynomial(std::move(coeffs), true); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const cplx> coeffs() const { return coeffs_; }
  const cplx& operator[](std::size_t k) const { return coeffs_[k]; }
  bool is_padded() const { return padded_; }

  /// Horner evaluation.
  cplx operator()(cplx z) const;
  cplx derivative(cplx z) const;

  /// Copy with vanishing leading coefficients removed.
  Polynomial trimmed() const;

private:
  std::vector<cplx> coeffs_;
  bool padded_ = false;
};

inline cplx eval(const Polynomial& p, cplx z) { return p(z); }

struct RootSet {
  std::vector<cplx> roots;
  double residual = 0.0;  // max |p(root)|
  int iterations = 0;
};

/// All complex roots by Aberth-Ehrlich simultaneous iteration.
RootSet roots(const Polynomial& p, const Settings& cfg = {});

/// (pi_{d,1}(lambda), ..., pi_{d,d}(lambda)).
std::vector<cplx> elementary_symmetric(std::span<const cplx> lambdas);

/// Q(z) = z^d conj(P(1/conj z)).
Polynomial conjugate_poly(const Polynomial& p);

struct DiscMinimum {
  double value = 0.0;
  cplx argmin{};              // boundary point attaining the minimum, or the offending root
  bool root_in_disc = false;  // some root satisfies |root| <= 1 + boundary_tol
  bool near_boundary = false; // that root sits within boundary_tol of the unit circle
};

/// inf over the open unit disc of |p(z)|, with diagnostics.
DiscMinimum disc_minimum(const Polynomial& p, const Settings& cfg = {});

inline double min_modulus_disc(const Polynomial& p, const Settings& cfg = {}) {
  return disc_minimum(p, cfg).value;
}

}  // namespace spreadcert
