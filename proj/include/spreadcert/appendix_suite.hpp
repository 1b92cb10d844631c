#pragma once

#include <cstdint>

#include "spreadcert/common.hpp"

namespace spreadcert {

/// Worst residuals of the randomised model-space checks for one dimension d.
struct AppendixReport {
  int d = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  int oracle_checked = 0;        // polynomials with a decisive verdict from both tests
  int oracle_disagreements = 0;  // root oracle vs Schur-Cohn
  int beta_disagreements = 0;    // Schur-Cohn verdict changing with the Ptak-Young betas
  double model_residual = 0.0;
  double form_residual = 0.0;         // Takenaka-Malmquist form vs Schur-Cohn form
  double realization_residual = 0.0;  // ||H u(Y) Q(Y) x||^2 vs Schur-Cohn form

  static constexpr double kModelTol = 1e-10;
  static constexpr double kFormTol = 1e-9;
  static constexpr double kRealizationTol = 1e-8;

  bool passed() const;
};

/// Each trial draws lambda in 0.95 D^d, a coefficient vector with |a_k| <= 2,
/// three Ptak-Young diagonals, a 20 x 20 (z, w) grid and one test vector.
/// Deterministic in (d, trials, seed).
AppendixReport run_appendix_suite(int d, int trials, std::uint64_t seed, const Settings& cfg = {});

}  // namespace spreadcert
