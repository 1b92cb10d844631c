#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace spreadcert {

using cplx = std::complex<double>;

/// Failure categories raised by the library. The CLI maps these onto exit codes.
enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  NonConvergence,
  InvalidBeta,
  NotInPolydisc,
  PoleAtZ,
  RankDeficiency,
  DivergentProfile,
  ModulusOutOfRange,
  NotInG2,
  BracketFailure,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for the pure input-validation codes (bad shapes, out-of-range arguments).
  bool is_usage() const noexcept {
    return code_ == ErrorCode::InvalidArgument || code_ == ErrorCode::DimensionMismatch;
  }

private:
  ErrorCode code_;
};

/// Numerical knobs shared across modules. Defaults are the documented values;
/// the CLI can override any of them from a config file.
struct Settings {
  int angle_grid = 4096;          // uniform angles for circle minimisation
  double root_tol = 1e-12;        // Aberth correction tolerance
  int root_max_iter = 500;
  double boundary_tol = 1e-10;    // |root| <= 1 + tol counts as inside the closed disc
  double membership_tol = 1e-9;   // margin needed for a strict polydisc verdict
  double invertibility_tol = 1e-9;
  int terms = 500;                // truncation of s_alpha sums
  double bisection_tol = 1e-9;    // width of the final q bracket
  int bisection_max_iter = 200;
  int prescan_points = 64;        // coarse sign scan before bisection
  int parameter_scan = 512;       // grid for non-monotone parametric envelopes
};

inline constexpr const char* kToolVersion = "spreadcert 1.0.0";

}  // namespace spreadcert
