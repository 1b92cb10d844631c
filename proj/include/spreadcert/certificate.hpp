#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "spreadcert/common.hpp"

namespace spreadcert {

enum class CertificateKind { S0, S1, T0, T1, Invertibility, Perturbation, Polydisc };
enum class Verdict { Certified, NotCertified, Indeterminate };

/// How a verdict was discharged: through a monotone envelope reduction that is
/// valid for every admissible sequence, or from a finite sample of indices.
enum class EvidenceMode { EnvelopeRigorous, SampleHeuristic };

std::string_view to_string(CertificateKind kind);
std::string_view to_string(Verdict verdict);
std::string_view to_string(EvidenceMode mode);

/// Machine-readable verdict emitted by every certifier.
struct Certificate {
  CertificateKind kind = CertificateKind::Perturbation;
  Verdict verdict = Verdict::NotCertified;
  EvidenceMode mode = EvidenceMode::EnvelopeRigorous;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<std::pair<std::string, double>> margins;
  std::vector<std::string> notes;
  std::string tool_version = kToolVersion;

  bool certified() const { return verdict == Verdict::Certified; }

  Certificate& margin(std::string name, double value) {
    margins.emplace_back(std::move(name), value);
    return *this;
  }

  /// Throws std::out_of_range for unknown names.
  double margin(std::string_view name) const;

  nlohmann::ordered_json to_json() const;
};

/// Certified when value > tol, indeterminate when |value| <= tol.
Verdict verdict_from_margin(double value, double tol);

}  // namespace spreadcert
