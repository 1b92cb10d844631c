#include "spreadcert/certificate.hpp"

#include <cmath>
#include <stdexcept>

namespace spreadcert {

std::string_view to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::S0: return "S0";
    case CertificateKind::S1: return "S1";
    case CertificateKind::T0: return "T0";
    case CertificateKind::T1: return "T1";
    case CertificateKind::Invertibility: return "invertibility";
    case CertificateKind::Perturbation: return "perturbation";
    case CertificateKind::Polydisc: return "polydisc";
  }
  return "unknown";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Certified: return "true";
    case Verdict::NotCertified: return "false";
    case Verdict::Indeterminate: return "boundary-indeterminate";
  }
  return "unknown";
}

std::string_view to_string(EvidenceMode mode) {
  return mode == EvidenceMode::EnvelopeRigorous ? "envelope-rigorous" : "sample-heuristic";
}

double Certificate::margin(std::string_view name) const {
  for (const auto& [key, value] : margins) {
    if (key == name) return value;
  }
  throw std::out_of_range("no margin named " + std::string(name));
}

namespace {

nlohmann::ordered_json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

}  // namespace

nlohmann::ordered_json Certificate::to_json() const {
  nlohmann::ordered_json j;
  j["kind"] = to_string(kind);
  switch (verdict) {
    case Verdict::Certified: j["verdict"] = true; break;
    case Verdict::NotCertified: j["verdict"] = false; break;
    case Verdict::Indeterminate: j["verdict"] = "boundary-indeterminate"; break;
  }
  j["mode"] = to_string(mode);
  j["parameters"] = parameters;
  nlohmann::ordered_json m = nlohmann::ordered_json::object();
  for (const auto& [key, value] : margins) m[key] = number(value);
  j["margins"] = std::move(m);
  if (!notes.empty()) j["notes"] = notes;
  j["tool_version"] = tool_version;
  return j;
}

Verdict verdict_from_margin(double value, double tol) {
  if (std::abs(value) <= tol) return Verdict::Indeterminate;
  return value > tol ? Verdict::Certified : Verdict::NotCertified;
}

}  // namespace spreadcert
