#include "spreadcert/settings.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>

namespace spreadcert {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::InvalidBeta: return "InvalidBeta";
    case ErrorCode::NotInPolydisc: return "NotInPolydisc";
    case ErrorCode::PoleAtZ: return "PoleAtZ";
    case ErrorCode::RankDeficiency: return "RankDeficiency";
    case ErrorCode::DivergentProfile: return "DivergentProfile";
    case ErrorCode::ModulusOutOfRange: return "ModulusOutOfRange";
    case ErrorCode::NotInG2: return "NotInG2";
    case ErrorCode::BracketFailure: return "BracketFailure";
  }
  return "Unknown";
}

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& text) {
  T value{};
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw Error(ErrorCode::InvalidArgument, "bad value for " + key + ": '" + text + "'");
  }
  return value;
}

template <class T>
void require_positive(const std::string& key, T value) {
  if (!(value > 0)) throw Error(ErrorCode::InvalidArgument, key + " must be positive");
}

}  // namespace

Settings parse_settings(std::istream& in, Settings base) {
  using Setter = std::function<void(Settings&, const std::string&, const std::string&)>;
  auto int_field = [](int Settings::*field) -> Setter {
    return [field](Settings& s, const std::string& k, const std::string& v) {
      s.*field = parse_number<int>(k, v);
      require_positive(k, s.*field);
    };
  };
  auto real_field = [](double Settings::*field) -> Setter {
    return [field](Settings& s, const std::string& k, const std::string& v) {
      s.*field = parse_number<double>(k, v);
      require_positive(k, s.*field);
    };
  };
  const std::map<std::string, Setter> setters{
      {"angle_grid", int_field(&Settings::angle_grid)},
      {"root_tol", real_field(&Settings::root_tol)},
      {"root_max_iter", int_field(&Settings::root_max_iter)},
      {"boundary_tol", real_field(&Settings::boundary_tol)},
      {"membership_tol", real_field(&Settings::membership_tol)},
      {"invertibility_tol", real_field(&Settings::invertibility_tol)},
      {"terms", int_field(&Settings::terms)},
      {"bisection_tol", real_field(&Settings::bisection_tol)},
      {"bisection_max_iter", int_field(&Settings::bisection_max_iter)},
      {"prescan_points", int_field(&Settings::prescan_points)},
      {"parameter_scan", int_field(&Settings::parameter_scan)},
  };

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::InvalidArgument, "config line " + std::to_string(lineno) + " has no '='");
    }
    const std::string key = trim(line.substr(0, eq));
    const auto it = setters.find(key);
    if (it == setters.end()) throw Error(ErrorCode::InvalidArgument, "unknown config key '" + key + "'");
    it->second(base, key, trim(line.substr(eq + 1)));
  }
  return base;
}

Settings load_settings_file(const std::string& path, Settings base) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open config file " + path);
  return parse_settings(in, base);
}

}  // namespace spreadcert
