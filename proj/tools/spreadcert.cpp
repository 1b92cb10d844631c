// Command-line front end: threshold sweeps, certificates, appendix checks and section experiments.

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spreadcert/appendix_suite.hpp"
#include "spreadcert/gross_pitaevskii.hpp"
#include "spreadcert/settings.hpp"
#include "spreadcert/spread_toeplitz.hpp"
#include "spreadcert/weierstrass.hpp"

using namespace spreadcert;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kVerdictFalse = 1, kUsage = 2, kNumerical = 3 };

struct Output {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file.open(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open " + path + " for writing");
    stream = &file;
  }
  std::ostream& operator*() { return *stream; }
};

std::string fmt9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

// ---- sweep

struct SweepOptions {
  double alpha_min = 0.0;
  double alpha_max = 2.0;
  int steps = 21;
  int p = 3;
  long terms = 0;
  std::string out;
};

int cmd_sweep(const SweepOptions& o, const Settings& cfg) {
  if (o.alpha_min < 0.0 || o.alpha_max < o.alpha_min) {
    throw Error(ErrorCode::InvalidArgument, "need 0 <= alpha-min <= alpha-max");
  }
  if (o.steps < 1) throw Error(ErrorCode::InvalidArgument, "steps must be at least 1");
  if (o.alpha_min == o.alpha_max && o.steps != 1) {
    throw Error(ErrorCode::InvalidArgument, "a single alpha needs steps = 1");
  }
  if (o.p < 2) throw Error(ErrorCode::InvalidArgument, "p must be at least 2");
  const long terms = o.terms > 0 ? o.terms : cfg.terms;

  std::vector<double> alphas(o.steps);
  for (int i = 0; i < o.steps; ++i) {
    alphas[i] = o.steps == 1 ? o.alpha_min : o.alpha_min + (o.alpha_max - o.alpha_min) * i / (o.steps - 1);
  }
  std::vector<std::string> rows(alphas.size());
  std::vector<char> failed(alphas.size(), 0);

  auto cell = [&](std::size_t i, auto&& solve) {
    try {
      return fmt9(solve().value);
    } catch (const std::exception& e) {
      failed[i] = 1;
      std::cerr << "alpha=" << fmt9(alphas[i]) << ": " << e.what() << '\n';
      return std::string("error");
    }
  };
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < alphas.size(); i = next++) {
      const double a = alphas[i];
      rows[i] = fmt9(a) + ',' + cell(i, [&] { return solve_r0(a, terms, cfg); }) + ',' +
                cell(i, [&] { return solve_r1(a, o.p, terms, cfg); }) + ',' +
                cell(i, [&] { return solve_r1_tilde(a, o.p, terms, cfg); });
    }
  };
  const unsigned n_threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), alphas.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Output out(o.out);
  *out << "alpha,r0,r1,r1_tilde\n";
  for (const auto& r : rows) *out << r << '\n';
  for (char f : failed) {
    if (f) return kNumerical;
  }
  return kOk;
}

// ---- certify

const json& field(const json& params, const char* key) {
  if (!params.contains(key)) throw Error(ErrorCode::InvalidArgument, std::string("missing field '") + key + "'");
  return params.at(key);
}

double number(const json& params, const char* key) {
  const json& v = field(params, key);
  if (!v.is_number()) throw Error(ErrorCode::InvalidArgument, std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

int integer(const json& params, const char* key) {
  const json& v = field(params, key);
  if (!v.is_number_integer()) {
    throw Error(ErrorCode::InvalidArgument, std::string("field '") + key + "' must be an integer");
  }
  return v.get<int>();
}

std::string text(const json& params, const char* key) {
  const json& v = field(params, key);
  if (!v.is_string()) throw Error(ErrorCode::InvalidArgument, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

Certificate certify_weierstrass(const json& params, const Settings& cfg) {
  WeierstrassSpec spec;
  spec.p = integer(params, "p");
  spec.alpha = number(params, "alpha");
  spec.mu = number(params, "mu");
  const std::string region = text(params, "region");
  if (region == "S0") {
    spec.region = WeierstrassRegion::S0;
    return certify_S0(spec);
  }
  if (region == "S1") {
    spec.region = WeierstrassRegion::S1;
    return certify_S1(spec, cfg);
  }
  throw Error(ErrorCode::InvalidArgument, "region must be \"S0\" or \"S1\"");
}

Certificate certify_gp(const json& params, const Settings& cfg) {
  const double alpha = number(params, "alpha");
  const double sup_q = number(params, "sup_q");
  const long terms = params.contains("terms") ? integer(params, "terms") : cfg.terms;
  if (alpha < 0.0) throw Error(ErrorCode::InvalidArgument, "alpha must be nonnegative");
  if (!(sup_q > 0.0 && sup_q < 1.0)) throw Error(ErrorCode::InvalidArgument, "sup_q must lie in (0, 1)");
  if (terms < 1) throw Error(ErrorCode::InvalidArgument, "terms must be positive");
  const std::string theorem = params.contains("theorem") ? text(params, "theorem") : "T1";
  if (theorem == "T0") return certify_T0(sup_q, alpha, terms);
  const int p = integer(params, "p");
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "p must be at least 2");
  if (theorem == "T1") return certify_T1(sup_q, alpha, p, terms, cfg);
  if (theorem == "Td") return certify_Td(sup_q, alpha, p, integer(params, "d"), terms, cfg);
  throw Error(ErrorCode::InvalidArgument, "theorem must be \"T0\", \"T1\" or \"Td\"");
}

int cmd_certify(const std::string& raw, const std::string& out_path, const Settings& cfg) {
  json params;
  try {
    params = json::parse(raw);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("params are not valid JSON: ") + e.what());
  }
  if (!params.is_object()) throw Error(ErrorCode::InvalidArgument, "params must be a JSON object");
  const std::string family = text(params, "family");
  Certificate cert;
  if (family == "weierstrass") {
    cert = certify_weierstrass(params, cfg);
  } else if (family == "gp") {
    cert = certify_gp(params, cfg);
  } else {
    throw Error(ErrorCode::InvalidArgument, "family must be \"weierstrass\" or \"gp\"");
  }
  Output out(out_path);
  *out << cert.to_json().dump(2) << '\n';
  return cert.certified() ? kOk : kVerdictFalse;
}

// ---- appendix-verify

int cmd_appendix(int d, int trials, std::uint64_t seed, const std::string& out_path, const Settings& cfg) {
  const AppendixReport rep = run_appendix_suite(d, trials, seed, cfg);
  Output out(out_path);
  char buf[128];
  auto line = [&](const char* name, double value, double tol) {
    std::snprintf(buf, sizeof buf, "%-22s %.3e  (tol %.0e)  %s\n", name, value, tol, value < tol ? "ok" : "FAIL");
    *out << buf;
  };
  *out << "d=" << d << " trials=" << trials << " seed=" << seed << '\n';
  *out << "oracle agreement       " << rep.oracle_checked - rep.oracle_disagreements << '/' << rep.oracle_checked
       << (rep.oracle_disagreements == 0 ? "  ok" : "  FAIL") << '\n';
  *out << "beta independence      " << rep.beta_disagreements << " changes"
       << (rep.beta_disagreements == 0 ? "  ok" : "  FAIL") << '\n';
  line("model identity", rep.model_residual, AppendixReport::kModelTol);
  line("form agreement", rep.form_residual, AppendixReport::kFormTol);
  line("realization identity", rep.realization_residual, AppendixReport::kRealizationTol);
  *out << (rep.passed() ? "PASS" : "FAIL") << '\n';
  return rep.passed() ? kOk : kVerdictFalse;
}

// ---- section

struct SectionOptions {
  std::string family = "weierstrass";
  long n = 1024;
  int p = 2;
  double alpha = 0.0;
  double lambda = 0.25;
  double q = 0.5;
  long terms = 0;
  std::string out;
};

int cmd_section(const SectionOptions& o, const Settings& cfg) {
  if (o.n < 1 || o.n > 4096) throw Error(ErrorCode::InvalidArgument, "N must lie in 1..4096");
  if (o.alpha < 0.0) throw Error(ErrorCode::InvalidArgument, "alpha must be nonnegative");
  if (o.p < 2) throw Error(ErrorCode::InvalidArgument, "p must be at least 2");
  const long terms = o.terms > 0 ? o.terms : cfg.terms;

  SectionCoefficient cj;
  double symbol = 1.0;
  double tail = 0.0;
  EvidenceMode mode = EvidenceMode::EnvelopeRigorous;
  if (o.family == "identity") {
    cj = [](long, long) { return cplx{0.0}; };
  } else if (o.family == "weierstrass") {
    const double nu = o.lambda * std::pow(static_cast<double>(o.p), o.alpha);
    if (!(o.lambda > 0.0 && nu < 1.0)) throw Error(ErrorCode::InvalidArgument, "need 0 < lambda p^alpha < 1");
    const double lambda = o.lambda;
    cj = weierstrass_section(o.p, o.alpha, [lambda](long) { return lambda; });
    // full geometric symbol 1 / (1 - nu z)
    symbol = 1.0 / (1.0 + nu);
  } else if (o.family == "gp") {
    if (!(o.q > 0.0 && o.q < 1.0)) throw Error(ErrorCode::InvalidArgument, "q must lie in (0, 1)");
    const double q = o.q;
    cj = gp_section(o.alpha, [q](long) { return q; });
    // structured part C_p, C_{p^2}; the remaining C_j enter through their norm sum
    const long p2 = static_cast<long>(o.p) * o.p;
    const SymbolInfimum s = symbol_inf(gp_family(o.p, o.alpha, 2, q), {}, cfg);
    symbol = s.value;
    mode = s.mode;
    tail = s_alpha(q, o.alpha, terms).upper() - 1.0 -
           std::pow(static_cast<double>(o.p), o.alpha) * g_fourier(q, o.p) -
           std::pow(static_cast<double>(p2), o.alpha) * g_fourier(q, p2);
    tail = std::max(tail, 0.0);
  } else {
    throw Error(ErrorCode::InvalidArgument, "family must be weierstrass, gp or identity");
  }

  const double sigma = smallest_singular(finite_section(cj, o.n));
  const double bound = symbol - tail;
  Output out(o.out);
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "family: %s\nN: %ld\nsigma_min: %.12g\nsymbol_inf: %.12g\ntail_sum: %.12g\n"
                "lower_bound: %.12g\ngap: %.12g\nmode: %s\n",
                o.family.c_str(), o.n, sigma, symbol, tail, bound, sigma - bound,
                std::string(to_string(mode)).c_str());
  *out << buf;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certificates for dilated function systems"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  std::string config_path;
  app.add_option("--config", config_path, "key = value settings file (default from $" + std::string(kConfigEnv) + ")");

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "CSV of r0, r1 and r1_tilde over a uniform alpha grid");
  sweep_cmd->add_option("--alpha-min", sweep.alpha_min);
  sweep_cmd->add_option("--alpha-max", sweep.alpha_max);
  sweep_cmd->add_option("--steps", sweep.steps, "number of grid points");
  sweep_cmd->add_option("--p", sweep.p);
  sweep_cmd->add_option("--terms", sweep.terms);
  sweep_cmd->add_option("--out", sweep.out);

  std::string params;
  std::string params_file;
  std::string certify_out;
  auto* certify_cmd = app.add_subcommand("certify", "certificate JSON for a weierstrass or gp parameter set");
  auto* params_opt = certify_cmd->add_option("params", params, "JSON object");
  certify_cmd->add_option("--params-file", params_file)->excludes(params_opt);
  certify_cmd->add_option("--out", certify_out);

  int d = 2;
  int trials = 100;
  std::uint64_t seed = 1;
  std::string appendix_out;
  auto* appendix_cmd = app.add_subcommand("appendix-verify", "randomised checks of the model-space machinery");
  appendix_cmd->add_option("--d", d)->check(CLI::Range(1, 8));
  appendix_cmd->add_option("--trials", trials)->check(CLI::PositiveNumber);
  appendix_cmd->add_option("--seed", seed);
  appendix_cmd->add_option("--out", appendix_out);

  SectionOptions section;
  auto* section_cmd = app.add_subcommand("section", "smallest singular value of an N x N finite section");
  section_cmd->add_option("--family", section.family)->check(CLI::IsMember({"weierstrass", "gp", "identity"}));
  section_cmd->add_option("--n,-N", section.n);
  section_cmd->add_option("--p", section.p);
  section_cmd->add_option("--alpha", section.alpha);
  section_cmd->add_option("--lambda", section.lambda, "constant Weierstrass parameter");
  section_cmd->add_option("--q", section.q, "constant nome for gp");
  section_cmd->add_option("--terms", section.terms);
  section_cmd->add_option("--out", section.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Settings cfg;
    if (config_path.empty()) {
      if (const char* env = std::getenv(kConfigEnv); env != nullptr && *env != '\0') config_path = env;
    }
    if (!config_path.empty()) cfg = load_settings_file(config_path);

    if (*sweep_cmd) return cmd_sweep(sweep, cfg);
    if (*certify_cmd) {
      if (!params_file.empty()) {
        std::ifstream in(params_file);
        if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + params_file);
        std::ostringstream ss;
        ss << in.rdbuf();
        params = ss.str();
      }
      if (params.empty()) throw Error(ErrorCode::InvalidArgument, "certify needs a JSON parameter object");
      return cmd_certify(params, certify_out, cfg);
    }
    if (*appendix_cmd) return cmd_appendix(d, trials, seed, appendix_out, cfg);
    if (*section_cmd) return cmd_section(section, cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.is_usage() ? kUsage : kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumerical;
  }
  return kUsage;
}
