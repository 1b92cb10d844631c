#include "spreadcert/spread_toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include <boost/math/tools/minima.hpp>
#include <lapacke.h>

namespace spreadcert {

Polynomial SymbolFamily::symbol(long n) const {
  std::vector<cplx> c(static_cast<std::size_t>(degree) + 1, cplx{0.0});
  c[0] = 1.0;
  for (int k = 1; k <= degree; ++k) c[k] = coeff(n, k);
  return Polynomial::padded(std::move(c));
}

SymbolFamily constant_family(const Polynomial& alpha, int period) {
  if (alpha[0] != cplx{1.0}) throw Error(ErrorCode::InvalidArgument, "symbols are normalised to alpha(0) = 1");
  SymbolFamily f;
  f.kind = SymbolKind::ExplicitTable;
  f.period = period;
  f.degree = alpha.degree();
  f.coeff = [alpha](long, int k) { return alpha[static_cast<std::size_t>(k)]; };
  for (int k = 1; k <= f.degree; ++k) f.envelope.push_back(std::abs(alpha[static_cast<std::size_t>(k)]));
  f.parametric = ParametricEnvelope{[alpha](double) { return alpha; }, 1.0, true};
  return f;
}

long p_free_part(long n, int p) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "indices start at 1");
  while (n % p == 0) n /= p;
  return n;
}

SymbolFamily periodic_table_family(int period, std::vector<std::vector<cplx>> rows) {
  if (period < 2) throw Error(ErrorCode::InvalidArgument, "period must be at least 2");
  if (rows.empty()) throw Error(ErrorCode::InvalidArgument, "table needs at least one row");
  const std::size_t d = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != d) throw Error(ErrorCode::DimensionMismatch, "table rows must share the degree");
  }
  SymbolFamily f;
  f.kind = SymbolKind::ExplicitTable;
  f.period = period;
  f.degree = static_cast<int>(d);
  f.envelope.assign(d, 0.0);
  for (const auto& r : rows) {
    for (std::size_t k = 0; k < d; ++k) f.envelope[k] = std::max(f.envelope[k], std::abs(r[k]));
  }
  f.coeff = [rows = std::move(rows), period](long n, int k) {
    const long m = p_free_part(n, period);
    const long position = m - m / period - 1;
    return rows[static_cast<std::size_t>(position) % rows.size()][static_cast<std::size_t>(k - 1)];
  };
  return f;
}

bool is_periodic(const SymbolFamily& family, long n_max, double tol) {
  for (long n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= family.degree; ++k) {
      if (std::abs(family.coeff(family.period * n, k) - family.coeff(n, k)) > tol) return false;
    }
  }
  return true;
}

std::vector<long> index_range(long first, long last) {
  std::vector<long> out;
  for (long n = first; n <= last; ++n) out.push_back(n);
  return out;
}

SymbolInfimum symbol_inf(const SymbolFamily& family, std::span<const long> n_range, const Settings& cfg) {
  SymbolInfimum out;
  if (family.degree == 0) {
    out.value = 1.0;
    out.mode = EvidenceMode::EnvelopeRigorous;
    return out;
  }

  if (family.parametric) {
    const ParametricEnvelope& env = *family.parametric;
    if (env.monotone) {
      const DiscMinimum m = disc_minimum(env.symbol_at(env.sup), cfg);
      out.value = m.value;
      out.near_boundary = m.near_boundary;
      out.argmin_param = env.sup;
      out.mode = EvidenceMode::EnvelopeRigorous;
      return out;
    }
    const int n = std::max(cfg.parameter_scan, 4);
    auto value_at = [&](double t) { return disc_minimum(env.symbol_at(t), cfg).value; };
    int best = n;
    double best_value = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= n; ++i) {
      const double v = value_at(env.sup * i / n);
      if (v < best_value) {
        best_value = v;
        best = i;
      }
    }
    double best_t = env.sup * best / n;
    if (best_value > 0.0) {
      const double lo = env.sup * (best - 1) / n;
      const double hi = env.sup * std::min(best + 1, n) / n;
      const auto [t, v] = boost::math::tools::brent_find_minima(value_at, lo, hi, 30);
      if (v < best_value) {
        best_value = v;
        best_t = t;
      }
    }
    out.value = best_value;
    out.argmin_param = best_t;
    out.mode = EvidenceMode::SampleHeuristic;
    return out;
  }

  if (n_range.empty()) {
    throw Error(ErrorCode::InvalidArgument, "family without an envelope needs a sample of indices");
  }
  std::set<long> seen;
  out.value = std::numeric_limits<double>::infinity();
  for (long n : n_range) {
    if (!seen.insert(p_free_part(n, family.period)).second) continue;
    const DiscMinimum m = disc_minimum(family.symbol(n), cfg);
    if (m.value < out.value) {
      out.value = m.value;
      out.argmin_n = n;
    }
    out.near_boundary = out.near_boundary || m.near_boundary;
  }
  out.mode = EvidenceMode::SampleHeuristic;
  return out;
}

namespace {

void describe(Certificate& cert, const SymbolFamily& family, const SymbolInfimum& s) {
  cert.parameters["period"] = family.period;
  cert.parameters["degree"] = family.degree;
  cert.parameters["symbol_kind"] = family.kind == SymbolKind::ExplicitTable          ? "explicit-table"
                                   : family.kind == SymbolKind::WeierstrassGeometric ? "weierstrass-geometric"
                                                                                     : "gross-pitaevskii";
  cert.mode = s.mode;
  if (s.mode == EvidenceMode::SampleHeuristic && s.argmin_n > 0) cert.parameters["argmin_n"] = s.argmin_n;
  if (s.near_boundary) cert.notes.emplace_back("a symbol root lies within the boundary tolerance of the unit circle");
}

}  // namespace

Certificate invertibility(const SymbolFamily& family, std::span<const long> n_range, const Settings& cfg) {
  const SymbolInfimum s = symbol_inf(family, n_range, cfg);
  Certificate cert;
  cert.kind = CertificateKind::Invertibility;
  describe(cert, family, s);
  cert.margin("symbol_inf", s.value);
  cert.margin("inverse_norm", s.value > 0.0 ? 1.0 / s.value : std::numeric_limits<double>::infinity());
  if (s.near_boundary) {
    cert.verdict = Verdict::Indeterminate;
  } else {
    cert.verdict = s.value > cfg.invertibility_tol ? Verdict::Certified : Verdict::NotCertified;
  }
  return cert;
}

double TailSpec::partial_sum(long j_max) const {
  double total = 0.0;
  for (long j = 2; j <= j_max; ++j) total += sup_b(j);
  return total;
}

Certificate perturbation_certificate(const SymbolFamily& family, const TailSpec& tail, std::span<const long> n_range,
                                     const Settings& cfg) {
  if (!std::isfinite(tail.tail_sum) || tail.tail_sum < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "tail bound must be finite and nonnegative");
  }
  const SymbolInfimum s = symbol_inf(family, n_range, cfg);
  Certificate cert;
  cert.kind = CertificateKind::Perturbation;
  describe(cert, family, s);
  cert.margin("tail_sum", tail.tail_sum);
  cert.margin("symbol_inf", s.value);
  cert.margin("margin", s.value - tail.tail_sum);
  const bool ok = s.value > cfg.invertibility_tol && tail.tail_sum < s.value;
  cert.verdict = ok ? Verdict::Certified : (s.near_boundary ? Verdict::Indeterminate : Verdict::NotCertified);
  return cert;
}

SectionMatrix::SectionMatrix(long n, std::vector<Entry> entries) : n_(n), entries_(std::move(entries)) {
  if (n_ < 1) throw Error(ErrorCode::InvalidArgument, "section size must be positive");
}

cplx SectionMatrix::at(long row, long col) const {
  cplx v = 0.0;
  for (const auto& e : entries_) {
    if (e.row == row && e.col == col) v += e.value;
  }
  return v;
}

bool SectionMatrix::is_real() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.value.imag() == 0.0; });
}

Eigen::MatrixXcd SectionMatrix::dense() const {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n_, n_);
  for (const auto& e : entries_) a(e.row, e.col) += e.value;
  return a;
}

Eigen::MatrixXd SectionMatrix::dense_real() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
  for (const auto& e : entries_) a(e.row, e.col) += e.value.real();
  return a;
}

SectionMatrix finite_section(const SectionCoefficient& cj, long n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "section size must be positive");
  std::vector<SectionMatrix::Entry> entries;
  for (long col = 1; col <= n; ++col) {
    entries.push_back({col - 1, col - 1, 1.0});
    for (long j = 2; j * col <= n; ++j) {
      const cplx v = cj(j, col);
      if (v != cplx{0.0}) entries.push_back({j * col - 1, col - 1, v});
    }
  }
  return SectionMatrix(n, std::move(entries));
}

double smallest_singular(const SectionMatrix& section) {
  const lapack_int n = static_cast<lapack_int>(section.size());
  std::vector<double> s(static_cast<std::size_t>(n));
  lapack_int info = 0;
  if (section.is_real()) {
    Eigen::MatrixXd a = section.dense_real();
    info = LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'N', n, n, a.data(), n, s.data(), nullptr, 1, nullptr, 1);
  } else {
    Eigen::MatrixXcd a = section.dense();
    info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N', n, n, reinterpret_cast<lapack_complex_double*>(a.data()), n,
                          s.data(), nullptr, 1, nullptr, 1);
  }
  if (info != 0) throw Error(ErrorCode::NonConvergence, "SVD did not converge");
  return s.back();
}

std::vector<cplx> neumann_inverse(std::span<const cplx> a, int order) {
  std::vector<cplx> b(static_cast<std::size_t>(order) + 1, cplx{0.0});
  b[0] = 1.0;
  for (int k = 1; k <= order; ++k) {
    cplx acc = 0.0;
    for (int i = 1; i <= k && i <= static_cast<int>(a.size()); ++i) acc += a[i - 1] * b[k - i];
    b[k] = -acc;
  }
  return b;
}

}  // namespace spreadcert
