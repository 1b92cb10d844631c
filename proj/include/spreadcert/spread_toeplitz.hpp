#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "spreadcert/certificate.hpp"
#include "spreadcert/common.hpp"
#include "spreadcert/polyform.hpp"

namespace spreadcert {

enum class SymbolKind { ExplicitTable, WeierstrassGeometric, GrossPitaevskii };

/**
 * One-parameter description of a symbol family: every alpha_n equals
 * `symbol_at(t_n)` for some t_n in (0, sup]. When `monotone` holds the disc
 * minimum is non-increasing in t, so the infimum over n is the value at `sup`
 * and the reduction is rigorous. Otherwise (0, sup] is scanned on a grid.
 */
struct ParametricEnvelope {
  std::function<Polynomial(double)> symbol_at;
  double sup = 0.0;
  bool monotone = false;
};

/// Per-index symbols alpha_n(z) = 1 + sum_{k<=d} a_k(n) z^k of a spread-shift Toeplitz operator.
struct SymbolFamily {
  SymbolKind kind = SymbolKind::ExplicitTable;
  int period = 2;  // multiplicative period p: a_k(p n) = a_k(n)
  int degree = 0;
  std::function<cplx(long n, int k)> coeff;  // a_k(n), 1 <= k <= degree
  std::vector<double> envelope;              // sup_n |a_k(n)| for k = 1..degree, when known
  std::optional<ParametricEnvelope> parametric;

  Polynomial symbol(long n) const;
};

/// alpha_n = alpha for every n.
SymbolFamily constant_family(const Polynomial& alpha, int period = 2);

/// Rows indexed by the p-free part m of n, counted among integers coprime to
/// the multiplicative structure: row index = (position of m among non-multiples of p) mod rows.
SymbolFamily periodic_table_family(int period, std::vector<std::vector<cplx>> rows);

/// Largest m with n = p^k m and p not dividing m.
long p_free_part(long n, int p);

/// Checks a_k(p n) == a_k(n) for all n <= n_max.
bool is_periodic(const SymbolFamily& family, long n_max, double tol = 0.0);

std::vector<long> index_range(long first, long last);

struct SymbolInfimum {
  double value = 0.0;
  EvidenceMode mode = EvidenceMode::SampleHeuristic;
  long argmin_n = 0;          // sample mode
  double argmin_param = 0.0;  // envelope mode
  bool near_boundary = false;
};

/// s(T) = inf over z in D and n of |alpha_n(z)|. Families with a parametric
/// envelope use it; all others are minimised over the sampled indices, keeping
/// one representative per p-orbit.
SymbolInfimum symbol_inf(const SymbolFamily& family, std::span<const long> n_range = {}, const Settings& cfg = {});

/// Certificate for invertibility of T = I + sum A_k M_p^k, reporting ||T^{-1}|| = 1/s(T).
Certificate invertibility(const SymbolFamily& family, std::span<const long> n_range = {}, const Settings& cfg = {});

/// Bounds on the perturbation sum_{j>=2} M_j B_j.
struct TailSpec {
  std::function<double(long j)> sup_b;  // sup_n |b_j(n)|, j >= 2
  double tail_sum = 0.0;                // proven upper bound of sum_j sup_b(j)

  double partial_sum(long j_max) const;
};

/// Certified iff tail_sum < s(T) of the structured part.
Certificate perturbation_certificate(const SymbolFamily& family, const TailSpec& tail,
                                     std::span<const long> n_range = {}, const Settings& cfg = {});

/// N x N section of T = I + sum_{j>=2} M_j C_j in the basis h_1..h_N, stored sparsely.
class SectionMatrix {
public:
  struct Entry {
    long row;
    long col;
    cplx value;
  };

  SectionMatrix(long n, std::vector<Entry> entries);

  long size() const { return n_; }
  const std::vector<Entry>& entries() const { return entries_; }
  cplx at(long row, long col) const;
  bool is_real() const;

  Eigen::MatrixXcd dense() const;
  Eigen::MatrixXd dense_real() const;

private:
  long n_;
  std::vector<Entry> entries_;  // includes the unit diagonal
};

using SectionCoefficient = std::function<cplx(long j, long n)>;

/// A[n-1][n-1] = 1 and A[jn-1][n-1] = c_j(n) for j >= 2, jn <= N.
SectionMatrix finite_section(const SectionCoefficient& cj, long n);

/// Smallest singular value by dense LAPACK SVD (values only).
double smallest_singular(const SectionMatrix& section);

/// Coefficients of 1/alpha: b_0 = 1, b_k = -sum_{i=1}^{k} a_i b_{k-i}.
std::vector<cplx> neumann_inverse(std::span<const cplx> a, int order);

}  // namespace spreadcert
