// Exact and limiting distributions of the spine degree profile.
//
// Uniform growth: leaf counts are Multinomial(n, (1/m, ..., 1/m)).
// Preferential attachment: degrees evolve as an m-colour Polya-Eggenberger
// urn with identity replacement and initial composition (1, 2, ..., 2, 1),
// so the degree vector divided by n tends to Dir(1, 2, ..., 2, 1).
//
// Combinatorial quantities are evaluated in log space; probabilities are
// exponentiated only on return.  Moment formulas are templates over the
// scalar type so they can be evaluated in double, long double or an exact
// rational type.
#ifndef RCT_EXACT_HPP
#define RCT_EXACT_HPP

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "rct/tree.hpp"

namespace rct {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
struct MomentSummary {
  VectorX<Scalar> mean;
  MatrixX<Scalar> cov;
};

// Initial ball counts of the urn and their total.
struct UrnComposition {
  std::vector<count_t> tau;
  count_t tau0 = 0;

  explicit UrnComposition(std::vector<count_t> initial);
};

// (1, 2, ..., 2, 1) with total 2m - 2.
UrnComposition caterpillar_urn(count_t m);

struct DirichletParams {
  std::vector<double> alpha;

  explicit DirichletParams(std::vector<double> a);
  double total() const;
};

struct BetaParams {
  double a;
  double b;
};

// log(x (x+1) ... (x+k-1)); 0 for k = 0.  Requires x > 0.
double log_pochhammer(double x, count_t k);

// log(n! / prod counts_i!) with n = sum(counts).
double log_multinomial_coeff(std::span<const count_t> counts);

// P(L_n = l) for uniform growth, n = sum(l).
double uniform_leaf_log_pmf(count_t m, std::span<const count_t> leaves);
double uniform_leaf_pmf(count_t m, std::span<const count_t> leaves);

// Multinomial(n + 2m - 2; d) (1/m)^(n+2m-2) on the degree support
// (d_1, d_m >= 1, interior >= 2), zero elsewhere.  This is the closed-form
// degree formula as usually quoted, and is NOT the image of the leaf law under
// d = l + (1,2,...,2,1); compare with uniform_leaf_pmf before relying on it.
double uniform_degree_pmf(count_t m, std::span<const count_t> degrees);

// Urn probability that colour i is drawn s_i times in n = sum(s) draws.
double urn_log_pmf(const UrnComposition& urn, std::span<const count_t> draws);

// P(D_n = (1,2,...,2,1) + s) under preferential attachment.
double pa_joint_log_pmf(count_t m, std::span<const count_t> draws);
double pa_joint_pmf(count_t m, std::span<const count_t> draws);

DirichletParams dirichlet_limit_params(count_t m);

// Log density of Dir(alpha) at a point of the simplex.  Rejects points with
// negative coordinates or coordinates not summing to 1 within 1e-9.
double dirichlet_log_density(const DirichletParams& params, std::span<const double> theta);

// Limiting law of D_{i,n}/n: Beta(tau_i, tau0 - tau_i) with the initial urn.
BetaParams beta_marginal_params(count_t m, count_t i);

double beta_cdf(const BetaParams& params, double x);

// -- templates --------------------------------------------------------------

// Limit covariance of (L_n - n p)/sqrt(n) under uniform growth, with mean
// slot holding p = (1/m, ..., 1/m).
template <typename Scalar = double>
MomentSummary<Scalar> uniform_asymptotic_cov(count_t m) {
  if (m < 2) throw DomainError("spine length m must be >= 2");
  const Scalar mm = Scalar(m) * Scalar(m);
  MomentSummary<Scalar> out;
  out.mean = VectorX<Scalar>::Constant(m, Scalar(1) / Scalar(m));
  out.cov = MatrixX<Scalar>::Constant(m, m, Scalar(-1) / mm);
  for (count_t i = 0; i < m; ++i) out.cov(i, i) = Scalar(m - 1) / mm;
  return out;
}

// Exact finite-n moments of D_n under uniform growth: mean n/m + offset,
// covariance n * Sigma^(U).
template <typename Scalar = double>
MomentSummary<Scalar> uniform_moments(count_t m, count_t n) {
  if (n < 0) throw DomainError("step count n must be >= 0");
  MomentSummary<Scalar> out = uniform_asymptotic_cov<Scalar>(m);
  for (count_t i = 0; i < m; ++i) {
    out.mean(i) = Scalar(n) / Scalar(m) + Scalar(spine_offset(m, i + 1));
  }
  out.cov *= Scalar(n);
  return out;
}

template <typename Scalar = double>
VectorX<Scalar> pa_mean(count_t m, count_t n) {
  if (m < 2) throw DomainError("spine length m must be >= 2");
  if (n < 0) throw DomainError("step count n must be >= 0");
  VectorX<Scalar> mean(m);
  for (count_t i = 1; i <= m; ++i) {
    mean(i - 1) = (i == 1 || i == m)
                      ? Scalar(n) / Scalar(2 * (m - 1)) + Scalar(1)
                      : Scalar(n) / Scalar(m - 1) + Scalar(2);
  }
  return mean;
}

template <typename Scalar = double>
MatrixX<Scalar> pa_cov(count_t m, count_t n) {
  if (m < 2) throw DomainError("spine length m must be >= 2");
  if (n < 0) throw DomainError("step count n must be >= 0");
  const Scalar N(n);
  const Scalar den = Scalar((m - 1) * (m - 1) * (2 * m - 1));
  const Scalar cross = N * N + Scalar(2 * (m - 1)) * N;
  const Scalar interior_var = Scalar(m - 2) * cross / den;
  const Scalar endpoint_var =
      Scalar(2 * m - 3) * (N * N + Scalar(2 * m - 2) * N) / (Scalar(4) * den);

  MatrixX<Scalar> cov(m, m);
  for (count_t i = 1; i <= m; ++i) {
    const bool end_i = i == 1 || i == m;
    for (count_t j = 1; j <= m; ++j) {
      const bool end_j = j == 1 || j == m;
      Scalar v;
      if (i == j) {
        v = end_i ? endpoint_var : interior_var;
      } else if (end_i && end_j) {
        v = -cross / (Scalar(4) * den);
      } else if (end_i || end_j) {
        v = -cross / (Scalar(2) * den);
      } else {
        v = -cross / den;
      }
      cov(i - 1, j - 1) = v;
    }
  }
  return cov;
}

template <typename Scalar = double>
MomentSummary<Scalar> pa_moments(count_t m, count_t n) {
  return {pa_mean<Scalar>(m, n), pa_cov<Scalar>(m, n)};
}

// 2(m-1) d / (n + 2m - 2): a degree rescaled so that its conditional
// expectation one step ahead equals its current value.
template <typename Scalar = double>
Scalar martingale_value(count_t m, count_t n, count_t degree) {
  if (m < 2) throw DomainError("spine length m must be >= 2");
  if (n < 0) throw DomainError("step count n must be >= 0");
  return Scalar(2 * (m - 1)) * Scalar(degree) / Scalar(n + 2 * m - 2);
}

}  // namespace rct

#endif  // RCT_EXACT_HPP
