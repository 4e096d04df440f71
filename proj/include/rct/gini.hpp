// Gini indices of caterpillar trees and Lorenz curves.
//
// Type I treats every vertex as a member of the population with wealth equal
// to its depth below the leftmost spine vertex.  Type II restricts the
// population to the m spine vertices with wealth equal to their leaf counts.
// Both use sum_u sum_v |x_u - x_v| / (2 N sum_v x_v) over ordered pairs.
#ifndef RCT_GINI_HPP
#define RCT_GINI_HPP

#include <span>
#include <string>
#include <vector>

#include "rct/simulate.hpp"
#include "rct/tree.hpp"

namespace rct {

// sum_u sum_v |x_u - x_v| over ordered pairs, via a sort and the identity
// 2 sum_i (2i - N - 1) x_(i).  The integer overload is exact.
count_t pairwise_abs_diff_sum(std::span<const count_t> values);
double pairwise_abs_diff_sum(std::span<const double> values);

// Pairwise-difference Gini of a wealth vector.  Requires a positive total.
double gini_coefficient(std::span<const double> values);
double gini_coefficient(std::span<const count_t> values);

double gini_type1(const CaterpillarTree& tree);
// Requires n >= 1.
double gini_type2(const CaterpillarTree& tree);

struct GiniEstimate {
  double value = 0.0;
  double std_error = 0.0;  // 0 when replications == 1
  count_t replications = 0;
};

// Mean and standard error (sample sd / sqrt(R)) over per-replication values.
GiniEstimate estimate_from_replications(std::span<const double> values);

struct LorenzPoint {
  double population_share;
  double wealth_share;
};

struct LorenzCurve {
  std::vector<LorenzPoint> points;
};

// Ascending sort, then point k = (k/N, prefix_k / total) after (0, 0).
// Rejects negative values and all-zero input.
LorenzCurve lorenz(std::span<const double> values);
LorenzCurve lorenz(std::span<const count_t> values);

// 1 - 2 * (trapezoidal area under the curve).
double gini_from_lorenz(const LorenzCurve& curve);

// Closed-form estimators of the expected type-I index ------------------------

template <typename Scalar>
struct UniformGini1ClosedForms {
  Scalar expanded;  // ((2m^2 - 2) n^2 + ...) / ((6m^2 + 6m) n^2 + ...), the primary form
  Scalar factored;  // (m-1)[(m+1)n^2 + ...] / (3m (n+m)[(m+1)n + m^2 - 2m])
};

template <typename Scalar = double>
UniformGini1ClosedForms<Scalar> gini1_hat_uniform_closed(count_t m_in, count_t n_in) {
  if (m_in < 2) throw DomainError("spine length m must be >= 2");
  if (n_in < 0) throw DomainError("step count n must be >= 0");
  const Scalar m(m_in), n(n_in);
  const Scalar m2 = m * m, m3 = m2 * m, m4 = m3 * m;
  const Scalar app_num = (Scalar(2) * m2 - Scalar(2)) * n * n +
                         (m3 + Scalar(4) * m2 - m + Scalar(2)) * n + Scalar(2) * m4 -
                         Scalar(2) * m2;
  const Scalar app_den = (Scalar(6) * m2 + Scalar(6) * m) * n * n + Scalar(12) * m3 * n +
                         Scalar(6) * m4 - Scalar(6) * m3;
  const Scalar txt_num =
      (m - Scalar(1)) * ((m + Scalar(1)) * n * n + (m2 + Scalar(3) * m - Scalar(1)) * n + m3 + m2);
  const Scalar txt_den =
      Scalar(3) * m * (n + m) * ((m + Scalar(1)) * n + m2 - Scalar(2) * m);
  return {app_num / app_den, txt_num / txt_den};
}

template <typename Scalar = double>
Scalar gini1_hat_pa_closed(count_t m_in, count_t n_in) {
  if (m_in < 2) throw DomainError("spine length m must be >= 2");
  if (n_in < 0) throw DomainError("step count n must be >= 0");
  const Scalar m(m_in), n(n_in);
  const Scalar m2 = m * m, m3 = m2 * m, m4 = m3 * m;
  const Scalar one(1), two(2);
  const Scalar num = two * (m - one) * (two * m2 - Scalar(7) * m + Scalar(9)) * n * n +
                     (Scalar(4) * m4 - Scalar(12) * m3 + Scalar(23) * m2 - Scalar(9) * m + Scalar(6)) * n +
                     two * m * (m - one) * (m - one) * (two * m - one) * (m + one);
  const Scalar den = Scalar(6) * (two * m - one) * (m - one) * (n + m) * (m * n + n + m2 - m);
  return num / den;
}

template <typename Scalar = double>
Scalar gini1_limit_uniform(count_t m) {
  if (m < 2) throw DomainError("spine length m must be >= 2");
  return Scalar(m - 1) / Scalar(3 * m);
}

template <typename Scalar>
struct PaGini1Limits {
  Scalar stated;         // (2m^2 - 7m + 9) / (6m^2 + 3m - 1)
  Scalar leading_terms;  // ratio of the n^2 coefficients of gini1_hat_pa_closed: / (6m^2 + 3m - 3)
};

template <typename Scalar = double>
PaGini1Limits<Scalar> gini1_limit_pa(count_t m_in) {
  if (m_in < 2) throw DomainError("spine length m must be >= 2");
  const Scalar m(m_in);
  const Scalar num = Scalar(2) * m * m - Scalar(7) * m + Scalar(9);
  return {num / (Scalar(6) * m * m + Scalar(3) * m - Scalar(1)),
          num / (Scalar(6) * m * m + Scalar(3) * m - Scalar(3))};
}

struct LabeledValue {
  std::string label;
  double value;
};

// Uniform: [{"uniform", (m-1)/(3m)}].  PA: [{"pa_stated", ...}, {"pa_leading_terms", ...}].
std::vector<LabeledValue> gini1_limit(GrowthModel model, count_t m);

}  // namespace rct

#endif  // RCT_GINI_HPP
