#include "rct/gini.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rct {

namespace {

template <typename T>
T sorted_pairwise_sum(std::vector<T> x) {
  std::sort(x.begin(), x.end());
  const auto n = static_cast<T>(x.size());
  T acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc += (T(2) * static_cast<T>(i + 1) - n - T(1)) * x[i];
  }
  return T(2) * acc;
}

template <typename T>
LorenzCurve lorenz_impl(std::span<const T> values) {
  std::vector<T> x(values.begin(), values.end());
  if (std::any_of(x.begin(), x.end(), [](T v) { return v < T(0); })) {
    throw DomainError("Lorenz curve needs non-negative values");
  }
  std::sort(x.begin(), x.end());
  const T total = std::accumulate(x.begin(), x.end(), T(0));
  if (!(total > T(0))) throw DomainError("Lorenz curve needs at least one positive value");

  LorenzCurve curve;
  curve.points.reserve(x.size() + 1);
  curve.points.push_back({0.0, 0.0});
  const auto N = static_cast<double>(x.size());
  T prefix = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    prefix += x[k];
    curve.points.push_back({static_cast<double>(k + 1) / N,
                            static_cast<double>(prefix) / static_cast<double>(total)});
  }
  curve.points.back() = {1.0, 1.0};
  return curve;
}

}  // namespace

count_t pairwise_abs_diff_sum(std::span<const count_t> values) {
  return sorted_pairwise_sum(std::vector<count_t>(values.begin(), values.end()));
}

double pairwise_abs_diff_sum(std::span<const double> values) {
  return sorted_pairwise_sum(std::vector<double>(values.begin(), values.end()));
}

double gini_coefficient(std::span<const double> values) {
  const double total = std::accumulate(values.begin(), values.end(), 0.0);
  if (!(total > 0.0)) throw DomainError("Gini index needs a positive total");
  return pairwise_abs_diff_sum(values) /
         (2.0 * static_cast<double>(values.size()) * total);
}

double gini_coefficient(std::span<const count_t> values) {
  const count_t total = std::accumulate(values.begin(), values.end(), count_t{0});
  if (total <= 0) throw DomainError("Gini index needs a positive total");
  return static_cast<double>(pairwise_abs_diff_sum(values)) /
         (2.0 * static_cast<double>(values.size()) * static_cast<double>(total));
}

double gini_type1(const CaterpillarTree& tree) {
  return gini_coefficient(depths(tree).values());
}

double gini_type2(const CaterpillarTree& tree) {
  if (tree.n() < 1) throw DomainError("type-II Gini index is undefined for n = 0");
  return gini_coefficient(tree.leaves());
}

GiniEstimate estimate_from_replications(std::span<const double> values) {
  if (values.empty()) throw DomainError("need at least one replication");
  const auto R = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / R;
  GiniEstimate est{mean, 0.0, static_cast<count_t>(values.size())};
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    est.std_error = std::sqrt(ss / (R - 1.0) / R);
  }
  return est;
}

LorenzCurve lorenz(std::span<const double> values) { return lorenz_impl(values); }

LorenzCurve lorenz(std::span<const count_t> values) { return lorenz_impl(values); }

double gini_from_lorenz(const LorenzCurve& curve) {
  double area = 0.0;
  for (std::size_t k = 1; k < curve.points.size(); ++k) {
    const auto& a = curve.points[k - 1];
    const auto& b = curve.points[k];
    area += 0.5 * (b.population_share - a.population_share) * (a.wealth_share + b.wealth_share);
  }
  return 1.0 - 2.0 * area;
}

std::vector<LabeledValue> gini1_limit(GrowthModel model, count_t m) {
  if (model == GrowthModel::Uniform) return {{"uniform", gini1_limit_uniform<double>(m)}};
  const auto pa = gini1_limit_pa<double>(m);
  return {{"pa_stated", pa.stated}, {"pa_leading_terms", pa.leading_terms}};
}

}  // namespace rct
