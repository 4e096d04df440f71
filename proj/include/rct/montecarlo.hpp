// Replicated experiments over random caterpillar trees.
//
// Every experiment is a pure function of its configuration: replications are
// seeded through derive_seed(base_seed, r) and aggregated in replication
// order, so results are bitwise identical for any thread count.
#ifndef RCT_MONTECARLO_HPP
#define RCT_MONTECARLO_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rct/exact.hpp"
#include "rct/gini.hpp"
#include "rct/simulate.hpp"

namespace rct {

inline constexpr std::string_view kVersion = "rct 1.0.0";

enum class Metric { GiniI, GiniII, Moments, Lorenz, Marginal };

std::string_view to_string(Metric metric);
// gini1 | gini2 | moments | lorenz | marginal
Metric parse_metric(std::string_view name);

// Which wealth a Lorenz batch uses: vertex depths or spine leaf counts.
enum class LorenzView { Depth, Leaves };

struct ExperimentConfig {
  std::vector<GrowthModel> models;
  std::vector<count_t> m_values;
  count_t n = 500;
  count_t R = 500;
  std::uint64_t base_seed = 1;
  Metric metric = Metric::GiniI;
  // Spine vertex examined by the marginal check (1-based).
  count_t vertex = 1;
  // Wealth summarised by lorenz rows.
  LorenzView view = LorenzView::Depth;
  unsigned threads = 0;

  // Throws DomainError on empty grids, R < 1, m < 2 or n < 0.
  void validate() const;
};

struct ExperimentRow {
  GrowthModel model;
  count_t m;
  count_t n;
  count_t R;
  std::string metric;
  double mean;
  double std_error;
  std::uint64_t seed;
};

struct ExperimentResult {
  std::vector<ExperimentRow> rows;
  std::uint64_t base_seed = 0;
  std::string version{kVersion};
  // Statistical gates used by the experiment; chosen for this tool, not
  // taken from any published analysis.
  std::vector<std::string> notes;
};

// Mean and standard error of the type-I or type-II index for every
// (model, m) in the grid.
ExperimentResult run_gini_sweep(const ExperimentConfig& config);

struct LorenzBatchEntry {
  GrowthModel model;
  count_t m;
  count_t R;
  LorenzCurve depth_curve;  // type-I view, N = m + n points
  LorenzCurve leaf_curve;   // type-II view, N = m points
};

// Pointwise mean Lorenz curves over R trees for every (model, m).
// Requires n >= 1.
std::vector<LorenzBatchEntry> run_lorenz_batch(const ExperimentConfig& config);

// Pointwise average of curves sharing the same population grid.
LorenzCurve average_curves(std::span<const LorenzCurve> curves);

struct EmpiricalMoments {
  MomentSummary<double> summary;  // sample mean, sample covariance (R - 1)
  // R * sum_r d_ri d_rj - (sum_r d_ri)(sum_r d_rj), exact; rows sum to 0.
  MatrixX<std::int64_t> scatter;
  count_t R = 0;

  // Standard error of each mean entry, sqrt(cov_ii / R).
  VectorX<double> mean_std_error() const;
};

// Sample moments of the degree vectors.  Rejects an empty collection or
// trees of differing (m, n).
EmpiricalMoments empirical_moments(std::span<const CaterpillarTree> trees);

// sup_x |F_R(x) - cdf(x)| for the empirical CDF of the samples.
double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf);

struct MarginalCheck {
  double ks = 0.0;
  BetaParams reference{1.0, 1.0};
  count_t vertex = 1;
  count_t samples = 0;
};

// Grows R preferential-attachment trees and measures the KS distance of
// D_{vertex,n}/n to its Beta limit.  Requires n >= 1.
MarginalCheck marginal_convergence_check(count_t m, count_t n, count_t R,
                                         std::uint64_t base_seed, count_t vertex = 1,
                                         unsigned threads = 0);

// One row per batch entry holding gini_from_lorenz of the mean curve for
// config.view.
ExperimentResult summarize_lorenz(std::span<const LorenzBatchEntry> entries,
                                  const ExperimentConfig& config);

// Dispatches on config.metric.  Moments rows report the largest |z| of the
// sample degree means against the exact means; marginal rows report the KS
// distance; lorenz rows come from summarize_lorenz.
ExperimentResult run_experiment(const ExperimentConfig& config);

}  // namespace rct

#endif  // RCT_MONTECARLO_HPP
