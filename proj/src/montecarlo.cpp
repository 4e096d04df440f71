#include "rct/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rct/parallel.hpp"

namespace rct {

std::string_view to_string(Metric metric) {
  switch (metric) {
    case Metric::GiniI:
      return "gini1";
    case Metric::GiniII:
      return "gini2";
    case Metric::Moments:
      return "moments";
    case Metric::Lorenz:
      return "lorenz";
    case Metric::Marginal:
      return "marginal";
  }
  return "unknown";
}

Metric parse_metric(std::string_view name) {
  for (Metric m : {Metric::GiniI, Metric::GiniII, Metric::Moments, Metric::Lorenz,
                   Metric::Marginal}) {
    if (name == to_string(m)) return m;
  }
  throw DomainError("unknown metric '" + std::string(name) + "'");
}

void ExperimentConfig::validate() const {
  if (models.empty()) throw DomainError("experiment needs at least one model");
  if (m_values.empty()) throw DomainError("experiment needs at least one m value");
  if (R < 1) throw DomainError("replication count R must be >= 1");
  if (n < 0) throw DomainError("step count n must be >= 0");
  for (count_t m : m_values) {
    if (m < 2) throw DomainError("every m must be >= 2");
  }
}

namespace {

std::vector<std::string> default_notes() {
  return {"std_error = sample sd / sqrt(R); 0 when R = 1",
          "acceptance gates (4 standard errors, KS < 0.05) are tool-chosen thresholds"};
}

// Per-replication statistic, evaluated in parallel and returned in
// replication order.
template <typename Stat>
std::vector<double> per_replication(GrowthModel model, count_t m, count_t n, count_t R,
                                    std::uint64_t seed, unsigned threads, Stat&& stat) {
  std::vector<double> out(static_cast<std::size_t>(R));
  parallel_for(out.size(), threads, [&](std::size_t r) {
    out[r] = stat(grow(model, m, n, SeedSpec{seed, r}));
  });
  return out;
}

}  // namespace

ExperimentResult run_gini_sweep(const ExperimentConfig& config) {
  config.validate();
  if (config.metric != Metric::GiniI && config.metric != Metric::GiniII) {
    throw DomainError("gini sweep needs metric gini1 or gini2");
  }
  const bool type1 = config.metric == Metric::GiniI;
  if (!type1 && config.n < 1) throw DomainError("type-II Gini sweep needs n >= 1");

  ExperimentResult result;
  result.base_seed = config.base_seed;
  result.notes = default_notes();
  for (GrowthModel model : config.models) {
    for (count_t m : config.m_values) {
      const auto values = per_replication(
          model, m, config.n, config.R, config.base_seed, config.threads,
          [type1](const CaterpillarTree& t) { return type1 ? gini_type1(t) : gini_type2(t); });
      const GiniEstimate est = estimate_from_replications(values);
      result.rows.push_back({model, m, config.n, config.R, std::string(to_string(config.metric)),
                             est.value, est.std_error, config.base_seed});
    }
  }
  return result;
}

LorenzCurve average_curves(std::span<const LorenzCurve> curves) {
  if (curves.empty()) throw DomainError("no curves to average");
  LorenzCurve out = curves.front();
  for (auto& p : out.points) p.wealth_share = 0.0;
  for (const auto& c : curves) {
    if (c.points.size() != out.points.size()) {
      throw DomainError("cannot average Lorenz curves on different grids");
    }
    for (std::size_t k = 0; k < c.points.size(); ++k) {
      out.points[k].wealth_share += c.points[k].wealth_share;
    }
  }
  const auto R = static_cast<double>(curves.size());
  for (auto& p : out.points) p.wealth_share /= R;
  out.points.front().wealth_share = 0.0;
  out.points.back().wealth_share = 1.0;
  return out;
}

namespace {

// Sums curves chunk by chunk so memory stays bounded; chunks are reduced in
// replication order.
LorenzBatchEntry lorenz_for(GrowthModel model, count_t m, const ExperimentConfig& config) {
  constexpr std::size_t kChunk = 64;
  const auto R = static_cast<std::size_t>(config.R);
  std::vector<double> depth_sum, leaf_sum;
  LorenzCurve depth_grid, leaf_grid;
  std::vector<LorenzCurve> depth_chunk(kChunk), leaf_chunk(kChunk);

  for (std::size_t start = 0; start < R; start += kChunk) {
    const std::size_t len = std::min(kChunk, R - start);
    parallel_for(len, config.threads, [&](std::size_t k) {
      const auto tree = grow(model, m, config.n, SeedSpec{config.base_seed, start + k});
      depth_chunk[k] = lorenz(depths(tree).values());
      leaf_chunk[k] = lorenz(tree.leaves());
    });
    if (start == 0) {
      depth_grid = depth_chunk[0];
      leaf_grid = leaf_chunk[0];
      depth_sum.assign(depth_grid.points.size(), 0.0);
      leaf_sum.assign(leaf_grid.points.size(), 0.0);
    }
    for (std::size_t k = 0; k < len; ++k) {
      for (std::size_t p = 0; p < depth_sum.size(); ++p) {
        depth_sum[p] += depth_chunk[k].points[p].wealth_share;
      }
      for (std::size_t p = 0; p < leaf_sum.size(); ++p) {
        leaf_sum[p] += leaf_chunk[k].points[p].wealth_share;
      }
    }
  }

  auto finish = [R](LorenzCurve grid, const std::vector<double>& sum) {
    for (std::size_t p = 0; p < sum.size(); ++p) {
      grid.points[p].wealth_share = sum[p] / static_cast<double>(R);
    }
    grid.points.front().wealth_share = 0.0;
    grid.points.back().wealth_share = 1.0;
    return grid;
  };
  return {model, m, config.R, finish(std::move(depth_grid), depth_sum),
          finish(std::move(leaf_grid), leaf_sum)};
}

}  // namespace

std::vector<LorenzBatchEntry> run_lorenz_batch(const ExperimentConfig& config) {
  config.validate();
  if (config.n < 1) throw DomainError("Lorenz batch needs n >= 1");
  std::vector<LorenzBatchEntry> out;
  for (GrowthModel model : config.models) {
    for (count_t m : config.m_values) out.push_back(lorenz_for(model, m, config));
  }
  return out;
}

VectorX<double> EmpiricalMoments::mean_std_error() const {
  return (summary.cov.diagonal() / static_cast<double>(R)).cwiseSqrt();
}

EmpiricalMoments empirical_moments(std::span<const CaterpillarTree> trees) {
  if (trees.empty()) throw DomainError("empirical moments need at least one tree");
  const count_t m = trees.front().m();
  const count_t n = trees.front().n();
  for (const auto& t : trees) {
    if (t.m() != m || t.n() != n) throw DomainError("trees must share the same (m, n)");
  }

  const auto R = static_cast<count_t>(trees.size());
  const auto M = static_cast<std::size_t>(m);
  std::vector<__int128> sum(M, 0);
  std::vector<__int128> cross(M * M, 0);
  for (const auto& t : trees) {
    const DegreeVector d = degrees(t);
    const auto v = d.values();
    for (std::size_t i = 0; i < M; ++i) {
      sum[i] += v[i];
      for (std::size_t j = 0; j < M; ++j) cross[i * M + j] += static_cast<__int128>(v[i]) * v[j];
    }
  }

  EmpiricalMoments out;
  out.R = R;
  out.scatter.resize(m, m);
  out.summary.mean.resize(m);
  out.summary.cov.resize(m, m);
  const double denom = R > 1 ? static_cast<double>(R) * static_cast<double>(R - 1) : 1.0;
  for (std::size_t i = 0; i < M; ++i) {
    out.summary.mean(static_cast<Eigen::Index>(i)) =
        static_cast<double>(sum[i]) / static_cast<double>(R);
    for (std::size_t j = 0; j < M; ++j) {
      const __int128 s = static_cast<__int128>(R) * cross[i * M + j] - sum[i] * sum[j];
      if (s > INT64_MAX || s < INT64_MIN) throw DomainError("scatter matrix overflows int64");
      const auto ii = static_cast<Eigen::Index>(i), jj = static_cast<Eigen::Index>(j);
      out.scatter(ii, jj) = static_cast<std::int64_t>(s);
      out.summary.cov(ii, jj) = R > 1 ? static_cast<double>(s) / denom : 0.0;
    }
  }
  return out;
}

double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw DomainError("KS distance needs at least one sample");
  std::sort(samples.begin(), samples.end());
  const auto N = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const double f = cdf(samples[k]);
    d = std::max({d, static_cast<double>(k + 1) / N - f, f - static_cast<double>(k) / N});
  }
  return d;
}

MarginalCheck marginal_convergence_check(count_t m, count_t n, count_t R,
                                         std::uint64_t base_seed, count_t vertex,
                                         unsigned threads) {
  if (n < 1) throw DomainError("marginal check needs n >= 1 (D/n undefined at n = 0)");
  if (R < 1) throw DomainError("replication count R must be >= 1");
  MarginalCheck out;
  out.reference = beta_marginal_params(m, vertex);
  out.vertex = vertex;
  out.samples = R;
  auto samples = per_replication(
      GrowthModel::PreferentialAttachment, m, n, R, base_seed, threads,
      [&](const CaterpillarTree& t) {
        return static_cast<double>(t.leaves_at(vertex) + spine_offset(m, vertex)) /
               static_cast<double>(n);
      });
  const BetaParams ref = out.reference;
  out.ks = ks_distance(std::move(samples), [ref](double x) { return beta_cdf(ref, x); });
  return out;
}

namespace {

ExperimentResult run_moments(const ExperimentConfig& config) {
  ExperimentResult result;
  result.base_seed = config.base_seed;
  result.notes = default_notes();
  for (GrowthModel model : config.models) {
    for (count_t m : config.m_values) {
      const auto trees = replicate(model, m, config.n, config.R, config.base_seed, config.threads);
      const EmpiricalMoments em = empirical_moments(trees);
      const VectorX<double> exact = model == GrowthModel::Uniform
                                        ? uniform_moments<double>(m, config.n).mean
                                        : pa_mean<double>(m, config.n);
      const VectorX<double> se = em.mean_std_error();
      double worst = 0.0;
      for (Eigen::Index i = 0; i < m; ++i) {
        const double diff = std::abs(em.summary.mean(i) - exact(i));
        // Zero spread (n = 0 or R = 1) leaves only exact agreement meaningful.
        const double z = se(i) > 0.0 ? diff / se(i) : (diff == 0.0 ? 0.0 : INFINITY);
        worst = std::max(worst, z);
      }
      result.rows.push_back({model, m, config.n, config.R, "moments_max_abs_z", worst, 0.0,
                             config.base_seed});
    }
  }
  return result;
}

ExperimentResult run_marginal(const ExperimentConfig& config) {
  ExperimentResult result;
  result.base_seed = config.base_seed;
  result.notes = default_notes();
  for (GrowthModel model : config.models) {
    if (model != GrowthModel::PreferentialAttachment) {
      throw DomainError("marginal check is defined for the pa model only");
    }
    for (count_t m : config.m_values) {
      const auto check = marginal_convergence_check(m, config.n, config.R, config.base_seed,
                                                    config.vertex, config.threads);
      result.rows.push_back({model, m, config.n, config.R,
                             "marginal_ks_v" + std::to_string(config.vertex), check.ks, 0.0,
                             config.base_seed});
    }
  }
  return result;
}

}  // namespace

ExperimentResult summarize_lorenz(std::span<const LorenzBatchEntry> entries,
                                  const ExperimentConfig& config) {
  ExperimentResult result;
  result.base_seed = config.base_seed;
  result.notes = default_notes();
  const bool depth = config.view == LorenzView::Depth;
  for (const auto& e : entries) {
    const double g = gini_from_lorenz(depth ? e.depth_curve : e.leaf_curve);
    result.rows.push_back({e.model, e.m, config.n, config.R,
                           depth ? "lorenz1_gini" : "lorenz2_gini", g, 0.0, config.base_seed});
  }
  return result;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  switch (config.metric) {
    case Metric::GiniI:
    case Metric::GiniII:
      return run_gini_sweep(config);
    case Metric::Moments:
      return run_moments(config);
    case Metric::Marginal:
      return run_marginal(config);
    case Metric::Lorenz:
      return summarize_lorenz(run_lorenz_batch(config), config);
  }
  throw DomainError("unhandled metric");
}

}  // namespace rct
