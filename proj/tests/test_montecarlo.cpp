#include <doctest.h>

#include <cmath>

#include "rct/exact.hpp"
#include "rct/montecarlo.hpp"

using namespace rct;

namespace {

ExperimentConfig sweep(Metric metric, std::vector<GrowthModel> models, std::vector<count_t> ms,
                       count_t n, count_t R, std::uint64_t seed = 5) {
  ExperimentConfig c;
  c.models = std::move(models);
  c.m_values = std::move(ms);
  c.n = n;
  c.R = R;
  c.base_seed = seed;
  c.metric = metric;
  return c;
}

bool same_rows(const ExperimentResult& a, const ExperimentResult& b) {
  if (a.rows.size() != b.rows.size()) return false;
  for (std::size_t k = 0; k < a.rows.size(); ++k) {
    const auto &x = a.rows[k], &y = b.rows[k];
    if (x.model != y.model || x.m != y.m || x.n != y.n || x.R != y.R || x.metric != y.metric ||
        x.mean != y.mean || x.std_error != y.std_error || x.seed != y.seed) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("config validation and metric names") {
  auto c = sweep(Metric::GiniI, {GrowthModel::Uniform}, {5}, 10, 3);
  CHECK_NOTHROW(c.validate());
  c.R = 0;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c.R = 3;
  c.m_values = {5, 1};
  CHECK_THROWS_AS(c.validate(), DomainError);
  c.m_values = {};
  CHECK_THROWS_AS(c.validate(), DomainError);
  CHECK(parse_metric("gini2") == Metric::GiniII);
  CHECK(to_string(Metric::Marginal) == "marginal");
  CHECK_THROWS_AS(parse_metric("gini3"), DomainError);
}

TEST_CASE("gini sweeps are reproducible across thread counts") {
  auto c = sweep(Metric::GiniII, {GrowthModel::Uniform, GrowthModel::PreferentialAttachment}, {5, 20},
                 200, 64);
  c.threads = 1;
  const auto a = run_gini_sweep(c);
  c.threads = 4;
  const auto b = run_gini_sweep(c);
  CHECK(same_rows(a, b));
  REQUIRE(a.rows.size() == 4);
  CHECK(a.rows[0].model == GrowthModel::Uniform);
  CHECK(a.rows[3].model == GrowthModel::PreferentialAttachment);
  CHECK(a.rows[3].m == 20);
  for (const auto& r : a.rows) {
    CHECK(r.std_error >= 0.0);
    CHECK(r.mean >= 0.0);
    CHECK(r.mean <= 1.0);
  }
}

TEST_CASE("R = 1 reports zero standard error") {
  const auto r = run_gini_sweep(sweep(Metric::GiniI, {GrowthModel::Uniform}, {5}, 50, 1));
  CHECK(r.rows[0].std_error == 0.0);
  CHECK(r.rows[0].mean == gini_type1(grow(GrowthModel::Uniform, 5, 50, SeedSpec{5, 0})));
}

TEST_CASE("standard errors shrink like 1/sqrt(R)") {
  std::vector<double> se;
  for (count_t R : {100, 400, 1600}) {
    se.push_back(run_gini_sweep(sweep(Metric::GiniII, {GrowthModel::PreferentialAttachment}, {10}, 200, R))
                     .rows[0]
                     .std_error);
  }
  CHECK(se[0] / se[1] == doctest::Approx(2.0).epsilon(0.3));
  CHECK(se[1] / se[2] == doctest::Approx(2.0).epsilon(0.3));
}

TEST_CASE("empirical moments of PA trees agree with the exact moments") {
  const auto trees = replicate(GrowthModel::PreferentialAttachment, 5, 200, 3000, 77);
  const auto em = empirical_moments(trees);
  const auto exact = pa_moments(5, 200);
  const auto se = em.mean_std_error();
  for (Eigen::Index i = 0; i < 5; ++i) {
    CHECK(std::abs(em.summary.mean(i) - exact.mean(i)) <= 4.0 * se(i));
  }
  CHECK(em.scatter.rowwise().sum().isZero());
  // Covariance entries within 4 approximate standard errors
  // sqrt((s_ii s_jj + s_ij^2) / (R - 1)).
  for (Eigen::Index i = 0; i < 5; ++i) {
    for (Eigen::Index j = 0; j < 5; ++j) {
      const double s = std::sqrt((exact.cov(i, i) * exact.cov(j, j) + exact.cov(i, j) * exact.cov(i, j)) / 2999.0);
      CHECK(std::abs(em.summary.cov(i, j) - exact.cov(i, j)) <= 4.0 * s);
    }
  }
}

TEST_CASE("uniform leaf covariance over n approaches Sigma^(U)") {
  const count_t n = 500, R = 2000;
  const auto trees = replicate(GrowthModel::Uniform, 5, n, R, 404);
  const auto em = empirical_moments(trees);
  const auto sigma = uniform_asymptotic_cov(5).cov;
  for (Eigen::Index i = 0; i < 5; ++i) {
    for (Eigen::Index j = 0; j < 5; ++j) {
      const double s = std::sqrt((sigma(i, i) * sigma(j, j) + sigma(i, j) * sigma(i, j)) /
                                 static_cast<double>(R - 1));
      CHECK(std::abs(em.summary.cov(i, j) / static_cast<double>(n) - sigma(i, j)) <= 4.0 * s);
    }
  }
}

TEST_CASE("empirical_moments rejects mixed shapes") {
  std::vector<CaterpillarTree> mixed{new_tree(3), new_tree(4)};
  CHECK_THROWS_AS(empirical_moments(mixed), DomainError);
  std::vector<CaterpillarTree> mixed_n{new_tree(3), attach_leaf(new_tree(3), 1)};
  CHECK_THROWS_AS(empirical_moments(mixed_n), DomainError);
  CHECK_THROWS_AS(empirical_moments(std::vector<CaterpillarTree>{}), DomainError);
}

TEST_CASE("ks_distance") {
  auto uniform_cdf = [](double x) { return std::clamp(x, 0.0, 1.0); };
  CHECK(ks_distance({0.5}, uniform_cdf) == doctest::Approx(0.5));
  CHECK(ks_distance({0.25, 0.75}, uniform_cdf) == doctest::Approx(0.25));
  // Ties: both samples at 0.5 give a jump of 1 at 0.5.
  CHECK(ks_distance({0.5, 0.5}, uniform_cdf) == doctest::Approx(0.5));
  CHECK_THROWS_AS(ks_distance({}, uniform_cdf), DomainError);
}

TEST_CASE("marginal convergence check") {
  const auto m2 = marginal_convergence_check(2, 2000, 1500, 3);
  CHECK(m2.reference.a == 1.0);
  CHECK(m2.reference.b == 1.0);
  CHECK(m2.ks < 0.05);
  const auto m5 = marginal_convergence_check(5, 2000, 1500, 3, 3);
  CHECK(m5.reference.a == 2.0);
  CHECK(m5.reference.b == 6.0);
  CHECK(m5.ks < 0.05);
  CHECK_THROWS_AS(marginal_convergence_check(2, 0, 10, 3), DomainError);
}

TEST_CASE("Lorenz batches") {
  auto c = sweep(Metric::Lorenz, {GrowthModel::Uniform, GrowthModel::PreferentialAttachment}, {50}, 2000, 200);
  const auto entries = run_lorenz_batch(c);
  REQUIRE(entries.size() == 2);
  const auto& uni = entries[0].leaf_curve;
  const auto& pa = entries[1].leaf_curve;
  REQUIRE(uni.points.size() == 51);
  for (std::size_t k = 1; k + 1 < uni.points.size(); ++k) {
    CHECK(pa.points[k].wealth_share < uni.points[k].wealth_share);
  }
  CHECK(entries[0].depth_curve.points.size() == 50 + 2000 + 1);

  c.threads = 3;
  const auto again = run_lorenz_batch(c);
  for (std::size_t k = 0; k < uni.points.size(); ++k) {
    CHECK(again[0].leaf_curve.points[k].wealth_share == uni.points[k].wealth_share);
  }

  const auto rows = summarize_lorenz(entries, c);
  CHECK(rows.rows.size() == 2);
  CHECK(rows.rows[0].metric == "lorenz1_gini");

  c.n = 0;
  CHECK_THROWS_AS(run_lorenz_batch(c), DomainError);
}

TEST_CASE("averaging equal-wealth curves gives the diagonal") {
  const std::vector<count_t> eq{4, 4, 4, 4, 4};
  const std::vector<LorenzCurve> curves{lorenz(eq), lorenz(eq), lorenz(eq)};
  const auto avg = average_curves(curves);
  for (const auto& p : avg.points) CHECK(p.wealth_share == doctest::Approx(p.population_share));
  const std::vector<count_t> other{1, 2};
  const std::vector<LorenzCurve> bad{lorenz(eq), lorenz(other)};
  CHECK_THROWS_AS(average_curves(bad), DomainError);
}

TEST_CASE("run_experiment dispatch") {
  const auto mom = run_experiment(sweep(Metric::Moments, {GrowthModel::Uniform, GrowthModel::PreferentialAttachment},
                                        {4}, 100, 400));
  REQUIRE(mom.rows.size() == 2);
  for (const auto& r : mom.rows) CHECK(r.mean < 4.5);

  const auto marg = run_experiment(sweep(Metric::Marginal, {GrowthModel::PreferentialAttachment}, {2}, 500, 300));
  CHECK(marg.rows[0].metric == "marginal_ks_v1");
  CHECK_THROWS_AS(run_experiment(sweep(Metric::Marginal, {GrowthModel::Uniform}, {2}, 500, 10)), DomainError);

  const auto lor = run_experiment(sweep(Metric::Lorenz, {GrowthModel::Uniform}, {3}, 30, 5));
  CHECK(lor.rows.size() == 1);
  CHECK(lor.base_seed == 5);
  CHECK_FALSE(lor.notes.empty());
}
