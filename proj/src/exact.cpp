#include "rct/exact.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <boost/math/special_functions/beta.hpp>

namespace rct {

namespace {

count_t checked_total(std::span<const count_t> counts) {
  count_t total = 0;
  for (count_t c : counts) {
    if (c < 0) throw DomainError("counts must be non-negative");
    total += c;
  }
  return total;
}

void require_length(count_t m, std::size_t len) {
  if (m < 2) throw DomainError("spine length m must be >= 2");
  if (static_cast<count_t>(len) != m) {
    throw DomainError("expected " + std::to_string(m) + " entries, got " +
                      std::to_string(len));
  }
}

}  // namespace

UrnComposition::UrnComposition(std::vector<count_t> initial) : tau(std::move(initial)) {
  if (tau.empty()) throw DomainError("urn needs at least one colour");
  for (count_t t : tau) {
    if (t <= 0) throw DomainError("initial ball counts must be positive");
  }
  tau0 = std::accumulate(tau.begin(), tau.end(), count_t{0});
}

UrnComposition caterpillar_urn(count_t m) { return UrnComposition(spine_offsets(m)); }

DirichletParams::DirichletParams(std::vector<double> a) : alpha(std::move(a)) {
  if (alpha.size() < 2) throw DomainError("Dirichlet needs at least 2 parameters");
  for (double x : alpha) {
    if (!(x > 0.0)) throw DomainError("Dirichlet parameters must be positive");
  }
}

double DirichletParams::total() const {
  return std::accumulate(alpha.begin(), alpha.end(), 0.0);
}

double log_pochhammer(double x, count_t k) {
  if (!(x > 0.0)) throw DomainError("log_pochhammer requires x > 0");
  if (k < 0) throw DomainError("log_pochhammer requires k >= 0");
  if (k == 0) return 0.0;
  return std::lgamma(x + static_cast<double>(k)) - std::lgamma(x);
}

double log_multinomial_coeff(std::span<const count_t> counts) {
  const count_t n = checked_total(counts);
  double out = std::lgamma(static_cast<double>(n) + 1.0);
  for (count_t c : counts) out -= std::lgamma(static_cast<double>(c) + 1.0);
  return out;
}

double uniform_leaf_log_pmf(count_t m, std::span<const count_t> leaves) {
  require_length(m, leaves.size());
  const count_t n = checked_total(leaves);
  return log_multinomial_coeff(leaves) - static_cast<double>(n) * std::log(static_cast<double>(m));
}

double uniform_leaf_pmf(count_t m, std::span<const count_t> leaves) {
  return std::exp(uniform_leaf_log_pmf(m, leaves));
}

double uniform_degree_pmf(count_t m, std::span<const count_t> degrees) {
  require_length(m, degrees.size());
  for (count_t i = 1; i <= m; ++i) {
    if (degrees[static_cast<std::size_t>(i - 1)] < spine_offset(m, i)) return 0.0;
  }
  // Sum fixes n = total - (2m - 2) >= 0, which the support check guarantees.
  const count_t trials = checked_total(degrees);
  return std::exp(log_multinomial_coeff(degrees) -
                  static_cast<double>(trials) * std::log(static_cast<double>(m)));
}

double urn_log_pmf(const UrnComposition& urn, std::span<const count_t> draws) {
  if (draws.size() != urn.tau.size()) throw DomainError("draw vector length must match urn colours");
  const count_t n = checked_total(draws);
  double out = log_multinomial_coeff(draws) - log_pochhammer(static_cast<double>(urn.tau0), n);
  for (std::size_t i = 0; i < draws.size(); ++i) {
    out += log_pochhammer(static_cast<double>(urn.tau[i]), draws[i]);
  }
  return out;
}

double pa_joint_log_pmf(count_t m, std::span<const count_t> draws) {
  require_length(m, draws.size());
  return urn_log_pmf(caterpillar_urn(m), draws);
}

double pa_joint_pmf(count_t m, std::span<const count_t> draws) {
  return std::exp(pa_joint_log_pmf(m, draws));
}

DirichletParams dirichlet_limit_params(count_t m) {
  const auto offsets = spine_offsets(m);
  return DirichletParams(std::vector<double>(offsets.begin(), offsets.end()));
}

double dirichlet_log_density(const DirichletParams& params, std::span<const double> theta) {
  if (theta.size() != params.alpha.size()) throw DomainError("theta length must match alpha");
  double sum = 0.0;
  for (double t : theta) {
    if (!(t >= 0.0)) throw DomainError("theta must have non-negative coordinates");
    sum += t;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw DomainError("theta must lie on the unit simplex");

  double out = std::lgamma(params.total());
  for (std::size_t i = 0; i < theta.size(); ++i) {
    const double a = params.alpha[i];
    out -= std::lgamma(a);
    if (a != 1.0) {
      if (theta[i] == 0.0) {
        return a > 1.0 ? -std::numeric_limits<double>::infinity()
                       : std::numeric_limits<double>::infinity();
      }
      out += (a - 1.0) * std::log(theta[i]);
    }
  }
  return out;
}

BetaParams beta_marginal_params(count_t m, count_t i) {
  if (m < 2) throw DomainError("spine length m must be >= 2");
  if (i < 1 || i > m) throw DomainError("spine index out of range");
  const auto a = static_cast<double>(spine_offset(m, i));
  return {a, static_cast<double>(2 * m - 2) - a};
}

double beta_cdf(const BetaParams& params, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return boost::math::ibeta(params.a, params.b, x);
}

}  // namespace rct
