// Independent small-case oracles used by the test suites.  Nothing here calls
// into the closed-form code paths it is used to check.
#ifndef RCT_TESTS_ORACLES_HPP
#define RCT_TESTS_ORACLES_HPP

#include <cstdlib>
#include <functional>
#include <map>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include "rct/tree.hpp"

namespace oracle {

using rational = boost::multiprecision::cpp_rational;
using rct::count_t;
using Counts = std::vector<count_t>;

inline double to_double(const rational& q) { return q.convert_to<double>(); }

// Elementwise equality for Eigen objects over exact scalars.
template <typename A, typename B>
bool same_entries(const A& a, const B& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

// All vectors of `parts` non-negative integers summing to `total`.
inline std::vector<Counts> compositions(count_t total, count_t parts) {
  std::vector<Counts> out;
  Counts cur(static_cast<std::size_t>(parts), 0);
  std::function<void(std::size_t, count_t)> rec = [&](std::size_t i, count_t left) {
    if (i + 1 == cur.size()) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (count_t v = 0; v <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, total);
  return out;
}

// Walks every one of the m^n attachment sequences under preferential
// attachment, multiplying the exact step probabilities degree/total, and
// accumulates the probability of each final leaf vector.
inline std::map<Counts, rational> pa_sequence_enumeration(count_t m, count_t n) {
  std::map<Counts, rational> out;
  Counts leaves(static_cast<std::size_t>(m), 0);
  std::function<void(count_t, const rational&)> rec = [&](count_t step, const rational& p) {
    if (step == n) {
      out[leaves] += p;
      return;
    }
    count_t total = 0;
    for (count_t i = 1; i <= m; ++i) total += leaves[i - 1] + rct::spine_offset(m, i);
    for (count_t i = 1; i <= m; ++i) {
      const count_t deg = leaves[i - 1] + rct::spine_offset(m, i);
      ++leaves[i - 1];
      rec(step + 1, p * rational(deg, total));
      --leaves[i - 1];
    }
  };
  rec(0, rational(1));
  return out;
}

// Probability of one explicit attachment sequence (1-based spine indices).
inline rational pa_sequence_probability(count_t m, const std::vector<count_t>& sequence) {
  Counts leaves(static_cast<std::size_t>(m), 0);
  rational p(1);
  count_t total = 2 * m - 2;
  for (count_t i : sequence) {
    p *= rational(leaves[i - 1] + rct::spine_offset(m, i), total);
    ++leaves[i - 1];
    ++total;
  }
  return p;
}

inline rational factorial(count_t k) {
  rational f(1);
  for (count_t j = 2; j <= k; ++j) f *= j;
  return f;
}

inline rational multinomial(const Counts& c) {
  count_t n = 0;
  rational denom(1);
  for (count_t v : c) {
    n += v;
    denom *= factorial(v);
  }
  return factorial(n) / denom;
}

template <typename T>
T pairwise_brute(const std::vector<T>& x) {
  T acc = 0;
  for (const T& a : x)
    for (const T& b : x) acc += a > b ? a - b : b - a;
  return acc;
}

}  // namespace oracle

#endif  // RCT_TESTS_ORACLES_HPP
