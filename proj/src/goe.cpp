#include "invfp/goe.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace invfp {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mt19937_64 stream_engine(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(mix64(seed ^ mix64(index)));
}

std::vector<double> sample_goe_traceless(int k, std::mt19937_64& rng) {
  if (k < 2) throw std::invalid_argument("sample_goe_traceless: k must be >= 2");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd m(k, k);
  const double off = std::sqrt(0.5);
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      const double z = gauss(rng) * (i == j ? 1.0 : off);
      m(i, j) = z;
      m(j, i) = z;
    }
  }
  const double shift = m.trace() / k;
  for (int i = 0; i < k; ++i) m(i, i) -= shift;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  Eigen::VectorXd ev = solver.eigenvalues();  // ascending
  std::vector<double> out(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) out[static_cast<size_t>(i)] = ev(k - 1 - i);
  return out;
}

double alternating_sum(std::span<const double> eigs) {
  for (size_t i = 1; i < eigs.size(); ++i) {
    if (eigs[i] > eigs[i - 1]) {
      throw std::invalid_argument("alternating_sum: eigenvalues must be sorted descending");
    }
  }
  double s = 0.0;
  for (size_t i = 0; i < eigs.size(); ++i) s += (i % 2 == 0 ? 1.0 : -1.0) * eigs[i];
  return s;
}

void finalize_weighted_sample(WeightedSample& s) {
  std::vector<size_t> order(s.values.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (s.values[a] != s.values[b]) return s.values[a] < s.values[b];
    return a < b;
  });
  s.sorted_values.resize(order.size());
  s.cum_weights.resize(order.size());
  double cum = 0.0, sum_sq = 0.0;
  for (size_t i = 0; i < order.size(); ++i) {
    s.sorted_values[i] = s.values[order[i]];
    cum += s.weights[order[i]];
    s.cum_weights[i] = cum;
  }
  s.total_weight = cum;
  for (double w : s.weights) sum_sq += w * w;
  if (cum <= 0.0 || sum_sq <= 0.0) throw std::logic_error("weighted sample: nonpositive weights");
  s.ess = cum * cum / sum_sq;
}

double WeightedSample::cdf(double x) const {
  auto it = std::upper_bound(sorted_values.begin(), sorted_values.end(), x);
  if (it == sorted_values.begin()) return 0.0;
  const size_t idx = static_cast<size_t>(it - sorted_values.begin()) - 1;
  return cum_weights[idx] / total_weight;
}

namespace {

WeightedSample xk_sample_impl(int k, double q, long long count, std::uint64_t seed, bool parallel) {
  if (k < 2) throw std::invalid_argument("xk_weighted_sample: k must be >= 2");
  if (!(q > 0.0) || q > 1.0) throw std::invalid_argument("xk_weighted_sample: need 0 < q <= 1");
  if (count < 1) throw std::invalid_argument("xk_weighted_sample: count must be >= 1");

  WeightedSample s;
  s.k = k;
  s.q = q;
  s.seed = seed;
  s.values.resize(static_cast<size_t>(count));
  s.weights.resize(static_cast<size_t>(count));
  const double logq = std::log(q);

#pragma omp parallel for schedule(static) if (parallel)
  for (long long i = 0; i < count; ++i) {
    std::mt19937_64 rng = stream_engine(seed, static_cast<std::uint64_t>(i));
    std::vector<double> eigs = sample_goe_traceless(k, rng);
    const double sk = alternating_sum(eigs);
    s.values[static_cast<size_t>(i)] = sk;
    s.weights[static_cast<size_t>(i)] = std::exp(logq * sk);
  }

  finalize_weighted_sample(s);
  return s;
}

}  // namespace

WeightedSample xk_weighted_sample(int k, double q, long long count, std::uint64_t seed) {
  return xk_sample_impl(k, q, count, seed, true);
}

WeightedSample xk_weighted_sample_serial(int k, double q, long long count, std::uint64_t seed) {
  return xk_sample_impl(k, q, count, seed, false);
}

bool ess_is_low(const WeightedSample& s) {
  return s.ess < static_cast<double>(s.values.size()) / 10.0;
}

}  // namespace invfp
