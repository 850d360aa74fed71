#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace invfp {

// splitmix64 finalizer; spreads (seed, index) into independent engine seeds.
std::uint64_t mix64(std::uint64_t x);

// Engine for the index-th draw of a run.  Seeding per draw makes the sample
// stream independent of thread scheduling, so parallel and serial runs agree
// bit for bit.
std::mt19937_64 stream_engine(std::uint64_t seed, std::uint64_t index);

// Eigenvalues (sorted descending) of a GOE matrix projected to trace 0:
// diagonal N(0,1), off-diagonal N(0,1/2), then M -= (tr M / k) I.  For the
// Gaussian ensemble the trace is independent of the traceless part, so the
// projection IS conditioning on trace 0.
std::vector<double> sample_goe_traceless(int k, std::mt19937_64& rng);

// S_k = Lambda_1 - Lambda_2 + Lambda_3 - ...; input must be sorted descending.
double alternating_sum(std::span<const double> eigs);

struct WeightedSample {
  int k = 0;
  double q = 1.0;
  std::uint64_t seed = 0;
  std::vector<double> values;   // S_k draws, in draw order
  std::vector<double> weights;  // q^{S_k} tilts
  double ess = 0.0;             // (sum w)^2 / sum w^2

  // Right-continuous weighted empirical cdf.
  double cdf(double x) const;

  // Sorted-by-value view with cumulative weights; built once after sampling.
  std::vector<double> sorted_values;
  std::vector<double> cum_weights;
  double total_weight = 0.0;
};

void finalize_weighted_sample(WeightedSample& s);

// count draws of S_k with self-normalized tilt weights q^{S_k}; deterministic
// given (k, q, count, seed) regardless of thread count.
WeightedSample xk_weighted_sample(int k, double q, long long count, std::uint64_t seed);
WeightedSample xk_weighted_sample_serial(int k, double q, long long count, std::uint64_t seed);

// Not all tilts are healthy; below count/10 the sample is flagged.
bool ess_is_low(const WeightedSample& s);

}  // namespace invfp
