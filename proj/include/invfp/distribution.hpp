#pragma once

#include "invfp/bigint.hpp"
#include "invfp/weights.hpp"

#include <map>
#include <optional>

namespace invfp {

// The biased fixed-point law at length n: P(fp = j) = w_j q^j / sum_i w_i q^i.
// Exact mode keeps every probability as a rational; floating mode evaluates
// in extended precision and stores doubles (needed when q itself is
// irrational, e.g. q^sqrt(k/n)).
struct FpDistribution {
  enum class Mode { Exact, Floating };

  Mode mode = Mode::Exact;
  int n = 0;
  BigRat q_exact;      // meaningful in exact mode
  double q = 1.0;      // float view of the bias, always set
  std::map<int, BigRat> probs_exact;  // exact mode only; support = nonzero weights
  std::map<int, double> probs;        // always set

  bool parity_ok() const {
    for (const auto& [j, p] : probs) {
      if ((j & 1) != (n & 1) && p != 0.0) return false;
    }
    return true;
  }
};

FpDistribution biased_distribution(const WeightPolynomial& w, const BigRat& q);
FpDistribution biased_distribution(const WeightPolynomial& w, double q);

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
  std::optional<BigRat> mean_exact;      // set in exact mode
  std::optional<BigRat> variance_exact;  // set in exact mode
};

Moments exact_moments(const FpDistribution& d);

}  // namespace invfp
