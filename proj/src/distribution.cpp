#include "invfp/distribution.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace invfp {

namespace {

void check_weights(const WeightPolynomial& w) {
  for (const BigInt& c : w.coeffs) {
    if (c < 0) throw std::invalid_argument("biased_distribution: negative weight");
    if (c != 0) return;
  }
  throw std::invalid_argument("biased_distribution: all-zero weight polynomial");
}

}  // namespace

FpDistribution biased_distribution(const WeightPolynomial& w, const BigRat& q) {
  if (q <= 0) throw std::invalid_argument("biased_distribution: q must be positive");
  check_weights(w);

  // Scale q^j = num^j den^(n-j) / den^n; the common den^n cancels in the
  // normalization, so everything stays integral until the final ratio.
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);

  std::vector<BigInt> scaled(w.coeffs.size());
  BigInt num_pow = 1;
  for (size_t j = 0; j < w.coeffs.size(); ++j) {
    if (w.coeffs[j] != 0) {
      scaled[j] = w.coeffs[j] * num_pow * big_pow(den, static_cast<unsigned>(w.coeffs.size() - 1 - j));
    }
    num_pow *= num;
  }
  BigInt total = 0;
  for (const BigInt& s : scaled) total += s;

  FpDistribution d;
  d.mode = FpDistribution::Mode::Exact;
  d.n = w.n;
  d.q_exact = q;
  d.q = to_double(q);
  for (size_t j = 0; j < scaled.size(); ++j) {
    if (scaled[j] != 0) {
      BigRat p(scaled[j], total);
      d.probs[static_cast<int>(j)] = to_double(p);
      d.probs_exact[static_cast<int>(j)] = std::move(p);
    }
  }
  return d;
}

FpDistribution biased_distribution(const WeightPolynomial& w, double q) {
  if (!(q > 0)) throw std::invalid_argument("biased_distribution: q must be positive");
  check_weights(w);

  // Work in long double: weights reach ~1e1200 around n=4000, well inside
  // extended-precision range; q^j is evaluated in log space for stability.
  const long double logq = std::log(static_cast<long double>(q));
  std::vector<long double> mass(w.coeffs.size(), 0.0L);
  long double max_log = -std::numeric_limits<long double>::infinity();
  std::vector<long double> logs(w.coeffs.size(), 0.0L);
  for (size_t j = 0; j < w.coeffs.size(); ++j) {
    if (w.coeffs[j] == 0) continue;
    long double lw = std::log(to_long_double(w.coeffs[j])) + logq * static_cast<long double>(j);
    logs[j] = lw;
    if (lw > max_log) max_log = lw;
  }
  long double total = 0.0L;
  for (size_t j = 0; j < w.coeffs.size(); ++j) {
    if (w.coeffs[j] == 0) continue;
    mass[j] = std::exp(logs[j] - max_log);
    total += mass[j];
  }

  FpDistribution d;
  d.mode = FpDistribution::Mode::Floating;
  d.n = w.n;
  d.q = q;
  for (size_t j = 0; j < mass.size(); ++j) {
    if (w.coeffs[j] != 0) d.probs[static_cast<int>(j)] = static_cast<double>(mass[j] / total);
  }
  return d;
}

Moments exact_moments(const FpDistribution& d) {
  if (d.probs.empty()) throw std::invalid_argument("exact_moments: empty distribution");
  Moments m;
  if (d.mode == FpDistribution::Mode::Exact) {
    BigRat mean = 0, second = 0;
    for (const auto& [j, p] : d.probs_exact) {
      mean += BigRat(j) * p;
      second += BigRat(j) * BigRat(j) * p;
    }
    BigRat var = second - mean * mean;
    m.mean = to_double(mean);
    m.variance = to_double(var);
    m.mean_exact = std::move(mean);
    m.variance_exact = std::move(var);
  } else {
    long double mean = 0.0L, second = 0.0L;
    for (const auto& [j, p] : d.probs) {
      mean += static_cast<long double>(j) * p;
      second += static_cast<long double>(j) * static_cast<long double>(j) * p;
    }
    m.mean = static_cast<double>(mean);
    m.variance = static_cast<double>(second - mean * mean);
  }
  return m;
}

}  // namespace invfp
