#include "invfp/limits.hpp"

#include "invfp/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <type_traits>

namespace invfp {

namespace {

double nb_parity_mass(double q, Parity parity) {
  const double one_plus = (1.0 + q) * (1.0 + q);
  return parity == Parity::Even ? (1.0 + q * q) / one_plus : 2.0 * q / one_plus;
}

}  // namespace

double nb_parity_pmf(double q, Parity parity, int i) {
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("nb_parity_pmf: need 0 < q < 1");
  if (i < 0) throw std::invalid_argument("nb_parity_pmf: i must be >= 0");
  if (!matches_parity(i, parity)) return 0.0;
  const double base = (i + 1) * (1.0 - q) * (1.0 - q) * std::pow(q, i);
  return base / nb_parity_mass(q, parity);
}

std::map<int, double> nb_parity_table(double q, Parity parity, int max_i) {
  std::map<int, double> t;
  for (int i = parity == Parity::Even ? 0 : 1; i <= max_i; i += 2) {
    t[i] = nb_parity_pmf(q, parity, i);
  }
  return t;
}

double nb_parity_pgf(double q, Parity parity, double u) {
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("nb_parity_pgf: need 0 < q < 1");
  const double sign = parity == Parity::Even ? 1.0 : -1.0;
  const auto nb = [](double x) { return 1.0 / ((1.0 - x) * (1.0 - x)); };
  const auto nbm = [](double x) { return 1.0 / ((1.0 + x) * (1.0 + x)); };
  return (nb(u * q) + sign * nbm(u * q)) / (nb(q) + sign * nbm(q));
}

namespace {

double monotone_class_mass(int k, double q, Parity parity) {
  // ((1+q)^k + (1-q)^k)/2 for even i, ((1+q)^k - (1-q)^k)/2 for odd.
  const double sign = parity == Parity::Even ? 1.0 : -1.0;
  return (std::pow(1.0 + q, k) + sign * std::pow(1.0 - q, k)) / 2.0;
}

}  // namespace

double monotone_parity_pmf(int k, double q, Parity parity, int i) {
  if (k < 1) throw std::invalid_argument("monotone_parity_pmf: k must be >= 1");
  if (!(q > 0.0)) throw std::invalid_argument("monotone_parity_pmf: q must be positive");
  if (i < 0 || i > k) throw std::invalid_argument("monotone_parity_pmf: i must be in 0..k");
  if (!matches_parity(i, parity)) return 0.0;
  return std::pow(q, i) * to_double(binomial(k, i)) / monotone_class_mass(k, q, parity);
}

std::map<int, double> monotone_parity_table(int k, double q, Parity parity) {
  std::map<int, double> t;
  for (int i = parity == Parity::Even ? 0 : 1; i <= k; i += 2) {
    t[i] = monotone_parity_pmf(k, q, parity, i);
  }
  return t;
}

double monotone_stated_normalizer_mass(int k, double q, Parity parity) {
  double sum = 0.0;
  for (int i = parity == Parity::Even ? 0 : 1; i <= k; i += 2) {
    sum += std::pow(q, i) * to_double(binomial(k, i));
  }
  const double stated = std::pow(2.0, k - 2) * (std::pow(q + 1.0, k) + std::pow(q - 1.0, k));
  return sum / stated;
}

double rayleigh_cdf(double x) { return x <= 0.0 ? 0.0 : 1.0 - std::exp(-x * x / 2.0); }

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double s2_cdf(double x) { return x <= 0.0 ? 0.0 : 1.0 - std::exp(-x * x / 4.0); }

ClassConstants class321_constants(double q) {
  ClassConstants c;
  const double q2 = q * q;
  c.mean_slope = (q2 - 1.0) / (q2 + 1.0);
  c.variance_slopes = {
      {"paper", 4.0 * q2 / (q2 + 1.0)},
      {"rederived", 4.0 * q2 / ((q2 + 1.0) * (q2 + 1.0))},
  };
  return c;
}

ClassConstants class231_constants(double q) {
  ClassConstants c;
  const double s = q * q + 8.0;
  c.mean_slope = q / std::sqrt(s);
  c.variance_slopes = {{"paper", 8.0 * q / (s * std::sqrt(s))}};
  return c;
}

TiltedS2Cdf::TiltedS2Cdf(double q) : q_(q) {
  if (!(q > 0.0) || q > 1.0) throw std::invalid_argument("TiltedS2Cdf: need 0 < q <= 1");
  // Untilted tail beyond 40 is exp(-400); tilting by q <= 1 only thins it.
  constexpr double kUpper = 40.0;
  constexpr int kIntervals = 1 << 14;
  step_ = kUpper / kIntervals;
  const double logq = std::log(q);
  const auto density = [&](double s) { return std::exp(logq * s - s * s / 4.0) * s / 2.0; };

  grid_cdf_.assign(kIntervals + 1, 0.0);
  double cum = 0.0;
  for (int i = 0; i < kIntervals; ++i) {
    const double a = i * step_;
    const double b = a + step_;
    cum += (density(a) + 4.0 * density(0.5 * (a + b)) + density(b)) * step_ / 6.0;
    grid_cdf_[static_cast<size_t>(i) + 1] = cum;
  }
  normalizer_ = cum;
  for (double& v : grid_cdf_) v /= cum;
}

double TiltedS2Cdf::cdf(double x) const {
  if (x <= 0.0) return 0.0;
  const double pos = x / step_;
  const auto idx = static_cast<size_t>(pos);
  if (idx + 1 >= grid_cdf_.size()) return 1.0;
  const double frac = pos - static_cast<double>(idx);
  return grid_cdf_[idx] * (1.0 - frac) + grid_cdf_[idx + 1] * frac;
}

double TiltedS2Cdf::closed_form_normalizer(double q) {
  const double mu = std::log(q);
  return 1.0 + std::sqrt(M_PI) * mu * std::exp(mu * mu) * (1.0 + std::erf(mu));
}

double limit_cdf(const LimitLaw& law, double x) {
  return std::visit(
      [&](const auto& l) -> double {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, NBParityLaw>) {
          // Geometric tail: past the cap the remaining mass is < 1e-300.
          const double hi = std::min(x, 65536.0);
          double cum = 0.0;
          for (int i = l.parity == Parity::Even ? 0 : 1; i <= hi; i += 2) {
            cum += nb_parity_pmf(l.q, l.parity, i);
          }
          return x >= 65536.0 ? 1.0 : cum;
        } else if constexpr (std::is_same_v<T, MonotoneParityLaw>) {
          double cum = 0.0;
          for (int i = l.parity == Parity::Even ? 0 : 1; i <= l.k && i <= x; i += 2) {
            cum += monotone_parity_pmf(l.k, l.q, l.parity, i);
          }
          return cum;
        } else if constexpr (std::is_same_v<T, Rayleigh1Law>) {
          return rayleigh_cdf(x);
        } else if constexpr (std::is_same_v<T, StdNormalLaw>) {
          return std_normal_cdf(x);
        } else {
          return l.sample.cdf(x);
        }
      },
      law);
}

double limit_pmf(const LimitLaw& law, int i) {
  return std::visit(
      [&](const auto& l) -> double {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, NBParityLaw>) {
          return nb_parity_pmf(l.q, l.parity, i);
        } else if constexpr (std::is_same_v<T, MonotoneParityLaw>) {
          return monotone_parity_pmf(l.k, l.q, l.parity, i);
        } else {
          throw std::invalid_argument("limit_pmf: law is continuous");
        }
      },
      law);
}

}  // namespace invfp
