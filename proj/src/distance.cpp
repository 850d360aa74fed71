#include "invfp/distance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace invfp {

double tv_distance(const FpDistribution& a, const std::map<int, double>& pmf) {
  double sum = 0.0;
  auto ia = a.probs.begin();
  auto ib = pmf.begin();
  while (ia != a.probs.end() || ib != pmf.end()) {
    if (ib == pmf.end() || (ia != a.probs.end() && ia->first < ib->first)) {
      sum += std::abs(ia->second);
      ++ia;
    } else if (ia == a.probs.end() || ib->first < ia->first) {
      sum += std::abs(ib->second);
      ++ib;
    } else {
      sum += std::abs(ia->second - ib->second);
      ++ia;
      ++ib;
    }
  }
  return sum / 2.0;
}

double ks_distance(const FpDistribution& d, double center, double scale,
                   const std::function<double(double)>& limit_cdf) {
  if (!(scale > 0.0)) throw std::invalid_argument("ks_distance: scale must be positive");
  double sup = 0.0;
  double cum = 0.0;
  for (const auto& [j, p] : d.probs) {
    const double x = (j - center) / scale;
    const double ref = limit_cdf(x);
    sup = std::max(sup, std::abs(cum - ref));  // left limit of the finite cdf
    cum += p;
    sup = std::max(sup, std::abs(cum - ref));
  }
  return sup;
}

double ks_weighted_vs_cdf(const WeightedSample& s, const std::function<double(double)>& limit_cdf) {
  double sup = 0.0;
  double prev = 0.0;
  for (size_t i = 0; i < s.sorted_values.size(); ++i) {
    // Skip to the last duplicate so both sides of the atom are the true cdf
    // values.
    if (i + 1 < s.sorted_values.size() && s.sorted_values[i + 1] == s.sorted_values[i]) continue;
    const double ref = limit_cdf(s.sorted_values[i]);
    const double cur = s.cum_weights[i] / s.total_weight;
    sup = std::max(sup, std::abs(prev - ref));
    sup = std::max(sup, std::abs(cur - ref));
    prev = cur;
  }
  return sup;
}

double ks_finite_vs_weighted(const FpDistribution& d, double center, double scale,
                             const WeightedSample& s) {
  if (!(scale > 0.0)) throw std::invalid_argument("ks_finite_vs_weighted: scale must be positive");

  struct Jump {
    double x;
    double d_jump;
    double s_jump;
  };
  std::vector<Jump> jumps;
  jumps.reserve(d.probs.size() + s.sorted_values.size());
  for (const auto& [j, p] : d.probs) jumps.push_back({(j - center) / scale, p, 0.0});
  double prev_cum = 0.0;
  for (size_t i = 0; i < s.sorted_values.size(); ++i) {
    if (i + 1 < s.sorted_values.size() && s.sorted_values[i + 1] == s.sorted_values[i]) continue;
    const double cum = s.cum_weights[i] / s.total_weight;
    jumps.push_back({s.sorted_values[i], 0.0, cum - prev_cum});
    prev_cum = cum;
  }
  std::sort(jumps.begin(), jumps.end(), [](const Jump& a, const Jump& b) { return a.x < b.x; });

  double sup = 0.0, fd = 0.0, fs = 0.0;
  size_t i = 0;
  while (i < jumps.size()) {
    size_t j = i;
    double dd = 0.0, ds = 0.0;
    while (j < jumps.size() && jumps[j].x == jumps[i].x) {
      dd += jumps[j].d_jump;
      ds += jumps[j].s_jump;
      ++j;
    }
    sup = std::max(sup, std::abs(fd - fs));  // just left of this point
    fd += dd;
    fs += ds;
    sup = std::max(sup, std::abs(fd - fs));  // at the point
    i = j;
  }
  return sup;
}

}  // namespace invfp
