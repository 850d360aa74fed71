#pragma once

#include "invfp/distribution.hpp"
#include "invfp/goe.hpp"

#include <functional>
#include <map>

namespace invfp {

// (1/2) sum |a_j - b_j| over the union support.
double tv_distance(const FpDistribution& a, const std::map<int, double>& pmf);

// sup_x |F((x-center)/scale-rescaled finite law) - limit(x)| where the finite
// cdf is evaluated from both sides of each atom.  scale must be positive.
double ks_distance(const FpDistribution& d, double center, double scale,
                   const std::function<double(double)>& limit_cdf);

// KS between a weighted empirical cdf and a continuous cdf, evaluated from
// both sides of each sample atom.
double ks_weighted_vs_cdf(const WeightedSample& s, const std::function<double(double)>& limit_cdf);

// KS between the rescaled finite law and a weighted empirical cdf (two step
// functions; the sup is attained at an atom of either, from either side).
double ks_finite_vs_weighted(const FpDistribution& d, double center, double scale,
                             const WeightedSample& s);

}  // namespace invfp
