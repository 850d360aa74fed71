#pragma once

#include "invfp/bigint.hpp"
#include "invfp/common.hpp"
#include "invfp/weights.hpp"

#include <functional>
#include <vector>

namespace invfp {

// Integer partition, weakly decreasing positive parts.
struct Shape {
  std::vector<int> parts;

  int n() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
  }
  bool valid() const {
    for (size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] <= 0) return false;
      if (i > 0 && parts[i] > parts[i - 1]) return false;
    }
    return true;
  }
  bool operator==(const Shape&) const = default;
};

// Column lengths: conj[j-1] = #{i : parts[i] >= j}.
std::vector<int> conjugate(const Shape& s);

// Streams each partition of n with largest part <= bound (MaxColumns) or at
// most `bound` parts (MaxRows), exactly once, largest first part first.
void partitions_bounded(int n, int bound, BoundMode mode,
                        const std::function<void(const Shape&)>& visit);
std::vector<Shape> list_partitions_bounded(int n, int bound, BoundMode mode);

// Number of standard Young tableaux, n!/prod(hooks).  Throws if the division
// is not exact: that would mean the hook bookkeeping is broken, and silently
// truncating would corrupt every count built on top of it.
BigInt hook_count(const Shape& s);

// Number of odd-length columns.
int odd_columns(const Shape& s);

// Largest n the partition sweep stays desk-scale for: 400 for k <= 3, 120
// for k <= 5, 60 beyond (the unconstrained-k checks only need n <= 60).
int monotone_weights_max_n(int k);

// coeffs[j] = sum of hook_count over partitions of n with odd_columns = j,
// shapes bounded by k columns (increasing: LIS <= k) or k rows (decreasing:
// LDS <= k).  Both correspondences are treated as oracles and certified
// against brute force by tests before any large-n use.  The parallel version
// splits the shape stream by first part.
WeightPolynomial monotone_weights(int n, int k, Direction dir);
WeightPolynomial monotone_weights_serial(int n, int k, Direction dir);

}  // namespace invfp
