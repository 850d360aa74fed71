#include "invfp/shapes.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace invfp {

std::vector<int> conjugate(const Shape& s) {
  if (s.parts.empty()) return {};
  std::vector<int> conj(static_cast<size_t>(s.parts[0]), 0);
  for (int p : s.parts) {
    for (int j = 0; j < p; ++j) ++conj[static_cast<size_t>(j)];
  }
  return conj;
}

namespace {

constexpr int kUnbounded = -1;

// Extend `acc` by parts <= max_part summing to `remaining`, with at most
// `parts_left` further parts (kUnbounded lifts the limit).
void extend_partition(std::vector<int>& acc, int remaining, int max_part, int parts_left,
                      const std::function<void(const Shape&)>& visit) {
  if (remaining == 0) {
    visit(Shape{acc});
    return;
  }
  if (parts_left == 0) return;
  for (int p = std::min(max_part, remaining); p >= 1; --p) {
    // Even with every later part at its maximum p we must be able to reach 0.
    if (parts_left != kUnbounded && static_cast<long long>(p) * parts_left < remaining) break;
    acc.push_back(p);
    extend_partition(acc, remaining - p, p, parts_left == kUnbounded ? kUnbounded : parts_left - 1,
                     visit);
    acc.pop_back();
  }
}

}  // namespace

void partitions_bounded(int n, int bound, BoundMode mode,
                        const std::function<void(const Shape&)>& visit) {
  if (n < 0 || bound < 1) {
    throw std::invalid_argument("partitions_bounded: need n >= 0 and bound >= 1");
  }
  std::vector<int> acc;
  if (mode == BoundMode::MaxColumns) {
    extend_partition(acc, n, bound, kUnbounded, visit);
  } else {
    extend_partition(acc, n, n, bound, visit);
  }
}

std::vector<Shape> list_partitions_bounded(int n, int bound, BoundMode mode) {
  std::vector<Shape> out;
  partitions_bounded(n, bound, mode, [&](const Shape& s) { out.push_back(s); });
  return out;
}

BigInt hook_count(const Shape& s) {
  if (!s.valid()) throw std::invalid_argument("hook_count: invalid shape");
  const int n = s.n();
  std::vector<int> conj = conjugate(s);
  BigInt prod = 1;
  for (size_t i = 0; i < s.parts.size(); ++i) {
    for (int j = 1; j <= s.parts[i]; ++j) {
      const int hook = s.parts[i] - j + conj[static_cast<size_t>(j) - 1] - static_cast<int>(i);
      prod *= hook;
    }
  }
  BigInt f, r;
  boost::multiprecision::divide_qr(factorial(n), prod, f, r);
  if (r != 0) throw std::logic_error("hook_count: hook product does not divide n!");
  return f;
}

int odd_columns(const Shape& s) {
  int count = 0;
  for (int len : conjugate(s)) count += len & 1;
  return count;
}

int monotone_weights_max_n(int k) {
  if (k <= 3) return 400;
  if (k <= 5) return 120;
  return 60;
}

namespace {

void check_monotone_guard(int n, int k) {
  if (n < 0 || k < 1) throw std::invalid_argument("monotone_weights: need n >= 0, k >= 1");
  if (n > monotone_weights_max_n(k)) {
    throw std::invalid_argument("monotone_weights: n exceeds the partition-count guard for this k");
  }
}

void accumulate_shape(WeightPolynomial& w, const Shape& s) {
  w.coeffs[static_cast<size_t>(odd_columns(s))] += hook_count(s);
}

}  // namespace

WeightPolynomial monotone_weights_serial(int n, int k, Direction dir) {
  check_monotone_guard(n, k);
  const BoundMode mode = dir == Direction::Increasing ? BoundMode::MaxColumns : BoundMode::MaxRows;
  WeightPolynomial w = WeightPolynomial::zero(n);
  partitions_bounded(n, k, mode, [&](const Shape& s) { accumulate_shape(w, s); });
  return w;
}

WeightPolynomial monotone_weights(int n, int k, Direction dir) {
  check_monotone_guard(n, k);
  if (n == 0) return monotone_weights_serial(n, k, dir);
  const BoundMode mode = dir == Direction::Increasing ? BoundMode::MaxColumns : BoundMode::MaxRows;

  // Shapes with first part exactly p form independent subtrees.
  const int max_first = mode == BoundMode::MaxColumns ? std::min(k, n) : n;
  std::vector<WeightPolynomial> partial(static_cast<size_t>(max_first), WeightPolynomial::zero(n));

#pragma omp parallel for schedule(dynamic)
  for (int p = 1; p <= max_first; ++p) {
    WeightPolynomial& w = partial[static_cast<size_t>(p) - 1];
    std::vector<int> acc{p};
    extend_partition(acc, n - p, p, mode == BoundMode::MaxRows ? k - 1 : kUnbounded,
                     [&](const Shape& s) { accumulate_shape(w, s); });
  }

  WeightPolynomial total = WeightPolynomial::zero(n);
  for (const WeightPolynomial& w : partial) total.add(w);
  return total;
}

}  // namespace invfp
