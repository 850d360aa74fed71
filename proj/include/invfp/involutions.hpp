#pragma once

#include "invfp/bigint.hpp"
#include "invfp/permutation.hpp"
#include "invfp/weights.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace invfp {

inline constexpr int kMaxEnumerationN = 14;
inline constexpr int kMaxBruteForceN = 12;

// I(n) = I(n-1) + (n-1) I(n-2).
BigInt involution_count(int n);

namespace detail {

// Recursion state: the largest unplaced element is either fixed or paired
// with a smaller unplaced one.  Order per step: fix first, then partners
// ascending.  This visits every involution of [n] exactly once.
struct InvState {
  std::array<int, kMaxEnumerationN + 1> image{};  // 1-based
  std::uint16_t placed = 0;                       // bit i-1 = element i placed
  int n = 0;
  int fixed = 0;

  bool is_placed(int i) const { return (placed & (1u << (i - 1))) != 0; }
  void place(int i) { placed |= static_cast<std::uint16_t>(1u << (i - 1)); }
  void unplace(int i) { placed &= static_cast<std::uint16_t>(~(1u << (i - 1))); }
};

// `hint` is an upper bound on the highest unplaced element.
template <class F>
void enumerate_from(InvState& st, int hint, F&& emit) {
  int m = hint;
  while (m >= 1 && st.is_placed(m)) --m;
  if (m == 0) {
    emit(std::span<const int>(st.image.data() + 1, static_cast<size_t>(st.n)), st.fixed);
    return;
  }

  st.image[static_cast<size_t>(m)] = m;
  st.place(m);
  ++st.fixed;
  enumerate_from(st, m - 1, emit);
  --st.fixed;

  for (int i = 1; i < m; ++i) {
    if (st.is_placed(i)) continue;
    st.image[static_cast<size_t>(m)] = i;
    st.image[static_cast<size_t>(i)] = m;
    st.place(i);
    enumerate_from(st, m - 1, emit);
    st.unplace(i);
  }
  st.unplace(m);
}

// Prefix states after `depth` placement decisions; used to split the
// enumeration into independent chunks for parallel filtering.
std::vector<InvState> enumeration_prefixes(int n, int depth);

}  // namespace detail

// Streams every involution of [n] exactly once (0 <= n <= 14); the span is
// the one-line image, valid only during the callback.
void enumerate_involutions(int n, const std::function<void(std::span<const int>)>& fn);

std::vector<Permutation> list_involutions(int n);

// coeffs[j] = #{involutions of [n] avoiding sigma with j fixed points},
// 0 <= n <= 12.  The parallel version splits the enumeration by the pairing
// choices of the top elements; per-task integer accumulators merge exactly.
WeightPolynomial brute_force_weights(int n, const Pattern& sigma);
WeightPolynomial brute_force_weights_serial(int n, const Pattern& sigma);

}  // namespace invfp
