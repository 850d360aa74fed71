#include "invfp/involutions.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace invfp {

BigInt involution_count(int n) {
  if (n < 0) throw std::invalid_argument("involution_count: n must be >= 0");
  BigInt prev = 1, cur = 1;  // I(0), I(1)
  if (n == 0) return prev;
  for (int m = 2; m <= n; ++m) {
    BigInt next = cur + BigInt(m - 1) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace detail {

// Enumerate the states reached after making the first `depth` fix-or-pair
// choices; these partition the full enumeration into independent subtrees.
std::vector<InvState> enumeration_prefixes(int n, int depth) {
  std::vector<InvState> out;
  InvState root;
  root.n = n;

  // (state, hint) pairs expanded breadth-first.
  struct Node {
    InvState st;
    int hint;
  };
  std::vector<Node> frontier{{root, n}};
  for (int d = 0; d < depth; ++d) {
    std::vector<Node> next;
    for (const Node& node : frontier) {
      InvState st = node.st;
      int m = node.hint;
      while (m >= 1 && st.is_placed(m)) --m;
      if (m == 0) {
        out.push_back(st);  // fully placed before reaching depth
        continue;
      }
      {
        InvState child = st;
        child.image[static_cast<size_t>(m)] = m;
        child.place(m);
        ++child.fixed;
        next.push_back({child, m - 1});
      }
      for (int i = 1; i < m; ++i) {
        if (st.is_placed(i)) continue;
        InvState child = st;
        child.image[static_cast<size_t>(m)] = i;
        child.image[static_cast<size_t>(i)] = m;
        child.place(m);
        child.place(i);
        next.push_back({child, m - 1});
      }
    }
    frontier = std::move(next);
  }
  for (const Node& node : frontier) out.push_back(node.st);
  return out;
}

}  // namespace detail

void enumerate_involutions(int n, const std::function<void(std::span<const int>)>& visit) {
  if (n < 0 || n > kMaxEnumerationN) {
    throw std::invalid_argument("enumerate_involutions: n must be in [0, 14]");
  }
  detail::InvState st;
  st.n = n;
  detail::enumerate_from(st, n, [&](std::span<const int> image, int) { visit(image); });
}

std::vector<Permutation> list_involutions(int n) {
  std::vector<Permutation> out;
  enumerate_involutions(n, [&](std::span<const int> image) {
    out.emplace_back(std::vector<int>(image.begin(), image.end()));
  });
  return out;
}

WeightPolynomial brute_force_weights_serial(int n, const Pattern& sigma) {
  if (n < 0 || n > kMaxBruteForceN) {
    throw std::invalid_argument("brute_force_weights: n must be in [0, 12]");
  }
  WeightPolynomial w = WeightPolynomial::zero(n);
  detail::InvState st;
  st.n = n;
  detail::enumerate_from(st, n, [&](std::span<const int> image, int fixed) {
    if (avoids(image, sigma.perm().image())) w.coeffs[static_cast<size_t>(fixed)] += 1;
  });
  return w;
}

WeightPolynomial brute_force_weights(int n, const Pattern& sigma) {
  if (n < 0 || n > kMaxBruteForceN) {
    throw std::invalid_argument("brute_force_weights: n must be in [0, 12]");
  }
  if (n <= 6) return brute_force_weights_serial(n, sigma);

  std::vector<detail::InvState> prefixes = detail::enumeration_prefixes(n, 2);
  const int tasks = static_cast<int>(prefixes.size());
  std::vector<WeightPolynomial> partial(static_cast<size_t>(tasks), WeightPolynomial::zero(n));

#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < tasks; ++t) {
    detail::InvState st = prefixes[static_cast<size_t>(t)];
    WeightPolynomial& w = partial[static_cast<size_t>(t)];
    detail::enumerate_from(st, st.n, [&](std::span<const int> image, int fixed) {
      if (avoids(image, sigma.perm().image())) w.coeffs[static_cast<size_t>(fixed)] += 1;
    });
  }

  WeightPolynomial total = WeightPolynomial::zero(n);
  for (const WeightPolynomial& w : partial) total.add(w);
  return total;
}

}  // namespace invfp
