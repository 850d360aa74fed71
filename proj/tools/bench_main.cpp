#include "invfp/gf.hpp"
#include "invfp/goe.hpp"
#include "invfp/involutions.hpp"
#include "invfp/permutation.hpp"
#include "invfp/shapes.hpp"

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <class F>
double time_seconds(F&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %5.2fx\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp: not enabled (serial build)\n");
#endif

  {
    const invfp::Pattern pat = *invfp::Pattern::parse("321");
    invfp::WeightPolynomial a, b;
    const double ts = time_seconds([&] { a = invfp::brute_force_weights_serial(11, pat); });
    const double tp = time_seconds([&] { b = invfp::brute_force_weights(11, pat); });
    report("brute force n=11", ts, tp);
    if (!(a == b)) std::printf("  MISMATCH\n");
  }

  {
    invfp::WeightPolynomial a, b;
    const double ts = time_seconds(
        [&] { a = invfp::monotone_weights_serial(200, 3, invfp::Direction::Decreasing); });
    const double tp =
        time_seconds([&] { b = invfp::monotone_weights(200, 3, invfp::Direction::Decreasing); });
    report("shape sweep n=200 k=3", ts, tp);
    if (!(a == b)) std::printf("  MISMATCH\n");
  }

  {
    invfp::WeightPolynomial a, b;
    const double ts = time_seconds([&] { a = invfp::path_row_serial(2000); });
    const double tp = time_seconds([&] { b = invfp::path_row(2000); });
    report("path row n=2000", ts, tp);
    if (!(a == b)) std::printf("  MISMATCH\n");
  }

  {
    invfp::WeightedSample a, b;
    const double ts =
        time_seconds([&] { a = invfp::xk_weighted_sample_serial(3, 0.5, 200000, 7); });
    const double tp = time_seconds([&] { b = invfp::xk_weighted_sample(3, 0.5, 200000, 7); });
    report("goe sample k=3 n=200k", ts, tp);
    if (a.values != b.values || a.weights != b.weights) std::printf("  MISMATCH\n");
  }

  return 0;
}
