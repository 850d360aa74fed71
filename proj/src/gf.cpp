#include "invfp/gf.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace invfp {

std::vector<BigInt> catalan_numbers(int count) {
  if (count < 0) throw std::invalid_argument("catalan_numbers: count must be >= 0");
  std::vector<BigInt> cat(static_cast<size_t>(count));
  if (count == 0) return cat;
  cat[0] = 1;
  for (int i = 0; i + 1 < count; ++i) {
    // Cat(i+1) = Cat(i) * 2(2i+1)/(i+2); the division is exact.
    cat[static_cast<size_t>(i) + 1] = cat[static_cast<size_t>(i)] * (2 * (2 * i + 1)) / (i + 2);
  }
  return cat;
}

SeriesTable expand_class321(int n_max) {
  if (n_max < 0 || n_max > kMaxPolyRows321) {
    throw std::invalid_argument("expand_class321: n_max must be in [0, 60]");
  }
  std::vector<BigInt> cat = catalan_numbers(n_max / 2 + 1);

  SeriesTable t;
  t.sigma_class = SigmaClass::Class321;
  t.rows.reserve(static_cast<size_t>(n_max) + 1);
  t.rows.push_back(WeightPolynomial::zero(0));
  t.rows[0].coeffs[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    WeightPolynomial row = WeightPolynomial::zero(n);
    const WeightPolynomial& prev = t.rows[static_cast<size_t>(n) - 1];
    for (int j = 1; j <= n; ++j) {
      row.coeffs[static_cast<size_t>(j)] = prev.coeffs[static_cast<size_t>(j) - 1];
    }
    for (int m = 1; 2 * m <= n; ++m) {
      const WeightPolynomial& back = t.rows[static_cast<size_t>(n - 2 * m)];
      const BigInt& c = cat[static_cast<size_t>(m) - 1];
      for (int j = 0; j <= n - 2 * m; ++j) {
        row.coeffs[static_cast<size_t>(j)] += c * back.coeffs[static_cast<size_t>(j)];
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

SeriesTable expand_class231(int n_max) {
  if (n_max < 0 || n_max > kMaxPolyRows231) {
    throw std::invalid_argument("expand_class231: n_max must be in [0, 600]");
  }
  SeriesTable t;
  t.sigma_class = SigmaClass::Class231;
  t.rows.reserve(static_cast<size_t>(n_max) + 1);

  // c_{n-2}, c_{n-1} as coefficient vectors in q.
  std::vector<BigInt> c_back2, c_back1{1};  // c_{-1} = 0 (empty), c_0 = 1
  WeightPolynomial row0 = WeightPolynomial::zero(0);
  row0.coeffs[0] = 1;
  t.rows.push_back(std::move(row0));

  for (int n = 1; n <= n_max; ++n) {
    std::vector<BigInt> cur(static_cast<size_t>(n) + 1);
    for (size_t j = 0; j < c_back1.size(); ++j) cur[j + 1] = c_back1[j];  // q * c_{n-1}
    for (size_t j = 0; j < c_back2.size(); ++j) cur[j] += 2 * c_back2[j];

    WeightPolynomial row = WeightPolynomial::zero(n);
    for (size_t j = 0; j < cur.size(); ++j) row.coeffs[j] = cur[j];
    if (n >= 2) {
      for (size_t j = 0; j < c_back2.size(); ++j) row.coeffs[j] -= c_back2[j];
    }
    t.rows.push_back(std::move(row));

    c_back2 = std::move(c_back1);
    c_back1 = std::move(cur);
  }
  return t;
}

SeriesTable expand_rows(SigmaClass c, int n_max) {
  return c == SigmaClass::Class321 ? expand_class321(n_max) : expand_class231(n_max);
}

namespace {

// One ballot-DP step: out[j] = in[j-1] + in[j+1] on the parity-t lattice.
// Both buffers are zero beyond the last written index, which makes the
// boundary reads safe.
void path_step(const std::vector<BigInt>& in, std::vector<BigInt>& out, int t, int n, bool parallel) {
  const int hi = std::min(t, n);
  const int lo = t & 1;
  const int count = (hi - lo) / 2 + 1;
  if (parallel && count >= 64) {
#pragma omp parallel for schedule(static)
    for (int idx = 0; idx < count; ++idx) {
      const int j = lo + 2 * idx;
      if (j == 0) {
        out[0] = in[1];
      } else {
        out[static_cast<size_t>(j)] =
            in[static_cast<size_t>(j) - 1] + in[static_cast<size_t>(j) + 1];
      }
    }
  } else {
    for (int idx = 0; idx < count; ++idx) {
      const int j = lo + 2 * idx;
      if (j == 0) {
        out[0] = in[1];
      } else {
        out[static_cast<size_t>(j)] =
            in[static_cast<size_t>(j) - 1] + in[static_cast<size_t>(j) + 1];
      }
    }
  }
}

WeightPolynomial path_row_impl(int n, bool parallel) {
  if (n < 0 || n > kMaxPathRow) {
    throw std::invalid_argument("path_row: n must be in [0, 4000]");
  }
  std::vector<BigInt> cur(static_cast<size_t>(n) + 2), next(static_cast<size_t>(n) + 2);
  cur[0] = 1;
  for (int t = 1; t <= n; ++t) {
    path_step(cur, next, t, n, parallel);
    std::swap(cur, next);
  }
  WeightPolynomial row = WeightPolynomial::zero(n);
  for (int j = n & 1; j <= n; j += 2) row.coeffs[static_cast<size_t>(j)] = cur[static_cast<size_t>(j)];
  return row;
}

}  // namespace

SeriesTable path_weights(int n_max) {
  if (n_max < 0 || n_max > kMaxPathTable) {
    throw std::invalid_argument("path_weights: n_max must be in [0, 1000]");
  }
  SeriesTable t;
  t.sigma_class = SigmaClass::Class321;
  t.rows.reserve(static_cast<size_t>(n_max) + 1);

  std::vector<BigInt> cur(static_cast<size_t>(n_max) + 2), next(static_cast<size_t>(n_max) + 2);
  cur[0] = 1;
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) {
      path_step(cur, next, n, n_max, false);
      std::swap(cur, next);
    }
    WeightPolynomial row = WeightPolynomial::zero(n);
    for (int j = n & 1; j <= n; j += 2) {
      row.coeffs[static_cast<size_t>(j)] = cur[static_cast<size_t>(j)];
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

WeightPolynomial path_row(int n) { return path_row_impl(n, true); }
WeightPolynomial path_row_serial(int n) { return path_row_impl(n, false); }

BigRat pgf_eval(const WeightPolynomial& w, const BigRat& q, const BigRat& u) {
  if (q <= 0) throw std::invalid_argument("pgf_eval: q must be positive");
  if (u < 0) throw std::invalid_argument("pgf_eval: u must be nonnegative");
  const BigRat uq = u * q;
  BigRat numer = 0, denom = 0;
  BigRat uq_pow = 1, q_pow = 1;
  for (size_t j = 0; j < w.coeffs.size(); ++j) {
    if (w.coeffs[j] != 0) {
      BigRat c(w.coeffs[j]);
      numer += c * uq_pow;
      denom += c * q_pow;
    }
    uq_pow *= uq;
    q_pow *= q;
  }
  if (denom == 0) throw std::invalid_argument("pgf_eval: zero normalization");
  return numer / denom;
}

}  // namespace invfp
