#include "invfp/limits.hpp"

#include "invfp/common.hpp"

#include "doctest.h"

#include <cmath>
#include <stdexcept>

using namespace invfp;

TEST_CASE("parity-conditioned negative binomial pmf") {
  // q=1/2 even class: mass (1+q^2)/(1+q)^2 = 5/9, p(0) = (1/4)/(5/9) = 0.45
  CHECK(nb_parity_pmf(0.5, Parity::Even, 0) == doctest::Approx(0.45));
  CHECK(nb_parity_pmf(0.5, Parity::Even, 1) == 0.0);
  CHECK(nb_parity_pmf(0.5, Parity::Odd, 0) == 0.0);

  for (Parity par : {Parity::Even, Parity::Odd}) {
    for (double q : {0.2, 0.5, 0.9}) {
      double sum = 0.0;
      for (int i = 0; i <= 600; ++i) sum += nb_parity_pmf(q, par, i);
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
    }
  }

  CHECK_THROWS_AS(nb_parity_pmf(0.0, Parity::Even, 0), std::invalid_argument);
  CHECK_THROWS_AS(nb_parity_pmf(1.0, Parity::Even, 0), std::invalid_argument);
  CHECK_THROWS_AS(nb_parity_pmf(0.5, Parity::Even, -1), std::invalid_argument);
}

TEST_CASE("negative binomial parity pgf matches direct summation") {
  for (Parity par : {Parity::Even, Parity::Odd}) {
    for (double q : {0.3, 0.5, 0.9}) {
      for (double u : {0.3, 0.7, 1.0}) {
        double sum = 0.0;
        for (int i = 0; i <= 300; ++i) sum += nb_parity_pmf(q, par, i) * std::pow(u, i);
        CHECK(nb_parity_pgf(q, par, u) == doctest::Approx(sum).epsilon(1e-9));
      }
    }
  }
  CHECK(nb_parity_pgf(0.5, Parity::Even, 1.0) == doctest::Approx(1.0));
}

TEST_CASE("binomial-with-tilt parity pmf") {
  CHECK(monotone_parity_pmf(2, 1.0, Parity::Even, 0) == doctest::Approx(0.5));
  CHECK(monotone_parity_pmf(2, 1.0, Parity::Even, 2) == doctest::Approx(0.5));
  CHECK(monotone_parity_pmf(1, 0.7, Parity::Even, 0) == doctest::Approx(1.0));
  CHECK(monotone_parity_pmf(3, 2.0, Parity::Odd, 1) == doctest::Approx(3.0 / 7.0));
  CHECK(monotone_parity_pmf(3, 2.0, Parity::Odd, 3) == doctest::Approx(4.0 / 7.0));
  CHECK(monotone_parity_pmf(3, 2.0, Parity::Odd, 2) == 0.0);
  CHECK_THROWS_AS(monotone_parity_pmf(3, 2.0, Parity::Odd, 5), std::invalid_argument);
  CHECK_THROWS_AS(monotone_parity_pmf(0, 2.0, Parity::Even, 0), std::invalid_argument);

  const auto table = monotone_parity_table(4, 1.3, Parity::Even);
  double sum = 0.0;
  for (const auto& [i, p] : table) {
    CHECK(i % 2 == 0);
    sum += p;
  }
  CHECK(sum == doctest::Approx(1.0));
}

TEST_CASE("stated closed-form normalizer does not normalize") {
  // k=1 even class has the single atom i=0 with raw mass 1; the stated
  // constant is q, so the reported mass comes out 1/q.
  CHECK(monotone_stated_normalizer_mass(1, 2.0, Parity::Even) == doctest::Approx(0.5));
  CHECK(std::abs(monotone_stated_normalizer_mass(2, 2.0, Parity::Even) - 1.0) > 1e-3);
  CHECK(std::abs(monotone_stated_normalizer_mass(3, 0.5, Parity::Odd) - 1.0) > 1e-3);
}

TEST_CASE("reference cdfs") {
  CHECK(rayleigh_cdf(0.0) == 0.0);
  CHECK(rayleigh_cdf(-3.0) == 0.0);
  CHECK(rayleigh_cdf(1.0) == doctest::Approx(1.0 - std::exp(-0.5)));
  CHECK(rayleigh_cdf(10.0) == doctest::Approx(1.0));

  CHECK(std_normal_cdf(0.0) == doctest::Approx(0.5));
  CHECK(std_normal_cdf(1.959964) == doctest::Approx(0.975).epsilon(1e-5));
  for (double x : {-2.0, -0.3, 0.0, 1.1}) {
    CHECK(std_normal_cdf(x) + std_normal_cdf(-x) == doctest::Approx(1.0));
  }

  CHECK(s2_cdf(2.0) == doctest::Approx(1.0 - std::exp(-1.0)));
  CHECK(s2_cdf(0.0) == 0.0);
}

TEST_CASE("affine normalization constants") {
  const ClassConstants c321 = class321_constants(2.0);
  CHECK(c321.mean_slope == doctest::Approx(0.6));  // (q^2-1)/(q^2+1)
  REQUIRE(c321.variance_slopes.size() == 2);
  CHECK(c321.variance_slopes[0].first == "paper");
  CHECK(c321.variance_slopes[0].second == doctest::Approx(16.0 / 5.0));
  CHECK(c321.variance_slopes[1].first == "rederived");
  CHECK(c321.variance_slopes[1].second == doctest::Approx(16.0 / 25.0));

  const ClassConstants c231 = class231_constants(1.0);
  CHECK(c231.mean_slope == doctest::Approx(1.0 / 3.0));
  REQUIRE(c231.variance_slopes.size() == 1);
  CHECK(c231.variance_slopes[0].second == doctest::Approx(8.0 / 27.0));
}

TEST_CASE("tilted S2 law") {
  const TiltedS2Cdf untilted(1.0);
  CHECK(untilted.normalizer() == doctest::Approx(1.0).epsilon(1e-6));
  for (double x : {0.5, 1.0, 2.0, 3.0}) {
    CHECK(untilted.cdf(x) == doctest::Approx(s2_cdf(x)).epsilon(2e-3));
  }

  for (double q : {0.3, 0.5}) {
    const TiltedS2Cdf t(q);
    CHECK(t.normalizer() ==
          doctest::Approx(TiltedS2Cdf::closed_form_normalizer(q)).epsilon(1e-6));
    CHECK(t.cdf(0.0) == 0.0);
    CHECK(t.cdf(39.0) == doctest::Approx(1.0));
    double prev = 0.0;
    for (double x = 0.0; x <= 10.0; x += 0.5) {
      CHECK(t.cdf(x) >= prev);
      prev = t.cdf(x);
    }
  }
}

TEST_CASE("limit law variant dispatch") {
  const LimitLaw nb = NBParityLaw{0.5, Parity::Even};
  CHECK(limit_pmf(nb, 0) == doctest::Approx(0.45));
  CHECK(limit_cdf(nb, 0.5) == doctest::Approx(0.45));
  CHECK(limit_cdf(nb, -0.5) == 0.0);

  const LimitLaw mono = MonotoneParityLaw{3, 2.0, Parity::Odd};
  CHECK(limit_pmf(mono, 1) == doctest::Approx(3.0 / 7.0));

  const LimitLaw ray = Rayleigh1Law{};
  CHECK(limit_cdf(ray, 1.0) == doctest::Approx(rayleigh_cdf(1.0)));
  CHECK_THROWS_AS(limit_pmf(ray, 1), std::invalid_argument);

  const LimitLaw norm = StdNormalLaw{};
  CHECK(limit_cdf(norm, 0.0) == doctest::Approx(0.5));
}
