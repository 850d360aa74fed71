#include "invfp/involutions.hpp"

#include "doctest.h"

#include <set>
#include <string>
#include <vector>

using namespace invfp;

namespace {

std::set<std::string> listing(int n) {
  std::set<std::string> out;
  for (const Permutation& p : list_involutions(n)) out.insert(p.to_string());
  return out;
}

WeightPolynomial from_map(int n, const std::vector<std::pair<int, int>>& entries) {
  WeightPolynomial w = WeightPolynomial::zero(n);
  for (auto [j, c] : entries) w.coeffs[static_cast<size_t>(j)] = c;
  return w;
}

}  // namespace

TEST_CASE("involution counts follow the two-term recurrence") {
  const std::vector<long long> expected = {1,    1,     2,     4,      10,     26,     76,    232,
                                           764,  2620,  9496,  35696,  140152, 568504, 2390480};
  for (size_t n = 0; n < expected.size(); ++n) {
    CHECK(involution_count(static_cast<int>(n)) == BigInt(expected[n]));
  }
  CHECK_THROWS_AS(involution_count(-1), std::invalid_argument);
}

TEST_CASE("enumeration produces exactly the involutions") {
  CHECK(listing(0) == std::set<std::string>{""});
  CHECK(listing(2) == std::set<std::string>{"12", "21"});
  CHECK(listing(3) == std::set<std::string>{"123", "132", "213", "321"});

  for (int n = 4; n <= 8; ++n) {
    std::set<std::string> seen;
    long long count = 0;
    enumerate_involutions(n, [&](std::span<const int> image) {
      ++count;
      CHECK(is_involution_image(image));
      std::string key;
      for (int v : image) key += static_cast<char>('0' + v);
      seen.insert(key);
    });
    CHECK(count == involution_count(n));       // exactly I(n) emissions
    CHECK(seen.size() == static_cast<size_t>(count));  // no duplicates
  }
}

TEST_CASE("enumeration count matches I(n) at the guard ceiling") {
  long long count = 0;
  enumerate_involutions(14, [&](std::span<const int>) { ++count; });
  CHECK(count == 2390480);
}

TEST_CASE("enumeration guards") {
  CHECK_THROWS_AS(enumerate_involutions(-1, [](std::span<const int>) {}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_involutions(15, [](std::span<const int>) {}), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_weights(13, *Pattern::parse("321")), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_weights(-1, *Pattern::parse("321")), std::invalid_argument);
}

TEST_CASE("brute force weights on fixed examples") {
  CHECK(brute_force_weights(3, *Pattern::parse("321")) == from_map(3, {{1, 2}, {3, 1}}));
  CHECK(brute_force_weights(3, *Pattern::parse("231")) == from_map(3, {{1, 3}, {3, 1}}));
  CHECK(brute_force_weights(0, *Pattern::parse("321")) == from_map(0, {{0, 1}}));
  CHECK(brute_force_weights(0, *Pattern::parse("12")) == from_map(0, {{0, 1}}));
}

TEST_CASE("the three 321-class patterns share one weight polynomial") {
  for (int n = 0; n <= 12; ++n) {
    const WeightPolynomial a = brute_force_weights(n, *Pattern::parse("321"));
    const WeightPolynomial b = brute_force_weights(n, *Pattern::parse("132"));
    const WeightPolynomial c = brute_force_weights(n, *Pattern::parse("213"));
    CHECK(a == b);
    CHECK(a == c);
  }
}

TEST_CASE("the two 231-class patterns share one weight polynomial") {
  for (int n = 0; n <= 12; ++n) {
    CHECK(brute_force_weights(n, *Pattern::parse("231")) ==
          brute_force_weights(n, *Pattern::parse("312")));
  }
}

TEST_CASE("weight polynomials obey the fixed point parity invariant") {
  for (const char* pat : {"321", "231"}) {
    for (int n = 0; n <= 10; ++n) {
      CHECK(brute_force_weights(n, *Pattern::parse(pat)).parity_ok());
    }
  }
}

TEST_CASE("an unconstraining increasing pattern counts all involutions") {
  for (int n = 0; n <= 9; ++n) {
    const WeightPolynomial w = brute_force_weights(n, Pattern::increasing(n + 1));
    CHECK(w.total() == involution_count(n));
  }
}

TEST_CASE("parallel brute force equals serial") {
  for (int n = 7; n <= 12; ++n) {
    for (const char* pat : {"321", "231"}) {
      CHECK(brute_force_weights(n, *Pattern::parse(pat)) ==
            brute_force_weights_serial(n, *Pattern::parse(pat)));
    }
  }
}
