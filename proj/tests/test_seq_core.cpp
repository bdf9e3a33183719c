#include "doctest.h"

#include <cmath>
#include <limits>

#include "flatwitness/errors.hpp"
#include "flatwitness/seq_core.hpp"
#include "test_util.hpp"

namespace fw = flatwitness;
using fw::Complex;

namespace {

std::vector<Complex> geometric(std::size_t n) {
  std::vector<Complex> a(n);
  for (std::size_t k = 1; k <= n; ++k) a[k - 1] = std::exp2(-0.5 * double(k));
  return a;
}

long double direct_tail(const std::vector<Complex>& a, std::size_t n) {
  long double s = 0.0L;
  for (std::size_t k = n + 1; k <= a.size(); ++k) s += std::norm(a[k - 1]);
  return s;
}

}  // namespace

TEST_CASE("geometric suffix sums match the closed form and direct summation") {
  const auto a = geometric(30);
  const fw::TailProfile p = fw::tail_profile(a);
  REQUIRE(p.size() == 30);
  for (std::size_t n = 0; n < 30; ++n) {
    CHECK(std::abs(p.r(n) - (std::exp2(-double(n)) - std::exp2(-30.0))) <= 1e-15);
    CHECK(std::abs(p.r(n) - double(direct_tail(a, n))) <= 1e-15);
  }
  CHECK(p.r(30) == 0.0);
}

TEST_CASE("zero and single-term sequences") {
  const fw::TailProfile z = fw::tail_profile(std::vector<Complex>(3, 0.0));
  for (double r : z.suffix_sums()) CHECK(r == 0.0);
  CHECK(z.has_finite_support());

  const fw::TailProfile one = fw::tail_profile(std::vector<Complex>{1.0});
  CHECK(one.r(0) == 1.0);
  CHECK(one.r(1) == 0.0);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(fw::tail_profile(std::vector<Complex>{}), fw::InvalidInput);
  CHECK_THROWS_AS(fw::tail_profile(std::vector<Complex>{{std::nan(""), 0.0}}), fw::InvalidInput);
  const fw::TailProfile p = fw::tail_profile(geometric(5));
  CHECK_THROWS_AS(fw::olympiad_weighted_sum(p, 0, 3), fw::InvalidInput);
  CHECK_THROWS_AS(fw::olympiad_weighted_sum(p, 3, 3), fw::InvalidInput);
  CHECK_THROWS_AS(fw::olympiad_weighted_sum(p, 1, 6), fw::InvalidInput);
}

TEST_CASE("zero suffix inside a window is degenerate") {
  const fw::TailProfile p = fw::tail_profile(std::vector<Complex>{1.0, 0.0, 0.0});
  CHECK_THROWS_AS(fw::olympiad_weighted_sum(p, 1, 3), fw::DegenerateTail);
  CHECK_THROWS_AS(fw::olympiad_weighted_sum_to_infinity(p, 1), fw::DegenerateTail);
}

TEST_CASE("weighted series to infinity for a_k = 2^{-k/2}") {
  const fw::TailProfile p = fw::tail_profile(geometric(30), fw::GeometricTail{std::exp2(-31.0), 0.5});
  // Oracle: 200 terms of a_k^2 / sqrt(r_{k-1}) with r_{k-1} = 2^{-(k-1)}.
  long double oracle = 0.0L;
  for (int k = 2; k <= 201; ++k) oracle += std::exp2((long double)-k) / std::sqrt(std::exp2((long double)-(k - 1)));
  const double value = fw::olympiad_weighted_sum_to_infinity(p, 1);
  CHECK(std::abs(value - double(oracle)) <= 1e-13);
  CHECK(std::abs(value - 1.2071067811865475) <= 1e-13);
}

TEST_CASE("single-term window is one summand") {
  const auto a = geometric(8);
  const fw::TailProfile p = fw::tail_profile(a);
  CHECK(fw::olympiad_weighted_sum(p, 1, 2) == p.a_sq(2) / std::sqrt(p.r(1)));
}

TEST_CASE("bound holds for a profile normalized to r_1 = 1") {
  auto a = testutil::gaussian_vector(200);
  for (std::size_t k = 0; k < a.size(); ++k) a[k] /= double(k + 1);
  double r1 = 0.0;
  for (std::size_t k = 1; k < a.size(); ++k) r1 += std::norm(a[k]);
  for (auto& z : a) z /= std::sqrt(r1);
  const fw::TailProfile p = fw::tail_profile(a);
  CHECK(std::abs(p.r(1) - 1.0) <= 1e-14);
  for (std::size_t n : {2, 10, 50, 200}) {
    const auto rep = fw::verify_olympiad_bound(p, 1, n);
    CHECK(rep.holds);
    CHECK(rep.rhs == doctest::Approx(2.0 * (1.0 - std::sqrt(p.r(n)))).epsilon(1e-14));
  }
}

TEST_CASE("one-step telescope for every step of a geometric profile") {
  const fw::TailProfile p = fw::tail_profile(geometric(40), fw::GeometricTail{std::exp2(-41.0), 0.5});
  for (std::size_t n = 2; n <= 40; ++n) {
    const auto rep = fw::verify_olympiad_bound(p, n - 1, n);
    CHECK(rep.holds);
    CHECK(rep.lhs == p.a_sq(n) / std::sqrt(p.r(n - 1)));
  }
}

TEST_CASE("random sequences: telescoping, bound and monotone partial sums") {
  const double eps = std::numeric_limits<double>::epsilon();
  for (int t = 0; t < 20; ++t) {
    auto a = testutil::gaussian_vector(2000);
    const double alpha = testutil::uniform(0.6, 2.0);
    for (std::size_t k = 0; k < a.size(); ++k) a[k] *= std::pow(double(k + 1), -alpha);
    const fw::TailProfile p = fw::tail_profile(a);
    for (std::size_t k = 1; k <= p.size(); ++k)
      CHECK(std::abs(p.r(k - 1) - p.r(k) - p.a_sq(k)) <= 8.0 * eps * p.r(0));
    CHECK(p.telescoping_defect() <= 8.0 * eps * p.r(0));
    double prev = 0.0;
    for (std::size_t n : {2, 5, 30, 400, 1999, 2000}) {
      const auto rep = fw::verify_olympiad_bound(p, 1, n);
      CHECK(rep.holds);
      CHECK(rep.lhs >= prev);
      prev = rep.lhs;
    }
  }
}

TEST_CASE("default tolerance scales with r_0") {
  const fw::TailProfile p = fw::tail_profile(std::vector<Complex>{3.0, 4.0});
  CHECK(fw::default_olympiad_tolerance(p) == doctest::Approx(1e-12 * 26.0));
}
