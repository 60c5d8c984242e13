#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "liespec/geodesics.hpp"

using namespace liespec;

namespace {
constexpr double two_pi = 2 * std::numbers::pi;
}

TEST_CASE("geodesic_count examples") {
  CHECK(geodesic_count(2, two_pi * two_pi) == 5);
  CHECK(geodesic_count(2, 0.0) == 1);
  CHECK(geodesic_count(3, 2 * two_pi * two_pi) == 19);
}

TEST_CASE("geodesic_count equals 1 + sum of rep numbers") {
  for (int n = 1; n <= 4; ++n)
    for (long k = 1; k <= 30; ++k) {
      double x = two_pi * two_pi * double(k);
      RepNumberTable r = rep_numbers(n, k);
      Int expect = 1;
      for (long i = 1; i <= k; ++i) expect += r.value(i);
      CHECK(geodesic_count(n, x) == expect);
    }
}

TEST_CASE("rank-1 torus grows linearly: every SO(3) geodesic is periodic") {
  for (long j = 0; j <= 40; ++j) {
    double x = std::pow(two_pi * j, 2);
    CHECK(geodesic_count(1, x) == 2 * j + 1);
  }
}

TEST_CASE("length_spectrum structure") {
  auto ls2 = length_spectrum(2, 4 * two_pi);
  REQUIRE(ls2.size() >= 3);
  CHECK(ls2[0].k == 0);
  CHECK(ls2[0].count == 1);
  CHECK(ls2[1].k == 1);
  CHECK(ls2[1].count == 4);
  CHECK(ls2[2].k == 2);
  CHECK(ls2[2].count == 4);
  // k = 3 is an empty shell in Z^2: never emitted
  for (const auto& c : ls2) CHECK(c.k != 3);
  // every length is 2 pi sqrt(k)
  for (const auto& c : ls2)
    CHECK(c.length == doctest::Approx(two_pi * std::sqrt(double(c.k))).epsilon(1e-14));

  auto trivial = length_spectrum(4, 0.9 * two_pi);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].k == 0);

  auto ls4 = length_spectrum(4, 1.1 * two_pi);
  REQUIRE(ls4.size() == 2);
  CHECK(ls4[1].count == 8);  // r_4(1)
}

TEST_CASE("circle_problem_report annotations") {
  std::vector<double> grid = {10, 20, 40, 80};
  CircleReport r2 = circle_problem_report(2, grid);
  CHECK(r2.delta == Rat(131, 416));
  CHECK(r2.zeta == 0);
  CircleReport r3 = circle_problem_report(3, grid);
  CHECK(r3.delta == Rat(21, 32));
  CircleReport r4 = circle_problem_report(4, grid);
  CHECK(r4.delta == 1);
  CHECK(r4.zeta == Rat(2, 3));
  CircleReport r5 = circle_problem_report(5, grid);
  CHECK(r5.delta == Rat(3, 2));
  CHECK(r5.zeta == 0);
  CHECK_THROWS_AS(circle_problem_report(1, grid), std::invalid_argument);
}

TEST_CASE("circle report leading coefficient for n = 2 is x/(4 pi)") {
  std::vector<double> grid = {100.0};
  CircleReport rep = circle_problem_report(2, grid);
  CHECK(rep.series.rows[0].leading == doctest::Approx(100.0 / (4 * std::numbers::pi)));
}

TEST_CASE("circle report counts and fit on a real grid") {
  std::vector<double> grid;
  for (int k = 0; k < 12; ++k) grid.push_back(50.0 * std::pow(2.0, k));
  CircleReport rep = circle_problem_report(2, grid);
  REQUIRE(rep.series.rows.size() == grid.size());
  // counts are nondecreasing and the envelope exponent is far below n/2
  for (size_t i = 1; i < rep.series.rows.size(); ++i)
    CHECK(rep.series.rows[i].count >= rep.series.rows[i - 1].count);
  CHECK(rep.fit.points >= 2);
  CHECK(rep.fit.slope < 1.0);
}

TEST_CASE("budget guard") {
  CHECK_THROWS_AS(geodesic_count(6, 1e9, 1e5), budget_error);
}
