#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "liespec/lattice_count.hpp"

using namespace liespec;

namespace {

// independent brute-force oracle over a fixed box in lattice coefficients
Rat brute_weighted(const Lattice& L, const HomogeneousPolynomial& F, const Rat& R, long box) {
  int n = L.n();
  std::vector<long> l(n, 0);
  Rat total = 0;
  std::function<void(int)> rec = [&](int level) {
    if (level == n) {
      std::vector<Rat> y(n, Rat(0));
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) y[i] += L.basis()[i][j] * l[j];
        if (!L.shift().empty()) y[i] += L.shift()[i];
      }
      Rat norm2 = 0;
      for (const auto& q : y) norm2 += q * q;
      if (norm2 <= R * R) total += F.eval(y);
      return;
    }
    for (long v = -box; v <= box; ++v) {
      l[level] = v;
      rec(level + 1);
    }
  };
  rec(0);
  total.canonicalize();
  return total;
}

}  // namespace

TEST_CASE("weighted_count examples") {
  Lattice z2 = Lattice::integer(2);
  auto one = HomogeneousPolynomial::constant(2, 1);
  CHECK(weighted_count(z2, one, Rat(2)) == 13);
  CHECK(weighted_count(z2, one, Rat(0)) == 1);

  auto r2 = HomogeneousPolynomial::radial_power(2, 1);
  CHECK(weighted_count(z2, r2, Rat(2)) == 28);
}

TEST_CASE("weighted_count on skew and shifted lattices matches brute force") {
  auto x1sq = parse_polynomial(2, "x1^2");
  auto one = HomogeneousPolynomial::constant(2, 1);

  Lattice skew = Lattice::make({{Rat(1), Rat(1, 2)}, {Rat(0), Rat(1)}});
  CHECK(weighted_count(skew, one, Rat(3)) == brute_weighted(skew, one, Rat(3), 8));
  CHECK(weighted_count(skew, x1sq, Rat(3)) == brute_weighted(skew, x1sq, Rat(3), 8));

  Lattice shifted = Lattice::integer(2).with_shift({Rat(1, 3), Rat(1, 7)});
  CHECK(weighted_count(shifted, one, Rat(4)) == brute_weighted(shifted, one, Rat(4), 8));
  CHECK(weighted_count(shifted, x1sq, Rat(4)) == brute_weighted(shifted, x1sq, Rat(4), 8));

  Lattice both = Lattice::make({{Rat(2, 3), Rat(1, 5)}, {Rat(-1, 2), Rat(1)}},
                               {Rat(1, 4), Rat(-2, 7)});
  CHECK(weighted_count(both, one, Rat(3)) == brute_weighted(both, one, Rat(3), 12));
  CHECK(weighted_count(both, x1sq, Rat(3)) == brute_weighted(both, x1sq, Rat(3), 12));
}

TEST_CASE("boundary points are included (closed ball)") {
  Lattice z1 = Lattice::integer(1);
  auto one = HomogeneousPolynomial::constant(1, 1);
  CHECK(weighted_count(z1, one, Rat(3)) == 7);       // -3..3
  CHECK(weighted_count(z1, one, Rat(5, 2)) == 5);    // -2..2
}

TEST_CASE("scaling covariance") {
  auto F = parse_polynomial(2, "x1^2 + x1*x2");
  Lattice B = Lattice::make({{Rat(1), Rat(1, 2)}, {Rat(0), Rat(1)}});
  Rat s(3, 2);
  std::vector<std::vector<Rat>> scaled = B.basis();
  for (auto& row : scaled)
    for (auto& e : row) e *= s;
  Lattice sB = Lattice::make(scaled);
  Rat lhs = weighted_count(sB, F, s * Rat(3));
  Rat rhs = weighted_count(B, F, Rat(3)) * s * s;  // degree 2
  CHECK(lhs == rhs);
}

TEST_CASE("odd weights vanish on sign-symmetric lattices") {
  auto F = parse_polynomial(2, "x1^3 + x1*x2^2");
  CHECK(weighted_count(Lattice::integer(2), F, Rat(5)) == 0);
}

TEST_CASE("singular basis is rejected at construction") {
  CHECK_THROWS_AS(Lattice::make({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}), std::invalid_argument);
}

TEST_CASE("dual volumes") {
  CHECK(dual_volume_exact(Lattice::integer(3)) == 1);
  CHECK(dual_volume_exact(Lattice::scaled_identity(2, Rat(2))) == Rat(1, 4));
  CHECK(dual_volume_exact(Lattice::make({{Rat(1), Rat(1, 2)}, {Rat(0), Rat(1)}})) == 1);
}

TEST_CASE("predicted_asymptote exponents and value") {
  Lattice z2 = Lattice::integer(2);
  auto one = HomogeneousPolynomial::constant(2, 1);
  Asymptote a = predicted_asymptote(z2, one, 10.0);
  CHECK(a.leading_exponent == 2);
  CHECK(a.remainder_exponent == Rat(4, 3));
  CHECK(a.value == doctest::Approx(std::numbers::pi * 100).epsilon(1e-13));
  CHECK(predicted_asymptote(z2, one, 0.0).value == 0);

  Lattice z5 = Lattice::integer(5);
  auto r2 = HomogeneousPolynomial::radial_power(5, 1);
  CHECK(predicted_asymptote(z5, r2, 1.0).remainder_exponent == Rat(20, 3));
}

TEST_CASE("budget guard") {
  auto one = HomogeneousPolynomial::constant(2, 1);
  CHECK_THROWS_AS(weighted_count(Lattice::integer(2), one, Rat(100000), 1000), budget_error);
}

TEST_CASE("remainder_exponent_fit: synthetic exact power") {
  CountSeries s;
  for (int k = 0; k < 12; ++k) {
    SeriesRow row;
    double R = 8 * std::pow(std::sqrt(2.0), k);
    Rat pr;
    mpq_set_d(pr.get_mpq_t(), R);
    row.param = pr;
    row.remainder = std::pow(R, 4.0 / 3);
    s.rows.push_back(row);
  }
  EnvelopeFit f = remainder_exponent_fit(s);
  CHECK_FALSE(f.exact);
  CHECK(f.slope == doctest::Approx(4.0 / 3).epsilon(1e-9));
  CHECK(f.residual < 1e-9);
}

TEST_CASE("remainder_exponent_fit: oscillating synthetic within 0.05") {
  CountSeries s;
  for (double R = 8; R <= 1e5; R *= std::pow(2.0, 0.125)) {
    SeriesRow row;
    Rat pr;
    mpq_set_d(pr.get_mpq_t(), R);
    row.param = pr;
    row.remainder = std::pow(R, 4.0 / 3) * (2 + std::sin(R));
    s.rows.push_back(row);
  }
  EnvelopeFit f = remainder_exponent_fit(s);
  CHECK(std::fabs(f.slope - 4.0 / 3) < 0.05);
}

TEST_CASE("remainder_exponent_fit: all-zero series flags exact") {
  CountSeries s;
  for (int k = 0; k < 10; ++k) {
    SeriesRow row;
    row.param = Rat(1 << k);
    row.remainder = 0;
    s.rows.push_back(row);
  }
  EnvelopeFit f = remainder_exponent_fit(s);
  CHECK(f.exact);
}

TEST_CASE("remainder_exponent_fit needs 8 geometric samples") {
  CountSeries s;
  for (int k = 0; k < 5; ++k) {
    SeriesRow row;
    row.param = Rat(1 << k);
    row.remainder = 1.0;
    s.rows.push_back(row);
  }
  CHECK_THROWS_AS(remainder_exponent_fit(s), std::invalid_argument);
}

TEST_CASE("circle-count slope stays at most 1") {
  Lattice z2 = Lattice::integer(2);
  auto one = HomogeneousPolynomial::constant(2, 1);
  std::vector<Rat> grid;
  CountSeries s;
  for (int k = 4; k <= 12; ++k) grid.push_back(Rat(1L << k));
  s = lattice_remainder_series(z2, one, grid, 2e9);
  EnvelopeFit f = remainder_exponent_fit(s);
  CHECK(f.slope <= 1.0);
}

TEST_CASE("shifted lattice keeps the unshifted envelope exponent") {
  auto one = HomogeneousPolynomial::constant(2, 1);
  std::vector<Rat> grid;
  for (int k = 0; k < 13; ++k) {
    double R = 8 * std::pow(std::sqrt(2.0), k);
    Rat pr;
    mpq_set_d(pr.get_mpq_t(), R);
    grid.push_back(pr);
  }
  CountSeries plain = lattice_remainder_series(Lattice::integer(2), one, grid);
  CountSeries shifted =
      lattice_remainder_series(Lattice::integer(2).with_shift({Rat(1, 3), Rat(1, 7)}), one, grid);
  EnvelopeFit fp = remainder_exponent_fit(plain);
  EnvelopeFit fs = remainder_exponent_fit(shifted);
  // same asymptotics: both envelopes sit well below the theorem exponent 4/3
  CHECK(fp.slope < Rat(4, 3).get_d());
  CHECK(fs.slope < Rat(4, 3).get_d());
  // and the normalized remainders stay envelope-bounded
  std::vector<double> params, vp, vs;
  for (size_t i = 0; i < plain.rows.size(); ++i) {
    params.push_back(to_double(plain.rows[i].param));
    vp.push_back(plain.rows[i].normalized);
    vs.push_back(shifted.rows[i].normalized);
  }
  CHECK(envelope_stabilizes(params, vp));
  CHECK(envelope_stabilizes(params, vs));
}
