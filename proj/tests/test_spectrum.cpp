#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include "liespec/lattice_count.hpp"
#include "liespec/spectrum.hpp"

using namespace liespec;

namespace {

// Independent oracle: raw box scan over weight coordinates with the public
// exact-rational eigenvalue/multiplicity routes (no shared enumeration code).
Int brute_count(const GroupId& g, const Rat& lambda) {
  RootSystemData rs = build_group_data(g);
  Rat rho2 = 0;
  for (const auto& q : rs.rho) rho2 += q * q;
  long box = static_cast<long>(std::sqrt(to_double(lambda) + to_double(rho2))) + 3;
  Int total = 0;

  if (g.family == Family::SU) {
    int K = g.N - 1;
    std::vector<long> c(K, 0);
    std::function<void(int)> rec = [&](int level) {
      if (level == K) {
        for (int i = 0; i + 1 < K; ++i)
          if (c[i] < c[i + 1]) return;
        WeightVector b = su_weight_from_partition(g.N, c);
        if (casimir_eigenvalue(g, b) <= lambda) total += multiplicity(g, b);
        return;
      }
      for (long v = 0; v <= 2 * box + g.N; ++v) {
        c[level] = v;
        rec(level + 1);
      }
    };
    rec(0);
    return total;
  }

  int arity = g.family == Family::U ? g.N : g.rank();
  std::vector<Rat> shifts = {Rat(0)};
  if (g.family == Family::Spin) shifts.push_back(Rat(1, 2));
  for (const Rat& shift : shifts) {
    std::vector<Rat> b(arity);
    std::function<void(int)> rec = [&](int level) {
      if (level == arity) {
        if (!is_dominant_analytic(g, b)) return;
        if (casimir_eigenvalue(g, b) <= lambda) total += multiplicity(g, b);
        return;
      }
      for (long v = -box - 1; v <= box + 1; ++v) {
        b[level] = Rat(v) + shift;
        rec(level + 1);
      }
    };
    rec(0);
  }
  return total;
}

}  // namespace

TEST_CASE("enumerate_dominant examples") {
  auto so3 = enumerate_dominant({Family::SO, 3}, Rat(2));
  REQUIRE(so3.size() == 2);
  CHECK(so3[0].weight == WeightVector{Rat(0)});
  CHECK(so3[0].eigenvalue == 0);
  CHECK(so3[0].mult == 1);
  CHECK(so3[1].weight == WeightVector{Rat(1)});
  CHECK(so3[1].eigenvalue == 2);
  CHECK(so3[1].mult == 9);

  for (const auto& g : std::vector<GroupId>{{Family::SO, 5}, {Family::U, 3}, {Family::SU, 3},
                                            {Family::Spin, 4}}) {
    auto only_trivial = enumerate_dominant(g, Rat(0));
    REQUIRE(only_trivial.size() == 1);
    CHECK(only_trivial[0].mult == 1);
    CHECK(only_trivial[0].eigenvalue == 0);
  }

  auto so4 = enumerate_dominant({Family::SO, 4}, Rat(3));
  REQUIRE(so4.size() == 2);
  CHECK(so4[0].weight == WeightVector{Rat(0), Rat(0)});
  CHECK(so4[1].weight == WeightVector{Rat(1), Rat(0)});
  CHECK(so4[1].eigenvalue == 3);
  CHECK(so4[1].mult == 16);
}

TEST_CASE("enumeration is sorted lexicographically") {
  auto entries = enumerate_dominant({Family::SO, 5}, Rat(40));
  for (size_t i = 1; i < entries.size(); ++i)
    CHECK(std::lexicographical_compare(entries[i - 1].weight.begin(), entries[i - 1].weight.end(),
                                       entries[i].weight.begin(), entries[i].weight.end()));
}

TEST_CASE("counting examples") {
  CHECK(counting_function({Family::SO, 3}, Rat(2)) == 10);
  CHECK(counting_function({Family::SO, 4}, Rat(3)) == 17);
  for (const auto& g : std::vector<GroupId>{{Family::SO, 6}, {Family::Spin, 5}, {Family::U, 2}})
    CHECK(counting_function(g, Rat(0)) == 1);
}

TEST_CASE("abelian SO(2): the circle spectrum b^2 with no chamber") {
  // eigenvalues b^2 over all integers b, multiplicity 1 each
  CHECK(counting_function({Family::SO, 2}, Rat(10)) == 7);   // |b| <= 3
  CHECK(counting_function({Family::SO, 2}, Rat(9)) == 7);    // ties included
  CHECK(counting_via_full_lattice({Family::SO, 2}, Rat(10)) == 7);
  auto entries = enumerate_dominant({Family::SO, 2}, Rat(4));
  REQUIRE(entries.size() == 5);
  CHECK(entries.front().weight == WeightVector{Rat(-2)});
  for (const auto& e : entries) CHECK(e.mult == 1);
}

TEST_CASE("counting agrees with the brute-force oracle") {
  std::vector<GroupId> gs = {{Family::SO, 3},  {Family::SO, 4}, {Family::SO, 5},
                             {Family::Spin, 3}, {Family::Spin, 4}, {Family::Spin, 5},
                             {Family::Spin, 6}, {Family::U, 2},  {Family::U, 3},
                             {Family::SU, 2},  {Family::SU, 3}};
  for (const auto& g : gs) {
    for (const Rat& lam : {Rat(0), Rat(7, 2), Rat(9), Rat(16)}) {
      Int expect = brute_count(g, lam);
      CHECK_MESSAGE(counting_function(g, lam) == expect,
                    g.str(), " lambda=", rat_str(lam));
    }
  }
}

TEST_CASE("full-lattice Weyl average equals the cone count") {
  std::vector<GroupId> gs = {{Family::SO, 3}, {Family::SO, 4}, {Family::SO, 5}, {Family::SO, 6},
                             {Family::Spin, 4}, {Family::Spin, 5}, {Family::Spin, 6},
                             {Family::U, 2}, {Family::U, 3}, {Family::SU, 3}, {Family::SU, 4}};
  for (const auto& g : gs)
    for (const Rat& lam : {Rat(1), Rat(15, 2), Rat(20)})
      CHECK_MESSAGE(counting_via_full_lattice(g, lam) == counting_function(g, lam),
                    g.str(), " lambda=", rat_str(lam));
}

TEST_CASE("SO(3) closed form") {
  for (long K = 0; K <= 60; ++K) {
    Rat lam(K * (K + 1));
    Int expect = Int(K + 1) * (2 * K + 1) * (2 * K + 3) / 3;
    CHECK(counting_function({Family::SO, 3}, lam) == expect);
  }
}

TEST_CASE("count is monotone in lambda") {
  GroupId g{Family::SO, 5};
  Int prev = -1;
  for (int i = 0; i <= 12; ++i) {
    Int c = counting_function(g, Rat(3 * i, 2));
    CHECK(c >= prev);
    prev = c;
  }
}

TEST_CASE("worker partitioning is exact") {
  for (const auto& g : std::vector<GroupId>{{Family::SO, 5}, {Family::U, 3}, {Family::SU, 3},
                                            {Family::Spin, 5}}) {
    Int ref = counting_function(g, Rat(60));
    for (int w : {2, 3, 7}) {
      EnumOptions opt;
      opt.workers = w;
      CHECK(counting_function(g, Rat(60), opt) == ref);
    }
  }
}

TEST_CASE("budget guard refuses oversized enumerations") {
  EnumOptions opt;
  opt.budget = 100;
  CHECK_THROWS_AS(counting_function({Family::SO, 6}, Rat(4000), opt), budget_error);
  CHECK_THROWS_AS(enumerate_dominant({Family::SO, 6}, Rat(4000), opt), budget_error);
  CHECK_THROWS_AS(counting_via_full_lattice({Family::SO, 6}, Rat(4000), opt), budget_error);
  CHECK_THROWS_AS(counting_via_full_lattice({Family::SU, 4}, Rat(4000), opt), budget_error);
}

TEST_CASE("negative lambda is rejected") {
  CHECK_THROWS_AS(counting_function({Family::SO, 3}, Rat(-1)), std::invalid_argument);
}

TEST_CASE("leading coefficient: SO(3) and SO(4) against the exact ball oracle") {
  // SO(3): (1/|W|) int_{-1}^{1} 4x^2 dx = 4/3, plain rational
  PiScaled c3 = leading_coefficient_exact({Family::SO, 3});
  CHECK(c3.coeff == Rat(4, 3));
  CHECK(c3.pi_pow == 0);

  // the ball-integral route, computed exactly from the multiplicity polynomial
  auto oracle = [](const GroupId& g) {
    PiScaled b = ball_integral_exact(multiplicity_polynomial(g));
    RootSystemData rs = build_group_data(g);
    b.coeff /= Rat(rs.weyl_order);
    b.coeff.canonicalize();
    return b;
  };
  CHECK(oracle({Family::SO, 3}) == c3);

  PiScaled c4 = leading_coefficient_exact({Family::SO, 4});
  CHECK(c4 == oracle({Family::SO, 4}));
  CHECK(c4.coeff == Rat(1, 24));
  CHECK(c4.pi_pow == 1);  // pi/24

  // same consistency for U(2): both routes give pi/4
  PiScaled cu2 = leading_coefficient_exact({Family::U, 2});
  CHECK(cu2 == oracle({Family::U, 2}));
  CHECK(cu2.coeff == Rat(1, 4));
  CHECK(cu2.pi_pow == 1);
}

TEST_CASE("leading_term scaling") {
  CHECK(leading_term({Family::SO, 3}, 0) == 0);
  CHECK(leading_term({Family::SO, 3}, 2.0) ==
        doctest::Approx((4.0 / 3) * std::pow(2.0, 1.5)).epsilon(1e-14));
}

TEST_CASE("remainder_series examples") {
  auto s0 = remainder_series({Family::SO, 3}, {Rat(0)});
  CHECK(to_double(s0.rows[0].count) == 1);
  CHECK(s0.rows[0].remainder == doctest::Approx(1.0));

  auto s2 = remainder_series({Family::SO, 3}, {Rat(2)});
  CHECK(s2.rows[0].remainder ==
        doctest::Approx(10 - (4.0 / 3) * std::pow(2.0, 1.5)).epsilon(1e-12));
}

TEST_CASE("predicted_alpha examples") {
  CHECK(predicted_alpha({Family::SO, 4}).family_exponent == Rat(7, 3));
  CHECK(predicted_alpha({Family::SO, 5}).family_exponent == Rat(13, 3));
  CHECK(predicted_alpha({Family::U, 2}).family_exponent == Rat(4, 3));
  CHECK(predicted_alpha({Family::SU, 3}).family_exponent == Rat(10, 3));
  CHECK(predicted_alpha({Family::Spin, 5}).family_exponent == Rat(13, 3));

  AlphaPrediction so11 = predicted_alpha({Family::SO, 11});
  CHECK(so11.sharp_applicable);
  CHECK(so11.sharp_exponent == Rat(53, 2));  // (55 - 2)/2
  CHECK_FALSE(predicted_alpha({Family::SO, 9}).sharp_applicable);
  CHECK(predicted_alpha({Family::U, 5}).sharp_applicable);
}

TEST_CASE("alpha equals (d-1)/2 - (n-1)/(2(n+1))") {
  for (const auto& g : std::vector<GroupId>{{Family::SO, 6}, {Family::SO, 9}, {Family::U, 4},
                                            {Family::SU, 5}, {Family::Spin, 7}}) {
    AlphaPrediction a = predicted_alpha(g);
    int n = g.rank(), d = g.dim();
    Rat expect = Rat(d - 1, 2) - Rat(n - 1, 2 * (n + 1));
    expect.canonicalize();
    CHECK(a.family_exponent == expect);
  }
}

TEST_CASE("exceptional isomorphism Spin(6) = SU(4): identical spectra") {
  // the bi-invariant metrics coincide exactly (Killing normalizations of
  // so(6) and su(4) differ by the same factor as the trace forms), so the
  // two entirely different enumeration paths must produce equal counts
  for (long lam : {1, 7, 30, 120, 500})
    CHECK(counting_function({Family::Spin, 6}, Rat(lam)) ==
          counting_function({Family::SU, 4}, Rat(lam)));
}

TEST_CASE("Spin(3) = SU(2) up to the metric factor 2") {
  for (long lam : {1, 5, 24, 100})
    CHECK(counting_function({Family::Spin, 3}, Rat(lam)) ==
          counting_function({Family::SU, 2}, Rat(2 * lam)));
}

TEST_CASE("cone and full-lattice routes agree at depth (larger cutoffs)") {
  struct Case {
    GroupId g;
    long lam;
  };
  for (const auto& c : std::vector<Case>{{{Family::SO, 7}, 300},
                                         {{Family::SO, 8}, 200},
                                         {{Family::Spin, 7}, 200},
                                         {{Family::U, 4}, 300},
                                         {{Family::SU, 5}, 200}})
    CHECK(counting_function(c.g, Rat(c.lam)) == counting_via_full_lattice(c.g, Rat(c.lam)));
}

TEST_CASE("SO(4) normalized remainder decreases from lambda to 16 lambda") {
  GroupId so4{Family::SO, 4};
  double c = leading_coefficient_exact(so4).value();
  auto normalized = [&](long lam) {
    Int count = counting_function(so4, Rat(lam));
    double rem = to_double(count) - c * std::pow(double(lam), 3.0);
    return std::fabs(rem) / std::pow(double(lam), 2.5);
  };
  CHECK(normalized(40000) < normalized(2500));
}

TEST_CASE("spin rescaling identity") {
  // brute oracle for N=3: sum 4 y^2 over half-integers |y| <= 3/2 vs integers |y| <= 3
  auto [l3, r3] = spin_rescaling_check(3, Rat(3, 2));
  CHECK(l3 == r3);
  CHECK(r3 == 112);

  auto [l0, r0] = spin_rescaling_check(4, Rat(0));
  CHECK(l0 == 0);  // m vanishes at the origin for every N >= 3
  CHECK(r0 == 0);

  auto [l5, r5] = spin_rescaling_check(5, Rat(2));
  CHECK(l5 == r5);

  for (int N : {3, 4, 5})
    for (int half = 1; half <= 6; ++half) {
      auto [lhs, rhs] = spin_rescaling_check(N, Rat(half, 2));
      CHECK_MESSAGE(lhs == rhs, "N=", N, " R=", half, "/2");
    }
}
