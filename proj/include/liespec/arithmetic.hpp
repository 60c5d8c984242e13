#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "liespec/errors.hpp"
#include "liespec/poly.hpp"
#include "liespec/rational.hpp"
#include "liespec/series.hpp"

namespace liespec {

// r_n(k) = #{ x in Z^n : |x|^2 = k } for 0 <= k <= K. Values live in a
// uint64 array when they fit (the convolution hot path), else in bignums.
struct RepNumberTable {
  int n = 0;
  long K = 0;
  std::vector<std::uint64_t> small;
  std::vector<Int> big;

  bool is_small() const { return big.empty(); }
  Int value(long k) const;
};

// Iterated convolution of the one-dimensional table r_1(0)=1, r_1(j^2)=2.
RepNumberTable rep_numbers(int n, long K, double memory_budget_bytes = 2e9);

// classical divisor function sigma(k) = sum of divisors
long sigma(long k);
std::vector<long> sigma_table(long t);  // sieve

// S_m(t) = sum_{k<=t} k^m sigma(k), computed by the divisor-pair sweep
// over d*j <= t (independent of the sigma sieve).
Int S_m(long t, int m);
// prefix table S_m(1..t) from the sieve route.
std::vector<Int> S_m_table(long t, int m);

// sawtooth psi(u) = u - [u] - 1/2 and D(t) = sum_{k<=t} psi(t/k)/k
Rat psi(const Rat& u);
Rat D_sum(long t);

// E(R) = sum_{k=1}^{R^2} k^m r_n(k); the origin k = 0 is excluded.
Int weighted_ball_sum(int n, int m, long R2);
Int weighted_ball_sum(const RepNumberTable& r, int m, long R2);
// prefix[t] = sum_{k=1}^{t} k^m r(k) for t = 0..K
std::vector<Int> weighted_prefix(const RepNumberTable& r, int m);

// Jacobi four-square route: (E_4(m,t), 8 S_m(t) - 4^m * 32 S_m(floor(t/4)))
std::pair<Int, Int> jacobi_identity_check(int m, long t);

// Slice recursion E_{n+1}(R) vs the binomially expanded sum over slices
// j = -R..R of the n-dimensional weighted counts; exact equality expected.
std::pair<Int, Int> dimension_recursion_check(int n, int m, long R);

// Rows (R^2, E(R), Vol(S^{n-1})/(2m+n) R^{2m+n}, remainder, |rem|/R^{2m+n-2}).
CountSeries sharp_leading_check(int n, int m, const std::vector<long>& R2_grid);

// T[k] = sum over the shell |x|^2 = k in Z^n of prod x_i^{e_i}
// (n = e.size()); identically zero when some e_i is odd.
std::vector<Int> shell_monomial_sums(const std::vector<unsigned>& e, long K);
std::vector<Rat> shell_polynomial_sums(const HomogeneousPolynomial& P, long K);

// Exact average of P(x/|x|) over the lattice shell |x|^2 = k (direct shell
// enumeration; even degree stays rational, odd degree vanishes by symmetry).
// Throws std::invalid_argument on an empty shell.
Rat sphere_average(const HomogeneousPolynomial& P, int n, long k);

// kappa: uniform-measure average of P over S^{n-1}
Rat sphere_integral_average_exact(const HomogeneousPolynomial& P);
double sphere_integral_average(const HomogeneousPolynomial& P);

struct EquiRow {
  long k = 0;
  Rat deviation;  // |shell average - kappa|
};
// Deviations for every nonempty shell k <= K (table route).
std::vector<EquiRow> equidistribution_trend(const HomogeneousPolynomial& P, int n, long K);

}  // namespace liespec
