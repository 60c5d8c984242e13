#pragma once

#include <vector>

#include "liespec/envelope.hpp"
#include "liespec/errors.hpp"
#include "liespec/poly.hpp"
#include "liespec/rational.hpp"
#include "liespec/series.hpp"

namespace liespec {

// Full-rank lattice { B l + h : l in Z^n } with exact rational basis columns
// and optional shift h.
class Lattice {
 public:
  // basis[i][j] = i-th coordinate of column v_j; shift empty means 0.
  static Lattice make(std::vector<std::vector<Rat>> basis, std::vector<Rat> shift = {});
  static Lattice integer(int n);
  static Lattice scaled_identity(int n, const Rat& s);

  int n() const { return n_; }
  const std::vector<std::vector<Rat>>& basis() const { return basis_; }
  const std::vector<Rat>& shift() const { return shift_; }
  const Rat& det() const { return det_; }
  bool has_shift() const;
  Lattice with_shift(std::vector<Rat> h) const;

 private:
  Lattice() = default;
  int n_ = 0;
  std::vector<std::vector<Rat>> basis_;
  std::vector<Rat> shift_;
  Rat det_;
  std::vector<std::vector<Rat>> inv_;  // B^{-1}, used for enumeration boxes
  friend Rat weighted_count(const Lattice&, const HomogeneousPolynomial&, const Rat&, double);
};

// M(R) = sum of F over lattice points inside the closed ball of radius R
// (boundary included; comparisons are exact in Q).
Rat weighted_count(const Lattice& L, const HomogeneousPolynomial& F, const Rat& R,
                   double budget = 1e9);

// int_{B_1^n} F, n = F.nvars(); exact Gamma closed form under the hood.
double ball_integral(const HomogeneousPolynomial& F);

// Vol(Gamma*) = 1 / |det B|.
Rat dual_volume_exact(const Lattice& L);
double dual_volume(const Lattice& L);

struct Asymptote {
  double value = 0;          // Vol(Gamma*) * int_{B_1} F * R^{p+n}
  Rat leading_exponent;      // p + n
  Rat remainder_exponent;    // p + n - 2/(n+1)
};
Asymptote predicted_asymptote(const Lattice& L, const HomogeneousPolynomial& F, double R);

// Rows (R, M(R), leading, remainder, |remainder|/R^{p+n-2/(n+1)}).
CountSeries lattice_remainder_series(const Lattice& L, const HomogeneousPolynomial& F,
                                     const std::vector<Rat>& R_grid, double budget = 1e9);

// Envelope exponent fit of log|remainder| against log R restricted to the
// running maxima; `exact` flags an identically-zero remainder series.
EnvelopeFit remainder_exponent_fit(const CountSeries& series);

}  // namespace liespec
