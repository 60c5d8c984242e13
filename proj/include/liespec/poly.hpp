#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "liespec/rational.hpp"

namespace liespec {

// Homogeneous polynomial as exponent multi-index -> rational coefficient.
// Homogeneity is structural: every stored multi-index sums to `degree`.
class HomogeneousPolynomial {
 public:
  using Exponents = std::vector<unsigned>;

  HomogeneousPolynomial() = default;
  HomogeneousPolynomial(int nvars, int degree) : nvars_(nvars), degree_(degree) {}

  static HomogeneousPolynomial constant(int nvars, const Rat& c);
  static HomogeneousPolynomial monomial(int nvars, const Exponents& e, const Rat& c);
  // (x_1^2 + ... + x_n^2)^m
  static HomogeneousPolynomial radial_power(int nvars, int m);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rat>& terms() const { return terms_; }

  void add_term(const Exponents& e, const Rat& c);

  HomogeneousPolynomial operator+(const HomogeneousPolynomial& o) const;
  HomogeneousPolynomial operator*(const HomogeneousPolynomial& o) const;
  HomogeneousPolynomial operator*(const Rat& c) const;

  Rat eval(const std::vector<Rat>& x) const;
  // Exact evaluation at the rational point y/q given integer y: returns F(y/q).
  Rat eval_scaled(const std::vector<long>& y, const Int& q) const;
  // Integer-weighted evaluation used by lattice sums: D * F(y) with D the
  // common denominator of all coefficients (returned via common_den()).
  Int eval_int_num(const std::vector<long>& y) const;
  Int common_den() const;

  std::string str() const;

 private:
  int nvars_ = 0;
  int degree_ = 0;
  std::map<Exponents, Rat> terms_;
};

// Exact integral of F over the unit ball B_1^n (n = F.nvars()).
// Monomials with any odd exponent vanish; even monomials reduce to the
// Gamma closed form, which is always a rational multiple of pi^floor(n/2).
PiScaled ball_integral_exact(const HomogeneousPolynomial& F);

// Exact integral of F over the unit sphere S^{n-1}.
PiScaled sphere_integral_exact(const HomogeneousPolynomial& F);

// |S^{n-1}| as an exact PiScaled.
PiScaled sphere_area_exact(int n);

// kappa = |S^{n-1}|^{-1} \int_{S^{n-1}} F: the pi powers cancel, so the
// spherical average of a polynomial is an exact rational.
Rat sphere_average_integral_exact(const HomogeneousPolynomial& F);

// Term syntax: "c*x1^2*x2" with '+' separated terms; coefficients are
// rationals ("3/2"), "1" denotes the constant polynomial of degree 0.
HomogeneousPolynomial parse_polynomial(int nvars, const std::string& text);

}  // namespace liespec
