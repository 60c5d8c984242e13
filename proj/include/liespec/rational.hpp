#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace liespec {

using Int = mpz_class;
using Rat = mpq_class;

// Exact value of the form coeff * pi^pi_pow. Ball/sphere integrals of
// monomials and the group-volume formulas all live in this ring, which lets
// the leading-coefficient identities be tested symbolically.
struct PiScaled {
  Rat coeff{0};
  int pi_pow = 0;

  double value() const;
  bool operator==(const PiScaled& o) const {
    return (coeff == 0 && o.coeff == 0) || (coeff == o.coeff && pi_pow == o.pi_pow);
  }
  PiScaled operator*(const PiScaled& o) const { return {coeff * o.coeff, pi_pow + o.pi_pow}; }
  std::string str() const;
};

// Gamma(k/2) for integer k >= 1 as r * sqrt(pi)^s with s in {0,1}.
// Gamma(m) = (m-1)!, Gamma(m + 1/2) = (2m)!/(4^m m!) * sqrt(pi).
struct HalfGamma {
  Rat r;
  bool sqrt_pi;
};
HalfGamma gamma_half(long k);

Int binomial(unsigned long n, unsigned long k);
Int int_pow(const Int& base, unsigned long e);
Int int_pow(long base, unsigned long e);

// floor of a rational
Int floor_div(const Rat& q);

double to_double(const Rat& q);
double to_double(const Int& z);

// "p/q" when the denominator is not 1, plain decimal otherwise.
std::string rat_str(const Rat& q);
// Accepts "p", "p/q" and plain decimal floats ("1.5", "2e3").
std::optional<Rat> parse_rat(const std::string& s);

std::string vec_str(const std::vector<Rat>& v);

}  // namespace liespec
