#pragma once

#include <vector>

#include "liespec/arithmetic.hpp"
#include "liespec/envelope.hpp"
#include "liespec/rational.hpp"
#include "liespec/series.hpp"

namespace liespec {

// L(x) = #{ xi in Z^n : |xi| <= sqrt(x)/(2 pi) }, the origin (trivial class)
// included. Boundary shells are resolved with a 1e-9 relative guard on
// x/(4 pi^2).
Int geodesic_count(int n, double x, double budget = 1e9);

struct LengthClass {
  long k = 0;        // squared length = 4 pi^2 k
  double length = 0; // 2 pi sqrt(k)
  Int count;         // lattice multiplicity r_n(k)
};

// Distinct squared lengths up to length_max with their multiplicities,
// ascending; k = 0 is the trivial class. Empty shells are omitted.
std::vector<LengthClass> length_spectrum(int n, double length_max, double budget = 1e9);

struct CircleReport {
  CountSeries series;  // rows (x, L(x), leading, remainder)
  Rat delta;           // best known remainder exponent for this n
  Rat zeta;            // log power
  EnvelopeFit fit;     // envelope slope of the computed remainders
};

// Remainder series of L against omega_n x^{n/2} / (2 pi)^n, annotated with
// the tabulated (delta, zeta) for this dimension.
CircleReport circle_problem_report(int n, const std::vector<double>& x_grid,
                                   double budget = 1e9);

}  // namespace liespec
