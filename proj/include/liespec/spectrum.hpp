#pragma once

#include <utility>
#include <vector>

#include "liespec/errors.hpp"
#include "liespec/lie_data.hpp"
#include "liespec/series.hpp"

namespace liespec {

struct SpectrumEntry {
  WeightVector weight;
  Rat eigenvalue;
  Int mult;
};

struct EnumOptions {
  double budget = 1e9;  // maximum predicted lattice visits
  int workers = 1;      // partitions of the leading coordinate; result is
                        // bit-identical for any worker count
};

// All dominant analytic weights with casimir_eigenvalue <= lambda_max,
// ordered lexicographically by weight coordinates.
std::vector<SpectrumEntry> enumerate_dominant(const GroupId& g, const Rat& lambda_max,
                                              const EnumOptions& opt = {});

// N(lambda) = sum of multiplicities over the dominant cone (ties included,
// j = 0 counted).
Int counting_function(const GroupId& g, const Rat& lambda, const EnumOptions& opt = {});

// The Weyl-averaged route: (1/|W|) sum over the full shifted weight lattice
// of m_n(x) chi_R(x). Must equal counting_function exactly.
Int counting_via_full_lattice(const GroupId& g, const Rat& lambda, const EnumOptions& opt = {});

// omega_d Vol(G) / (2 pi)^d as an exact rational multiple of a power of pi.
PiScaled leading_coefficient_exact(const GroupId& g);

// omega_d Vol(G) / (2 pi)^d * lambda^{d/2}
double leading_term(const GroupId& g, double lambda);

// Rows (lambda, N(lambda), leading, remainder, |remainder|/lambda^{(d-1)/2}).
CountSeries remainder_series(const GroupId& g, const std::vector<Rat>& lambda_grid,
                             const EnumOptions& opt = {});

struct AlphaPrediction {
  Rat family_exponent;    // the rank-dependent improved exponent
  Rat sharp_exponent;     // (d - 2)/2
  bool sharp_applicable;  // rank >= 5
};
AlphaPrediction predicted_alpha(const GroupId& g);

// Both sides of the Spin/SO rescaling identity as integers:
// (2^{2l} M_Spin(R), M_SO(2R)), where M_G is the full weighted lattice count
// of the multiplicity polynomial (Spin weights on the half-integer lattice).
std::pair<Int, Int> spin_rescaling_check(int N, const Rat& R, const EnumOptions& opt = {});

}  // namespace liespec
