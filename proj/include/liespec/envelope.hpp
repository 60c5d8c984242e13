#pragma once

#include <cstddef>
#include <vector>

namespace liespec {

// Least-squares exponent fit for oscillating remainders. Raw log-log
// regression on a sign-changing remainder is meaningless, so the fit is
// restricted to the running maxima of |value| (the envelope).
struct EnvelopeFit {
  double slope = 0;
  double residual = 0;   // RMS error of the fit on the envelope points
  bool exact = false;    // all remainders were exactly zero
  size_t points = 0;     // number of envelope points used
};

// Indices i where |v[i]| >= |v[j]| for all j < i (and |v[i]| > 0).
std::vector<size_t> running_max_indices(const std::vector<double>& v);

// Fit log|value| = slope * log(param) + c on the envelope points.
// Requires ascending params; needs at least 8 samples.
EnvelopeFit fit_envelope_exponent(const std::vector<double>& params,
                                  const std::vector<double>& values);

// Maximum of |values| per dyadic window [p0*2^k, p0*2^{k+1}) of the parameter.
std::vector<double> dyadic_window_maxima(const std::vector<double>& params,
                                         const std::vector<double>& values);

// Envelope stabilization: the maximum over the last dyadic window does not
// exceed `slack` times the maximum attained before that window.
bool envelope_stabilizes(const std::vector<double>& params,
                         const std::vector<double>& values, double slack = 1.1);

}  // namespace liespec
