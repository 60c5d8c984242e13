#include "liespec/envelope.hpp"

#include <cmath>
#include <stdexcept>

namespace liespec {

std::vector<size_t> running_max_indices(const std::vector<double>& v) {
  std::vector<size_t> idx;
  double best = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    double a = std::fabs(v[i]);
    if (a > 0 && a >= best) {
      best = a;
      idx.push_back(i);
    }
  }
  return idx;
}

EnvelopeFit fit_envelope_exponent(const std::vector<double>& params,
                                  const std::vector<double>& values) {
  if (params.size() != values.size())
    throw std::invalid_argument("fit_envelope_exponent: size mismatch");
  if (params.size() < 8)
    throw std::invalid_argument("fit_envelope_exponent: need at least 8 samples");
  for (size_t i = 1; i < params.size(); ++i)
    if (!(params[i] > params[i - 1]))
      throw std::invalid_argument("fit_envelope_exponent: params must be ascending");

  EnvelopeFit f;
  auto idx = running_max_indices(values);
  f.points = idx.size();
  if (idx.empty()) {
    f.exact = true;  // remainder identically zero: the asymptotics are exact
    return f;
  }
  if (idx.size() < 2) {
    // envelope degenerates to one point; no slope information
    f.slope = 0;
    f.residual = 0;
    return f;
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i : idx) {
    double x = std::log(params[i]);
    double y = std::log(std::fabs(values[i]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double n = static_cast<double>(idx.size());
  double det = n * sxx - sx * sx;
  f.slope = (n * sxy - sx * sy) / det;
  double icept = (sy - f.slope * sx) / n;
  double rss = 0;
  for (size_t i : idx) {
    double x = std::log(params[i]);
    double y = std::log(std::fabs(values[i]));
    double e = y - (f.slope * x + icept);
    rss += e * e;
  }
  f.residual = std::sqrt(rss / n);
  return f;
}

std::vector<double> dyadic_window_maxima(const std::vector<double>& params,
                                         const std::vector<double>& values) {
  if (params.size() != values.size() || params.empty())
    throw std::invalid_argument("dyadic_window_maxima: bad input");
  double p0 = params.front();
  if (!(p0 > 0)) throw std::invalid_argument("dyadic_window_maxima: params must be positive");
  std::vector<double> maxima;
  for (size_t i = 0; i < params.size(); ++i) {
    int w = static_cast<int>(std::floor(std::log2(params[i] / p0) + 1e-12));
    if (w < 0) w = 0;
    if (static_cast<size_t>(w) >= maxima.size()) maxima.resize(w + 1, 0.0);
    maxima[w] = std::max(maxima[w], std::fabs(values[i]));
  }
  return maxima;
}

bool envelope_stabilizes(const std::vector<double>& params,
                         const std::vector<double>& values, double slack) {
  auto maxima = dyadic_window_maxima(params, values);
  if (maxima.size() < 2) return true;
  double last = maxima.back();
  double before = 0;
  for (size_t i = 0; i + 1 < maxima.size(); ++i) before = std::max(before, maxima[i]);
  if (before == 0) return last == 0;
  return last <= slack * before;
}

}  // namespace liespec
