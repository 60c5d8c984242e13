#include "liespec/geodesics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace liespec {

namespace {

constexpr double four_pi2 = 4.0 * std::numbers::pi * std::numbers::pi;

long shell_cutoff(double x) {
  if (x < 0) throw std::invalid_argument("geodesics: x must be >= 0");
  double t = x / four_pi2;
  return static_cast<long>(std::floor(t + 1e-9 * std::max(1.0, t)));
}

}  // namespace

Int geodesic_count(int n, double x, double budget) {
  if (n < 1) throw std::invalid_argument("geodesic_count: n must be >= 1");
  long kmax = shell_cutoff(x);
  double pts = std::pow(2 * std::sqrt(double(kmax)) + 1, n);
  if (pts > budget) throw budget_error("geodesic_count: ball too large for budget");
  RepNumberTable r = rep_numbers(n, kmax);
  Int total = 1;  // trivial class xi = 0
  for (long k = 1; k <= kmax; ++k) total += r.value(k);
  return total;
}

std::vector<LengthClass> length_spectrum(int n, double length_max, double budget) {
  if (n < 1) throw std::invalid_argument("length_spectrum: n must be >= 1");
  if (length_max < 0) throw std::invalid_argument("length_spectrum: length_max must be >= 0");
  long kmax = shell_cutoff(length_max * length_max);
  double pts = std::pow(2 * std::sqrt(double(kmax)) + 1, n);
  if (pts > budget) throw budget_error("length_spectrum: range too large for budget");
  RepNumberTable r = rep_numbers(n, kmax);
  std::vector<LengthClass> out;
  out.push_back({0, 0.0, Int(1)});
  for (long k = 1; k <= kmax; ++k) {
    Int rk = r.value(k);
    if (rk == 0) continue;
    out.push_back({k, 2 * std::numbers::pi * std::sqrt(double(k)), rk});
  }
  return out;
}

CircleReport circle_problem_report(int n, const std::vector<double>& x_grid, double budget) {
  if (n < 2) throw std::invalid_argument("circle_problem_report: n must be >= 2");
  if (x_grid.empty()) throw std::invalid_argument("circle_problem_report: empty grid");
  CircleReport rep;
  switch (n) {
    case 2: rep.delta = Rat(131, 416); rep.zeta = 0; break;
    case 3: rep.delta = Rat(21, 32); rep.zeta = 0; break;
    case 4: rep.delta = Rat(1); rep.zeta = Rat(2, 3); break;
    default:
      rep.delta = Rat(n - 2, 2);
      rep.delta.canonicalize();
      rep.zeta = 0;
      break;
  }

  long kmax = shell_cutoff(x_grid.back());
  double pts = std::pow(2 * std::sqrt(double(kmax)) + 1, n);
  if (pts > budget) throw budget_error("circle_problem_report: range too large for budget");
  RepNumberTable r = rep_numbers(n, kmax);
  std::vector<Int> prefix = weighted_prefix(r, 0);

  HomogeneousPolynomial one = HomogeneousPolynomial::constant(n, 1);
  double omega_n = ball_integral_exact(one).value();
  double coeff = omega_n / std::pow(2 * std::numbers::pi, n);
  for (double x : x_grid) {
    long k = shell_cutoff(x);
    SeriesRow row;
    Rat xr;
    mpq_set_d(xr.get_mpq_t(), x);
    row.param = xr;
    row.count = Rat(Int(1) + prefix[k]);
    row.leading = coeff * std::pow(x, n / 2.0);
    row.remainder = to_double(row.count) - row.leading;
    double xd = to_double(rep.delta);
    row.normalized = x > 0 ? std::fabs(row.remainder) / std::pow(x, xd) : 0.0;
    rep.series.rows.push_back(std::move(row));
  }
  std::vector<double> params, values;
  for (const auto& row : rep.series.rows) {
    params.push_back(to_double(row.param));
    values.push_back(row.remainder);
  }
  if (params.size() >= 8) rep.fit = fit_envelope_exponent(params, values);
  return rep;
}

}  // namespace liespec
