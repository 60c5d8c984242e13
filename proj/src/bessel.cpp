#include "liespec/bessel.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace liespec {

namespace {

constexpr double pi = std::numbers::pi;

// QUADPACK 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule
constexpr double kXgk[8] = {0.991455371120812639206854697526329,
                            0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926,
                            0.741531185599394439863864773280788,
                            0.586087235467691130294144838258730,
                            0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245,
                            0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970,
                            0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518,
                            0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550,
                            0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649,
                            0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082,
                           0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975,
                           0.417959183673469387755102040816327};

struct GK {
  double integral;
  double error;
  double fmax;  // max |f| over the nodes, for the rounding-noise floor
};

template <typename F>
GK gk15(const F& f, double a, double b) {
  double h = 0.5 * (b - a);
  double c = 0.5 * (a + b);
  double fc = f(c);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double fmax = std::fabs(fc);
  for (int j = 0; j < 7; ++j) {
    double x = h * kXgk[j];
    double f1 = f(c - x);
    double f2 = f(c + x);
    resk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    fmax = std::max({fmax, std::fabs(f1), std::fabs(f2)});
  }
  return {resk * h, std::fabs((resk - resg) * h), fmax};
}

// Bisection with a noise floor scaled to the integrand's own evaluation
// noise (noise_rel * |f|): a noisy panel's error estimate shrinks with its
// width exactly like the inherited tolerance does, so without the floor the
// recursion stalemates and the tree blows up exponentially. Bessel
// evaluations carry ~1e-13 relative noise from series cancellation; plain
// cos/exp integrands sit at machine level.
template <typename F>
double adaptive_gk(const F& f, double a, double b, double tol, double noise_rel = 5e-13,
                   int depth = 0) {
  GK r = gk15(f, a, b);
  double floor_tol = noise_rel * r.fmax * (b - a);
  double goal = std::max(tol, floor_tol);
  if (r.error <= goal || b - a < 1e-14 * (std::fabs(a) + 1)) return r.integral;
  if (depth >= 48)
    throw quadrature_error("adaptive quadrature exceeded maximum depth");
  double m = 0.5 * (a + b);
  return adaptive_gk(f, a, m, 0.5 * tol, noise_rel, depth + 1) +
         adaptive_gk(f, m, b, 0.5 * tol, noise_rel, depth + 1);
}

double series_j(double nu, double t) {
  // (t/2)^nu / Gamma(nu+1) * sum_k (-1)^k (t^2/4)^k / (k! (nu+1)...(nu+k))
  double lead;
  if (t == 0) return nu == 0 ? 1.0 : 0.0;
  lead = std::exp(nu * std::log(0.5 * t) - std::lgamma(nu + 1.0));
  double q = 0.25 * t * t;
  double term = lead;
  double sum = lead;
  for (int k = 1; k <= 400; ++k) {
    term *= -q / (k * (nu + k));
    sum += term;
    if (std::fabs(term) < 1e-18 * std::fabs(sum) + 1e-300) return sum;
  }
  throw std::domain_error("bessel_j: series did not converge");
}

bool asymptotic_j(double nu, double t, double& out) {
  double mu = 4.0 * nu * nu;
  double term = 1.0;
  double p = 1.0, q = 0.0;
  double prev = 1.0;
  bool ok = false;
  for (int k = 1; k <= 60; ++k) {
    double f = (mu - double(2 * k - 1) * (2 * k - 1)) / (8.0 * k * t);
    term *= f;
    double mag = std::fabs(term);
    if (mag > prev) {  // divergence sets in
      ok = prev < 1e-13;
      break;
    }
    int r = k % 4;
    if (r == 0) p += term;
    else if (r == 1) q += term;
    else if (r == 2) p -= term;
    else q -= term;
    prev = mag;
    if (mag < 1e-17) {
      ok = true;
      break;
    }
  }
  if (!ok && prev < 1e-13) ok = true;
  if (!ok) return false;
  double w = t - (0.5 * nu + 0.25) * pi;
  out = std::sqrt(2.0 / (pi * t)) * (p * std::cos(w) - q * std::sin(w));
  return true;
}

// 20-point Gauss-Legendre, positive half (nodes are symmetric)
constexpr long double kGl20[10][2] = {
    {0.0765265211334973337546404L, 0.152753387130725850698084L},
    {0.227785851141645078080496L, 0.149172986472603746787829L},
    {0.373706088715419560672548L, 0.142096109318382051329298L},
    {0.510867001950827098004364L, 0.131688638449176626898494L},
    {0.636053680726515025452837L, 0.118194531961518417312377L},
    {0.746331906460150792614305L, 0.10193011981724043503675L},
    {0.839116971822218823394529L, 0.0832767415767047487247581L},
    {0.912234428251325905867752L, 0.0626720483341090635695065L},
    {0.963971927277913791267666L, 0.04060142980038694133104L},
    {0.993128599185094924786122L, 0.017614007139152118311862L}};

template <typename F>
long double gl20_panels(const F& f, long double a, long double b, int panels) {
  long double sum = 0;
  for (int i = 0; i < panels; ++i) {
    long double pa = a + (b - a) * i / panels;
    long double pb = a + (b - a) * (i + 1) / panels;
    long double h = 0.5L * (pb - pa);
    long double c = 0.5L * (pa + pb);
    long double acc = 0;
    for (const auto& nw : kGl20) acc += nw[1] * (f(c - h * nw[0]) + f(c + h * nw[0]));
    sum += acc * h;
  }
  return sum;
}

// Fixed-panel Gauss-Legendre in long double: the integrands are entire, so
// bounded phase per panel makes the rule error negligible and the absolute
// floor drops to the extended-precision rounding level (~1e-18), which is
// what the exponentially small pinch near t ~ 0.7 nu needs.
double integral_rep_j(double nu, double t) {
  // (1/pi) int_0^pi cos(nu h - t sin h) dh - sin(nu pi)/pi int_0^inf e^{-nu u - t sinh u} du
  constexpr long double pil = 3.14159265358979323846264338328L;
  long double nul = nu, tl = t;
  int panels = static_cast<int>(std::ceil((std::fabs(nu) + t) * 0.45)) + 6;
  auto f = [&](long double h) { return std::cos(nul * h - tl * std::sin(h)); };
  long double osc = gl20_panels(f, 0.0L, pil, panels) / pil;
  double snp = (nu == std::floor(nu)) ? 0.0 : std::sin(nu * pi);
  if (snp != 0.0) {
    long double umax = std::asinh(760.0L / std::max(tl, 1.0L)) + 2.0L;
    auto g = [&](long double u) { return std::exp(-nul * u - tl * std::sinh(u)); };
    int tpanels = static_cast<int>(std::ceil(double(umax) * (std::fabs(nu) + t) * 0.3)) + 6;
    long double tail = gl20_panels(g, 0.0L, umax, tpanels);
    osc -= static_cast<long double>(snp) / pil * tail;
  }
  return static_cast<double>(osc);
}

}  // namespace

double bessel_j(double nu, double t) {
  if (!(t >= 0)) throw std::domain_error("bessel_j: t must be >= 0");
  if (nu <= -1.0) throw std::domain_error("bessel_j: nu must be > -1");
  if (nu > 61.5 || t > 1.2e4)
    throw std::domain_error("bessel_j: outside the validated accuracy domain");
  if (t == 0) {
    if (nu == 0) return 1.0;
    if (nu > 0) return 0.0;
    throw std::domain_error("bessel_j: J_nu(0) diverges for nu < 0");
  }
  // series while the peak alternating term stays within ~1e5 of the result
  // (holds below t = 10 and up to t ~ 0.7 nu); past t ~ nu the evanescent
  // regime ends and cancellation turns catastrophic. The integral
  // representation covers the band in between, where |J| is large enough
  // (>= ~1e-6 at the handoff) that its ~1e-16 absolute floor keeps the
  // relative contract.
  if (t <= 10.0 || t <= 0.70 * nu) return series_j(nu, t);
  double out;
  if (t >= 35.0 && asymptotic_j(nu, t, out)) return out;
  return integral_rep_j(nu, t);
}

void validate_params(const BesselParams& p) {
  if (!(p.alpha >= 2)) throw std::invalid_argument("BesselParams: alpha must be >= 2");
  if (!(p.beta > -0.5)) throw std::invalid_argument("BesselParams: beta must be > -1/2");
  if (!(p.z >= 0)) throw std::invalid_argument("BesselParams: z must be >= 0");
}

double integrate_bessel_weighted(double power, double nu, double a, double b) {
  if (b <= a) return 0.0;
  auto f = [&](double t) { return std::pow(t, power) * bessel_j(nu, t); };
  // knots at the ~pi oscillation spacing, plus the evaluator's branch seams
  // so no panel straddles a (tiny) branch discontinuity
  double scale = std::pow(std::max(b, 1.0), power - 0.5) + 1.0;
  double total_tol = 1e-11 * scale + 1e-11;
  double sum = 0;
  double t0 = a;
  while (t0 < b) {
    double t1 = std::min(b, (std::floor(t0 / pi) + 1.0) * pi);
    if (t1 <= t0) t1 = std::min(b, t0 + pi);
    for (double seam : {10.0, 35.0})
      if (t0 < seam && seam < t1) t1 = seam;
    double tol = total_tol * (t1 - t0) / (b - a + 1);
    sum += adaptive_gk(f, t0, t1, tol);
    t0 = t1;
  }
  return sum;
}

double weighted_integral(const BesselParams& p) {
  validate_params(p);
  return integrate_bessel_weighted(p.alpha + p.beta, p.beta, 0.0, p.z);
}

double lemma_identity_residual(const BesselParams& p) {
  validate_params(p);
  double lhs = weighted_integral(p);
  double rhs = 0;
  if (p.z > 0)
    rhs = std::pow(p.z, p.alpha + p.beta) * bessel_j(p.beta + 1, p.z) -
          (p.alpha - 1) * integrate_bessel_weighted(p.alpha + p.beta - 1, p.beta + 1, 0.0, p.z);
  return std::fabs(lhs - rhs) / (1.0 + std::fabs(lhs));
}

std::vector<EnvelopeRow> bound_envelope(double alpha, double beta,
                                        const std::vector<double>& z_grid) {
  for (size_t i = 0; i < z_grid.size(); ++i) {
    if (z_grid[i] < 1) throw std::invalid_argument("bound_envelope: grid must have z >= 1");
    if (i && z_grid[i] <= z_grid[i - 1])
      throw std::invalid_argument("bound_envelope: grid must ascend");
  }
  std::vector<EnvelopeRow> rows;
  double acc = 0;
  double prev = 0;
  for (double z : z_grid) {
    acc += integrate_bessel_weighted(alpha + beta, beta, prev, z);
    prev = z;
    EnvelopeRow r;
    r.z = z;
    r.integral = acc;
    r.ratio = acc / std::pow(z, alpha + beta - 0.5);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace liespec
