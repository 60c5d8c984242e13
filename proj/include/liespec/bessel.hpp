#pragma once

#include <vector>

#include "liespec/errors.hpp"

namespace liespec {

// alpha >= 2, beta > -1/2, z >= 0 (the Appendix hypotheses).
struct BesselParams {
  double alpha = 2;
  double beta = 0;
  double z = 0;
};
void validate_params(const BesselParams& p);

// J_nu(t). Validated contract: relative accuracy 1e-10 against the
// half-integer closed forms for nu in (-1/2, 60], t <= 1e4 (power series,
// Hankel asymptotics and an integral-representation middle branch).
// Throws std::domain_error outside the supported region.
double bessel_j(double nu, double t);

// \int_a^b t^power J_nu(t) dt, adaptive Gauss-Kronrod with panel knots at
// the ~pi spacing of the Bessel oscillation; abs+rel tolerance 1e-9.
// Throws quadrature_error instead of degrading.
double integrate_bessel_weighted(double power, double nu, double a, double b);

// \int_0^z t^{alpha+beta} J_beta(t) dt
double weighted_integral(const BesselParams& p);

// |LHS - RHS| / (1 + |LHS|) of the identity
// \int_0^z t^{a+b} J_b = z^{a+b} J_{b+1}(z) - (a-1) \int_0^z t^{a+b-1} J_{b+1}
double lemma_identity_residual(const BesselParams& p);

struct EnvelopeRow {
  double z = 0;
  double integral = 0;
  double ratio = 0;  // integral / z^{alpha+beta-1/2}
};

// Cumulative integrals over an ascending grid with the growth-bound ratio.
std::vector<EnvelopeRow> bound_envelope(double alpha, double beta,
                                        const std::vector<double>& z_grid);

}  // namespace liespec
