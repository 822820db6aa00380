#pragma once

#include <string>

#include "causal_beams/numerics.hpp"

namespace cb {

// Smallest |xi| admitted by the angular-spectrum synthesis.
double xi_min(double a, double omega);

struct WeylComponent {
  cplx propagating{};
  cplx evanescent{};
  cplx value{};
  double error = 0.0;  // quadrature estimates plus the evanescent tail bound
  bool converged = true;
  std::string label;   // "large right", "small left", ...
};

struct WeylOptions {
  QuadratureSpec spec{1e-11, 1e-15, 200000};
  double tail = 1e-16;  // e^{-Re(zeta) s_max} cut for the evanescent part
};

// U+ for omega > 0 at an arbitrary zeta with Re zeta > 0:
// (1/4pi) Int_0^inf h dh J0(h rho) e^{-mu zeta} / mu, mu = -i sqrt(w^2 - h^2) below h = w.
WeylComponent u_plus_zeta(double rho, cplx zeta, double omega, const WeylOptions& opt = {});

// U+(z, omega) at z = (rho, xi - i a); requires omega > 0, xi >= xi_min.
WeylComponent u_plus(double rho, double xi, double a, double omega, const WeylOptions& opt = {});

// Four-case table: dispatches on sign(omega) and sign(xi); equals e^{i omega r~}/(4 pi r~).
WeylComponent weyl_eval(double rho, double xi, double a, double omega, const WeylOptions& opt = {});

// i Theta(a - rho) cosh(omega sqrt(a^2 - rho^2)) / (2 pi sqrt(a^2 - rho^2)).
cplx jump_closed(double rho, double a, double omega);

struct JumpSpectral {
  cplx value{};
  std::vector<double> delta;
  std::vector<cplx> samples;
  bool converged = true;
};
// i Int_0^inf h dh/(2pi) J0(h rho) sin(mu a)/mu, Abel-summed with e^{-delta mu}
// on the evanescent band and extrapolated to delta = 0.
JumpSpectral jump_spectral(double rho, double a, double omega, const WeylOptions& opt = {});

}  // namespace cb
