#pragma once

#include <vector>

#include "causal_beams/geometry.hpp"
#include "causal_beams/signals.hpp"

namespace cb {

enum class Causality { retarded, advanced };

// z = (x - i y_spatial, t - i u).
struct SpacetimePoint {
  Vec3 x = Vec3::Zero();
  double t = 0.0;
  SourcePoint y;

  cplx tau() const { return {t, -y.u}; }
  SpacetimePoint negated() const { return {-x, -t, {-y.y, -y.u}}; }
  SpacetimePoint scaled(double s) const { return {x * s, t * s, {y.y * s, y.u * s}}; }
};

class CausalityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Throws CausalityError unless |u| > a.
void require_causal_tube(const SourcePoint& y);

// D~+-(z) = 1 / (8 i pi^2 r~ (tau -+ r~)).
cplx extended_propagator(const SpacetimePoint& z, Causality which);
// Same formula on an explicitly chosen branch of r~.
cplx extended_propagator_branch(cplx tau, cplx rt, Causality which);

// G4(z) = 1 / (4 pi^2 z^2) with z^2 = (x - i y)^2 - tau^2; needs no square root.
cplx g4(const SpacetimePoint& z);

// Cauchy kernel 1 / (2 pi i w); C(tau - r~) is the impulse-driven beam factor.
inline cplx cauchy_factor(cplx w) { return 1.0 / (2.0 * pi * I * w); }

cplx driven_beam(const SpacetimePoint& z, const DrivingSignal& s, const QuadratureSpec& spec = {});

// B_omega = e^{i omega r~} / (4 pi r~).
cplx harmonic_beam(const Vec3& x, const SourcePoint& y, double omega);

struct NuWavelet {
  cplx psi, psi_plus, psi_minus;
};
NuWavelet nu_wavelet(const SpacetimePoint& z, int nu);

// R(theta) = 1 / (2 pi |u - a cos theta|).
double peak_pattern(double theta, const SourcePoint& y);

// Separable spacetime test function A(x) B(t): Gaussian (truncated at 7 sigma)
// or compact (1 - s^2)^4 bump.
struct SpacetimeBump {
  Vec3 center = Vec3::Zero();
  double t0 = 0.0;
  double width_x = 1.0, width_t = 1.0;
  bool compact = false;

  double spatial(const Vec3& x) const;
  double temporal(double t) const;
  double temporal_dt(double t) const;
  double radius_x() const { return compact ? width_x : 7.0 * width_x; }
  double radius_t() const { return compact ? width_t : 7.0 * width_t; }
};

struct ProbeOptions {
  int spatial_nodes = 28;
  QuadratureSpec t_spec{1e-11, 1e-16, 4000};
  bool parallel = true;  // false runs the serial reference
};

struct ProbeResult {
  std::vector<double> eps;
  std::vector<cplx> values;
  cplx extrapolated{};
  bool converged = true;
  int failed_t_integrals = 0;
};

// <D~(. - i eps y) - D~(. + i eps y), F> for each eps, then polynomial
// extrapolation to eps = 0.
ProbeResult minkowski_limit_probe(const SpacetimeBump& f, const SourcePoint& y, const std::vector<double>& eps_list,
                                  Causality which = Causality::retarded, const ProbeOptions& opt = {});

// Int d^3x A(x) B(sign * r) / (4 pi r) by spherical quadrature about the origin.
double shell_integral(const SpacetimeBump& f, int sign, int nodes = 64);

}  // namespace cb
