#pragma once

#include "causal_beams/geometry.hpp"
#include "causal_beams/signals.hpp"

namespace cb {

struct WaveVector {
  Vec3 k = Vec3::Zero();
  double omega = 0.0;
};

// Components relative to y_hat: l = y_hat.k, h = sqrt(kappa^2 - l^2).
struct CylWave {
  double h = 0, l = 0, omega = 0, kappa = 0;
  cplx mu_sq() const { return h * h - omega * omega; }
  double k_sq() const { return kappa * kappa - omega * omega; }
};
CylWave cylindrical(const WaveVector& k, const SourcePoint& y);

struct EpsWaveVector {
  cplx omega_eps, l_eps;
  double h_eps = 0;
  cplx eta;  // eps - i

  cplx mu_sq() const { return h_eps * h_eps - omega_eps * omega_eps; }
  cplx k_sq() const { return mu_sq() + l_eps * l_eps; }
};
EpsWaveVector k_eps_map(const CylWave& k, double eps);

// cos(mu a) + l a sinc(mu a), a function of mu^2 only.
cplx omega_filter(cplx mu_sq, cplx l, double a);
inline cplx omega_filter(const CylWave& k, double a) { return omega_filter(k.mu_sq(), k.l, a); }
inline cplx omega_filter(const EpsWaveVector& k, double a) { return omega_filter(k.mu_sq(), k.l_eps, a); }

// cos(z)/sinc(z) with z^2 = w, series near w = 0.
cplx cos_sqrt(cplx w);
cplx sinc_sqrt(cplx w);

// The four pieces of the shielded-source filter before cancellation.
struct CancellationTerms {
  cplx I0, I1, I2, I3;
  cplx total;  // I0 - I1 + i eps I2 + |eta|^2 I3
};
CancellationTerms cancellation_terms(const CylWave& k, double a, double eps);

SpectralValue shielded_source_ft(const WaveVector& k, const SourcePoint& y, const DrivingSignal& s, double eps,
                                 const QuadratureSpec& spec = {});
SpectralValue bare_source_ft(const WaveVector& k, const SourcePoint& y, const DrivingSignal& s,
                             const QuadratureSpec& spec = {});
// C^(omega, u) Omega(k, y).
cplx event_source_ft(const WaveVector& k, const SourcePoint& y);
// cos(ha) + (l/h) sin(ha).
cplx static_source_ft(const Vec3& k3, const SourcePoint& y);

// Branch of mu used by the partial-fraction form: real >= 0 for h >= |omega|,
// -i sgn(omega) sqrt(omega^2 - h^2) below.
cplx mu_branch(double h, double omega);

// g^ Omega / k^2 through the partial fractions
// (g^ / 2 mu) [e^{i mu a}/(mu + i l) + e^{-i mu a}/(mu - i l)].
SpectralValue pulsed_beam_ft(const WaveVector& k, const SourcePoint& y, const DrivingSignal& s,
                             const QuadratureSpec& spec = {});

}  // namespace cb
