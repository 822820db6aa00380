#include "causal_beams/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace cb {

CylWave cylindrical(const WaveVector& k, const SourcePoint& y) {
  CylWave c;
  c.omega = k.omega;
  c.kappa = k.k.norm();
  c.l = y.y_hat().dot(k.k);
  c.h = (k.k - c.l * y.y_hat()).norm();
  return c;
}

EpsWaveVector k_eps_map(const CylWave& k, double eps) {
  EpsWaveVector e;
  e.omega_eps = cplx(k.omega, -eps * k.l);
  e.l_eps = cplx(k.l, -eps * k.omega);
  e.h_eps = std::hypot(1.0, eps) * k.h;
  e.eta = cplx(eps, -1.0);
  return e;
}

cplx cos_sqrt(cplx w) {
  if (std::abs(w) < 1e-4) return 1.0 - w / 2.0 * (1.0 - w / 12.0 * (1.0 - w / 30.0 * (1.0 - w / 56.0)));
  return std::cos(std::sqrt(w));
}

cplx sinc_sqrt(cplx w) {
  if (std::abs(w) < 1e-4) return 1.0 - w / 6.0 * (1.0 - w / 20.0 * (1.0 - w / 42.0 * (1.0 - w / 72.0)));
  const cplx z = std::sqrt(w);
  return std::sin(z) / z;
}

cplx omega_filter(cplx mu_sq, cplx l, double a) {
  const cplx w = mu_sq * (a * a);
  return cos_sqrt(w) + l * a * sinc_sqrt(w);
}

CancellationTerms cancellation_terms(const CylWave& k, double a, double eps) {
  const EpsWaveVector e = k_eps_map(k, eps);
  const cplx w = e.mu_sq() * (a * a);
  const cplx wa = e.omega_eps * a;
  const cplx c = cos_sqrt(w), sc = sinc_sqrt(w);
  CancellationTerms t;
  t.I0 = std::cosh(wa) - I * eps * std::sinh(wa);
  t.I1 = std::cosh(wa) - c;
  t.I2 = std::sinh(wa) - wa * sc;
  t.I3 = k.l * a * sc;
  t.total = t.I0 - t.I1 + I * eps * t.I2 + (1.0 + eps * eps) * t.I3;
  return t;
}

SpectralValue shielded_source_ft(const WaveVector& k, const SourcePoint& y, const DrivingSignal& s, double eps,
                                 const QuadratureSpec& spec) {
  if (!(eps >= 0)) throw std::invalid_argument("shielded_source_ft: eps must be >= 0");
  const double a = y.a();
  return spectral_scale(signal_ft(s, k.omega, y.u, spec), k.omega, [&](double w) {
    const CylWave c = cylindrical({k.k, w}, y);
    return std::exp(I * eps * w * a) * omega_filter(k_eps_map(c, eps), a);
  });
}

SpectralValue bare_source_ft(const WaveVector& k, const SourcePoint& y, const DrivingSignal& s,
                             const QuadratureSpec& spec) {
  return spectral_scale(signal_ft(s, k.omega, y.u, spec), k.omega,
                        [&](double w) { return omega_filter(cylindrical({k.k, w}, y), y.a()); });
}

cplx event_source_ft(const WaveVector& k, const SourcePoint& y) {
  return cauchy_ft(k.omega, y.u) * omega_filter(cylindrical(k, y), y.a());
}

cplx static_source_ft(const Vec3& k3, const SourcePoint& y) {
  return omega_filter(cylindrical({k3, 0.0}, y), y.a());
}

cplx mu_branch(double h, double omega) {
  if (h >= std::abs(omega)) return std::sqrt((h - omega) * (h + omega));
  const double s = omega > 0 ? 1.0 : -1.0;
  return cplx(0.0, -s * std::sqrt((std::abs(omega) - h) * (std::abs(omega) + h)));
}

SpectralValue pulsed_beam_ft(const WaveVector& k, const SourcePoint& y, const DrivingSignal& s,
                             const QuadratureSpec& spec) {
  const double a = y.a();
  return spectral_scale(signal_ft(s, k.omega, y.u, spec), k.omega, [&](double w) {
    const CylWave c = cylindrical({k.k, w}, y);
    const cplx mu = mu_branch(c.h, w);
    const cplx dp = mu + I * c.l, dm = mu - I * c.l;
    const double scale = 1e-13 * (c.kappa + std::abs(w));
    if (std::abs(dp) <= scale || std::abs(dm) <= scale)
      throw std::domain_error("pulsed_beam_ft: k on the light cone (pole of 1/k^2)");
    // mu -> 0 off the cone is a removable singularity of the split form.
    if (std::abs(mu) <= 1e-6 * (c.kappa + std::abs(w))) return omega_filter(c, a) / c.k_sq();
    return (std::exp(I * mu * a) / dp + std::exp(-I * mu * a) / dm) / (2.0 * mu);
  });
}

}  // namespace cb
