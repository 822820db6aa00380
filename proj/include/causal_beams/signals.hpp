#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "causal_beams/numerics.hpp"

namespace cb {

struct Impulse {};
struct Static {};
struct Harmonic {
  double omega0 = 0.0;
};

// Real samples of g0 on a strictly increasing time grid, cubic-spline
// interpolated; g0 vanishes outside [times.front(), times.back()].
class SampledSignal {
 public:
  SampledSignal(std::vector<double> times, std::vector<double> values);
  static SampledSignal from_csv(const std::string& path);

  double operator()(double t) const;
  double t_min() const { return times_->front(); }
  double t_max() const { return times_->back(); }
  const std::vector<double>& times() const { return *times_; }
  const std::vector<double>& values() const { return *values_; }

 private:
  struct Spline;
  std::shared_ptr<const std::vector<double>> times_, values_;
  std::shared_ptr<const Spline> spline_;
};

using DrivingSignal = std::variant<Impulse, Static, Harmonic, SampledSignal>;

std::string signal_name(const DrivingSignal& s);

struct AnalyticSignalValue {
  cplx g;
  cplx g_prime;
};

// g(tau) = (1/2 pi i) Int g0(t') dt' / (tau - t'), Im tau = -u != 0.
AnalyticSignalValue ast(const DrivingSignal& s, cplx tau, const QuadratureSpec& spec = {});
cplx ast_second_derivative(const DrivingSignal& s, cplx tau, const QuadratureSpec& spec = {});

// u-bar Theta(omega u) e^{-omega u}, Theta(0) = 1/2.
double cauchy_ft(double omega, double u);

// (g(tau + i q) + g(tau - i q)) / 2.
cplx g_tilde(const DrivingSignal& s, cplx tau, double q, const QuadratureSpec& spec = {});

// Distributional spectrum weight * delta(omega - omega_line).
struct DeltaLine {
  double omega = 0.0;
  cplx weight{};
};
using SpectralValue = std::variant<cplx, DeltaLine>;

// Fourier transform of g0 with e^{+i omega t}.
SpectralValue source_spectrum(const DrivingSignal& s, double omega, const QuadratureSpec& spec = {});
// ghat(omega, u) = ghat0(omega) * cauchy_ft(omega, u).
SpectralValue signal_ft(const DrivingSignal& s, double omega, double u, const QuadratureSpec& spec = {});

// Multiply a spectral value by a factor depending on frequency; delta lines
// take the factor at their own frequency.
template <class F>
SpectralValue spectral_scale(const SpectralValue& v, double omega, const F& factor) {
  if (auto line = std::get_if<DeltaLine>(&v)) return DeltaLine{line->omega, line->weight * factor(line->omega)};
  return std::get<cplx>(v) * factor(omega);
}

}  // namespace cb
