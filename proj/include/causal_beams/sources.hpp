#pragma once

#include <functional>
#include <limits>
#include <string>

#include "causal_beams/geometry.hpp"
#include "causal_beams/signals.hpp"

namespace cb {

// Smooth spatial test function with closed-form first partials and Laplacian.
struct TestFunction {
  std::string name;
  std::function<cplx(const Vec3&)> value;
  std::function<CVec3(const Vec3&)> grad;
  std::function<cplx(const Vec3&)> laplacian;
  Vec3 center = Vec3::Zero();
  // Beyond |x - center| > support_radius the function is negligible (or zero).
  double support_radius = std::numeric_limits<double>::infinity();
  bool differentiable_on_disk = true;
};

namespace catalog {
TestFunction constant_one();
// amp * exp(-|x - c|^2 / (2 sigma^2)).
TestFunction gaussian_bump(const Vec3& c, double sigma, cplx amp = 1.0);
// (c0 + b.d + d.M d) * exp(-|d|^2 / (2 sigma^2)), d = x - c, M symmetric.
TestFunction poly_bump(const Vec3& c, double sigma, double c0, const Vec3& b, const Eigen::Matrix3d& M);
// e^{-i k.x}.
TestFunction plane_wave(const Vec3& k);
// (1 - |d|^2/R^2)^4 on |d| < R, zero outside.
TestFunction compact_bump(const Vec3& c, double R);
}  // namespace catalog

// Azimuthal means about y_hat on the circle (rho, xi).
struct CylMean {
  cplx f, f_rho, f_xi;
  cplx f_rho_over_rho;  // f_rho / rho, finite as rho -> 0
  cplx lap;
};
CylMean cylindrical_mean(const TestFunction& f, double rho, double xi, const SourcePoint& y, bool with_laplacian = false);

struct AzimuthalMean {
  cplx f, f_p, f_q;
};
AzimuthalMean azimuthal_mean(const TestFunction& f, double p, double q, const SourcePoint& y);

struct SmearResult {
  cplx value{};
  double quadrature_error = 0.0;
  bool converged = true;
  // Shielded source: the two pole terms and the surface integral; value is their sum.
  cplx pole_terms{};
  cplx surface_term{};
};

SmearResult shielded_source_apply(const TestFunction& f, const SourcePoint& y, const DrivingSignal& s, double t,
                                  double eps, const QuadratureSpec& spec = {});

// Disk form g~(tau,a) f(0) + Int_0^a dq g~(tau,q) [i f_xi + a f_rho / rho] on the disk.
SmearResult bare_source_apply(const TestFunction& f, const SourcePoint& y, const DrivingSignal& s, double t,
                              const QuadratureSpec& spec = {});
// Same with an arbitrary modulation g~(q).
SmearResult bare_source_apply_with(const TestFunction& f, const SourcePoint& y, const std::function<cplx(double)>& gt,
                                   const QuadratureSpec& spec = {});

// g~ = tau / (2 pi i (tau^2 + q^2)).
SmearResult event_source_apply(const TestFunction& f, const SourcePoint& y, double t, const QuadratureSpec& spec = {});
// Unit-strength static source: g~ = 1.
SmearResult static_source_apply(const TestFunction& f, const SourcePoint& y, const QuadratureSpec& spec = {});
// g~ = u-bar Theta(omega u) e^{-i omega tau} cosh(omega q).
SmearResult harmonic_source_apply(const TestFunction& f, const SourcePoint& y, double t, double omega,
                                  const QuadratureSpec& spec = {});

// Exterior-volume oracle for <S_eps, f>: -Int W Laplacian(f) + Int W_tt f over p > eps a,
// in oblate spheroidal coordinates.
SmearResult volume_oracle(const TestFunction& f, const SourcePoint& y, const DrivingSignal& s, double t, double eps,
                          const QuadratureSpec& spec = {1e-9, 1e-15, 4000});

// Shielded values on an eps schedule extrapolated to eps = 0.
struct EpsLimit {
  std::vector<double> eps;
  std::vector<cplx> values;
  cplx extrapolated{};
};
EpsLimit shielded_eps_limit(const TestFunction& f, const SourcePoint& y, const DrivingSignal& s, double t,
                            const std::vector<double>& eps, const QuadratureSpec& spec = {});

// One dimension: <delta~_1(. - i y), f> = f(0) + i y f'(0).
cplx delta1_apply(cplx f0, cplx f0_prime, double y);
// Same pairing from its definition -Int G1(x - i y) f''(x) dx, G1(x - i y) = -(|x| - i sgn(x) y)/2.
QuadResult delta1_apply_quadrature(const std::function<cplx(double)>& f_second, double support, double y,
                                   const QuadratureSpec& spec = {});

}  // namespace cb
