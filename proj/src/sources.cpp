#include "causal_beams/sources.hpp"

#include <array>
#include <cmath>

namespace cb {

namespace catalog {

TestFunction constant_one() {
  TestFunction f;
  f.name = "one";
  f.value = [](const Vec3&) { return cplx(1.0); };
  f.grad = [](const Vec3&) { return CVec3::Zero().eval(); };
  f.laplacian = [](const Vec3&) { return cplx(0.0); };
  return f;
}

TestFunction gaussian_bump(const Vec3& c, double sigma, cplx amp) {
  if (!(sigma > 0)) throw std::invalid_argument("gaussian_bump: sigma must be > 0");
  TestFunction f;
  f.name = "gaussian";
  f.center = c;
  f.support_radius = 8.0 * sigma;
  const double s2 = sigma * sigma;
  f.value = [=](const Vec3& x) { return amp * std::exp(-0.5 * (x - c).squaredNorm() / s2); };
  f.grad = [=](const Vec3& x) {
    const Vec3 d = x - c;
    const cplx g = amp * std::exp(-0.5 * d.squaredNorm() / s2);
    return CVec3((-g / s2) * d.cast<cplx>());
  };
  f.laplacian = [=](const Vec3& x) {
    const double d2 = (x - c).squaredNorm();
    return amp * std::exp(-0.5 * d2 / s2) * (d2 / (s2 * s2) - 3.0 / s2);
  };
  return f;
}

TestFunction poly_bump(const Vec3& c, double sigma, double c0, const Vec3& b, const Eigen::Matrix3d& M0) {
  if (!(sigma > 0)) throw std::invalid_argument("poly_bump: sigma must be > 0");
  const Eigen::Matrix3d M = 0.5 * (M0 + M0.transpose());
  TestFunction f;
  f.name = "poly_bump";
  f.center = c;
  f.support_radius = 9.0 * sigma;
  const double s2 = sigma * sigma;
  f.value = [=](const Vec3& x) {
    const Vec3 d = x - c;
    return cplx((c0 + b.dot(d) + d.dot(M * d)) * std::exp(-0.5 * d.squaredNorm() / s2));
  };
  f.grad = [=](const Vec3& x) {
    const Vec3 d = x - c;
    const double G = std::exp(-0.5 * d.squaredNorm() / s2);
    const double P = c0 + b.dot(d) + d.dot(M * d);
    const Vec3 g = G * (b + 2.0 * M * d) - (P * G / s2) * d;
    return CVec3(g.cast<cplx>());
  };
  f.laplacian = [=](const Vec3& x) {
    const Vec3 d = x - c;
    const double d2 = d.squaredNorm();
    const double G = std::exp(-0.5 * d2 / s2);
    const double P = c0 + b.dot(d) + d.dot(M * d);
    const Vec3 gP = b + 2.0 * M * d;
    return cplx(G * 2.0 * M.trace() - 2.0 * G * gP.dot(d) / s2 + P * G * (d2 / (s2 * s2) - 3.0 / s2));
  };
  return f;
}

TestFunction plane_wave(const Vec3& k) {
  TestFunction f;
  f.name = "plane_wave";
  f.value = [=](const Vec3& x) { return std::exp(-I * k.dot(x)); };
  f.grad = [=](const Vec3& x) { return CVec3((-I * std::exp(-I * k.dot(x))) * k.cast<cplx>()); };
  f.laplacian = [=](const Vec3& x) { return -k.squaredNorm() * std::exp(-I * k.dot(x)); };
  return f;
}

TestFunction compact_bump(const Vec3& c, double R) {
  if (!(R > 0)) throw std::invalid_argument("compact_bump: radius must be > 0");
  TestFunction f;
  f.name = "compact_bump";
  f.center = c;
  f.support_radius = R;
  const double R2 = R * R;
  f.value = [=](const Vec3& x) {
    const double s2 = (x - c).squaredNorm() / R2;
    return cplx(s2 < 1 ? std::pow(1 - s2, 4) : 0.0);
  };
  f.grad = [=](const Vec3& x) {
    const Vec3 d = x - c;
    const double s2 = d.squaredNorm() / R2;
    if (s2 >= 1) return CVec3::Zero().eval();
    return CVec3((-8.0 * std::pow(1 - s2, 3) / R2 * d).cast<cplx>());
  };
  f.laplacian = [=](const Vec3& x) {
    const double s2 = (x - c).squaredNorm() / R2;
    if (s2 >= 1) return cplx(0.0);
    return cplx(-24.0 / R2 * (1 - s2) * (1 - s2) * (1 - 3 * s2));
  };
  return f;
}

}  // namespace catalog

namespace {

// Trapezoid means over phi of {f, e_rho.grad f, e3.grad f, lap f}, doubling the
// node count until two successive doublings agree relative to the sampled size.
std::array<cplx, 4> circle_mean(const TestFunction& f, double rho, double xi, const AxisFrame& fr, bool grad,
                                bool lap) {
  auto sample = [&](double ph, std::array<cplx, 4>& acc, std::array<double, 4>& mag) {
    const Vec3 er = std::cos(ph) * fr.e1 + std::sin(ph) * fr.e2;
    const Vec3 x = xi * fr.e3 + rho * er;
    std::array<cplx, 4> v{f.value(x), 0.0, 0.0, 0.0};
    if (grad) {
      const CVec3 g = f.grad(x);
      v[1] = g(0) * er(0) + g(1) * er(1) + g(2) * er(2);
      v[2] = g(0) * fr.e3(0) + g(1) * fr.e3(1) + g(2) * fr.e3(2);
    }
    if (lap) v[3] = f.laplacian(x);
    for (int k = 0; k < 4; ++k) {
      acc[k] += v[k];
      mag[k] = std::max(mag[k], std::abs(v[k]));
    }
  };
  int n = 16;
  std::array<cplx, 4> sum{};
  std::array<double, 4> mag{};
  for (int j = 0; j < n; ++j) sample(2 * pi * j / n, sum, mag);
  std::array<cplx, 4> mean;
  for (int k = 0; k < 4; ++k) mean[k] = sum[k] / double(n);
  int agreed = 0;
  while (n < (1 << 16) && agreed < 2) {
    for (int j = 0; j < n; ++j) sample(2 * pi * (j + 0.5) / n, sum, mag);
    n *= 2;
    bool ok = true;
    for (int k = 0; k < 4; ++k) {
      const cplx next = sum[k] / double(n);
      if (std::abs(next - mean[k]) > 1e-15 * mag[k] + 1e-300) ok = false;
      mean[k] = next;
    }
    agreed = ok ? agreed + 1 : 0;
  }
  return mean;
}

double rho_floor(double a) { return 1e-6 * std::max(a, 1.0); }

void require_disk_source(const SourcePoint& y) {
  if (!y.timelike()) throw std::domain_error("source apply: y must be timelike (|u| > a)");
}

}  // namespace

CylMean cylindrical_mean(const TestFunction& f, double rho, double xi, const SourcePoint& y, bool with_laplacian) {
  if (rho < 0) throw std::invalid_argument("cylindrical_mean: rho must be >= 0");
  const AxisFrame fr = axis_frame(y);
  const auto m = circle_mean(f, rho, xi, fr, true, with_laplacian);
  CylMean c{m[0], m[1], m[2], 0.0, m[3]};
  if (rho >= rho_floor(y.a())) {
    c.f_rho_over_rho = m[1] / rho;
  } else {
    const double r0 = rho_floor(y.a());
    c.f_rho_over_rho = circle_mean(f, r0, xi, fr, true, false)[1] / r0;
  }
  return c;
}

AzimuthalMean azimuthal_mean(const TestFunction& f, double p, double q, const SourcePoint& y) {
  const double a = y.a();
  if (a == 0.0) throw std::invalid_argument("azimuthal_mean: oblate spheroidal coordinates need a > 0");
  if (p < 0 || std::abs(q) > a) throw std::invalid_argument("azimuthal_mean: invalid (p, q)");
  const double xi = p * q / a;
  const double s = p * p + a * a;
  const double rho = std::sqrt(s * (a - q) * (a + q)) / a;
  const CylMean c = cylindrical_mean(f, rho, xi, y);
  AzimuthalMean m;
  m.f = c.f;
  m.f_p = (p * rho / s) * c.f_rho + (q / a) * c.f_xi;
  m.f_q = -(s * q / (a * a)) * c.f_rho_over_rho + (p / a) * c.f_xi;
  return m;
}

SmearResult shielded_source_apply(const TestFunction& f, const SourcePoint& y, const DrivingSignal& s, double t,
                                  double eps, const QuadratureSpec& spec) {
  require_disk_source(y);
  const double a = y.a();
  if (a == 0.0) throw std::invalid_argument("shielded_source_apply: needs a > 0");
  if (!(eps > 0)) throw std::invalid_argument("shielded_source_apply: eps must be > 0");
  const cplx tau(t, -y.u);
  const double p = eps * a;
  const double aa = a * a * (1 + eps * eps);  // alpha* alpha
  const cplx alpha(p, -a), alpha_s(p, a);
  const Vec3 e3 = y.y_hat();

  SmearResult res;
  const cplx north = ast(s, tau - alpha, spec).g * f.value(p * e3) / (I * alpha);
  const cplx south = ast(s, tau - alpha_s, spec).g * f.value(-p * e3) / (I * alpha_s);
  res.pole_terms = aa / (2 * a) * (north - south);

  auto integrand = [&](double q) {
    const cplx rt(p, -q);
    const AzimuthalMean m = azimuthal_mean(f, p, q, y);
    return ast(s, tau - rt, spec).g * 0.5 * (m.f_p + I * m.f_q) / rt;
  };
  const QuadResult r = adaptive_quad(integrand, -a, a, spec);
  res.surface_term = aa / a * r.value;
  res.quadrature_error = aa / a * r.error;
  res.converged = r.converged;
  res.value = res.pole_terms + res.surface_term;
  return res;
}

SmearResult bare_source_apply_with(const TestFunction& f, const SourcePoint& y, const std::function<cplx(double)>& gt,
                                   const QuadratureSpec& spec) {
  if (!f.differentiable_on_disk) throw std::invalid_argument("bare_source_apply: f must be differentiable on the disk");
  const double a = y.a();
  SmearResult res;
  res.pole_terms = gt(a) * f.value(Vec3::Zero());
  if (a > 0) {
    auto integrand = [&](double q) {
      const double rho = std::sqrt((a - q) * (a + q));
      const CylMean c = cylindrical_mean(f, rho, 0.0, y);
      return gt(q) * (I * c.f_xi + a * c.f_rho_over_rho);
    };
    const QuadResult r = adaptive_quad(integrand, 0.0, a, spec);
    res.surface_term = r.value;
    res.quadrature_error = r.error;
    res.converged = r.converged;
  }
  res.value = res.pole_terms + res.surface_term;
  return res;
}

SmearResult bare_source_apply(const TestFunction& f, const SourcePoint& y, const DrivingSignal& s, double t,
                              const QuadratureSpec& spec) {
  require_disk_source(y);
  const cplx tau(t, -y.u);
  return bare_source_apply_with(f, y, [&](double q) { return g_tilde(s, tau, q, spec); }, spec);
}

SmearResult event_source_apply(const TestFunction& f, const SourcePoint& y, double t, const QuadratureSpec& spec) {
  require_disk_source(y);
  const cplx tau(t, -y.u);
  return bare_source_apply_with(
      f, y, [&](double q) { return tau / (2 * pi * I * (tau * tau + q * q)); }, spec);
}

SmearResult static_source_apply(const TestFunction& f, const SourcePoint& y, const QuadratureSpec& spec) {
  return bare_source_apply_with(f, y, [](double) { return cplx(1.0); }, spec);
}

SmearResult harmonic_source_apply(const TestFunction& f, const SourcePoint& y, double t, double omega,
                                  const QuadratureSpec& spec) {
  require_disk_source(y);
  const double u = y.u;
  const double theta = omega * u > 0 ? 1.0 : (omega * u < 0 ? 0.0 : 0.5);
  if (theta == 0.0) return {};
  const cplx tau(t, -u);
  const cplx pref = (u > 0 ? 1.0 : -1.0) * theta * std::exp(-I * omega * tau);
  return bare_source_apply_with(f, y, [&](double q) { return pref * std::cosh(omega * q); }, spec);
}

SmearResult volume_oracle(const TestFunction& f, const SourcePoint& y, const DrivingSignal& s, double t, double eps,
                          const QuadratureSpec& spec) {
  require_disk_source(y);
  const double a = y.a();
  if (a == 0.0) throw std::invalid_argument("volume_oracle: needs a > 0");
  if (!std::isfinite(f.support_radius)) throw std::invalid_argument("volume_oracle: test function must be localized");
  const cplx tau(t, -y.u);
  const double p0 = eps * a;
  const double p1 = f.center.norm() + f.support_radius;
  if (p1 <= p0) return {};
  const AxisFrame fr = axis_frame(y);

  QuadratureSpec inner = spec;
  inner.rel_tol = spec.rel_tol * 0.1;
  bool ok = true;
  // d^3x = a^-1 |r~|^2 dp dq dphi; the phi integral gives 2 pi times the mean.
  auto slab = [&](double p) {
    auto over_q = [&](double q) {
      const double xi = p * q / a;
      const double rho = std::sqrt((p * p + a * a) * (a - q) * (a + q)) / a;
      const auto m = circle_mean(f, rho, xi, fr, false, true);
      const cplx rt(p, -q);
      const cplx arg = tau - rt;
      const cplx g = ast(s, arg, spec).g;
      const cplx g2 = ast_second_derivative(s, arg, spec);
      return (p * p + q * q) / (2.0 * a * rt) * (-g * m[3] + g2 * m[0]);
    };
    const QuadResult r = adaptive_quad(over_q, -a, a, inner);
    if (!r.converged) ok = false;
    return r.value;
  };
  std::vector<double> pts;
  const int pieces = std::max(2, static_cast<int>(std::ceil((p1 - p0) / (0.5 * a))));
  for (int i = 0; i <= pieces; ++i) pts.push_back(p0 + (p1 - p0) * i / pieces);
  const QuadResult r = adaptive_quad(slab, pts, spec);
  SmearResult res;
  res.value = r.value;
  res.quadrature_error = r.error;
  res.converged = r.converged && ok;
  return res;
}

EpsLimit shielded_eps_limit(const TestFunction& f, const SourcePoint& y, const DrivingSignal& s, double t,
                            const std::vector<double>& eps, const QuadratureSpec& spec) {
  EpsLimit out;
  out.eps = eps;
  for (double e : eps) out.values.push_back(shielded_source_apply(f, y, s, t, e, spec).value);
  out.extrapolated = extrapolate_to_zero(out.eps, out.values);
  return out;
}

cplx delta1_apply(cplx f0, cplx f0_prime, double y) { return f0 + I * y * f0_prime; }

QuadResult delta1_apply_quadrature(const std::function<cplx(double)>& f_second, double support, double y,
                                   const QuadratureSpec& spec) {
  auto integrand = [&](double x) {
    const double sg = x > 0 ? 1.0 : -1.0;
    return 0.5 * (std::abs(x) - I * sg * y) * f_second(x);
  };
  return adaptive_quad(integrand, {-support, 0.0, support}, spec);
}

}  // namespace cb
