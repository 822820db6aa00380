#include "causal_beams/weyl.hpp"

#include <cmath>
#include <stdexcept>

namespace cb {

double xi_min(double a, double omega) {
  if (omega == 0.0) throw std::invalid_argument("xi_min: omega must be nonzero");
  return 1e-3 * std::max(a, 1.0 / std::abs(omega));
}

namespace {

// Breakpoints on [0, s_max] spaced about half an oscillation period.
std::vector<double> oscillation_grid(double s_max, double freq) {
  const double step = pi / std::max(freq, 1e-3);
  const int n = std::max(1, static_cast<int>(std::ceil(s_max / step)));
  std::vector<double> pts(n + 1);
  for (int i = 0; i <= n; ++i) pts[i] = s_max * i / n;
  return pts;
}

}  // namespace

WeylComponent u_plus_zeta(double rho, cplx zeta, double omega, const WeylOptions& opt) {
  if (!(omega > 0)) throw std::invalid_argument("u_plus: omega must be > 0");
  if (!(rho >= 0)) throw std::invalid_argument("u_plus: rho must be >= 0");
  const double xi = zeta.real();
  if (!(xi > 0)) throw std::domain_error("u_plus: Re zeta must be > 0");
  WeylComponent c;

  // h = omega sin(alpha) removes the 1/sqrt(omega^2 - h^2) endpoint singularity.
  auto prop = [&](double al) {
    return std::sin(al) * bessel_j0(omega * rho * std::sin(al)) * std::exp(I * zeta * (omega * std::cos(al)));
  };
  const double fp = omega * (rho + std::abs(zeta));
  const QuadResult rp = adaptive_quad(prop, oscillation_grid(pi / 2, fp * 2.0 / pi), opt.spec);
  c.propagating = I * omega / (4 * pi) * rp.value;

  // h dh / sqrt(h^2 - omega^2) = ds.
  const double s_max = -std::log(opt.tail) / xi;
  auto evan = [&](double s) { return bessel_j0(rho * std::hypot(s, omega)) * std::exp(-zeta * s); };
  const QuadResult re = adaptive_quad(evan, oscillation_grid(s_max, rho + std::abs(zeta.imag())), opt.spec);
  c.evanescent = re.value / (4 * pi);

  c.value = c.propagating + c.evanescent;
  c.error = omega / (4 * pi) * rp.error + re.error / (4 * pi) + std::exp(-xi * s_max) / (4 * pi * xi);
  c.converged = rp.converged && re.converged;
  return c;
}

WeylComponent u_plus(double rho, double xi, double a, double omega, const WeylOptions& opt) {
  if (!(omega > 0)) throw std::invalid_argument("u_plus: omega must be > 0");
  if (xi < xi_min(a, omega)) throw std::domain_error("u_plus: xi below xi_min (conditionally convergent regime)");
  WeylComponent c = u_plus_zeta(rho, cplx(xi, -a), omega, opt);
  c.label = "large right";
  return c;
}

WeylComponent weyl_eval(double rho, double xi, double a, double omega, const WeylOptions& opt) {
  if (omega == 0.0) throw std::invalid_argument("weyl_eval: omega must be nonzero");
  if (std::abs(xi) < xi_min(a, omega)) throw std::domain_error("weyl_eval: |xi| below xi_min");
  const double w = std::abs(omega), x = std::abs(xi);
  WeylComponent c;
  if (omega > 0 && xi > 0) {
    c = u_plus_zeta(rho, cplx(x, -a), w, opt);  // U+(z)
    c.label = "large right";
  } else if (omega > 0) {
    c = u_plus_zeta(rho, cplx(x, a), w, opt);  // U+(-z)
    c.label = "small left";
  } else {
    c = u_plus_zeta(rho, cplx(x, xi > 0 ? a : -a), w, opt);  // U+(z*)* or U+(-z*)*
    c.propagating = std::conj(c.propagating);
    c.evanescent = std::conj(c.evanescent);
    c.value = std::conj(c.value);
    c.label = xi > 0 ? "small right" : "large left";
  }
  return c;
}

cplx jump_closed(double rho, double a, double omega) {
  if (rho == a) throw std::domain_error("jump_closed: rho = a is the branch circle");
  if (rho > a) return 0.0;
  const double s = std::sqrt((a - rho) * (a + rho));
  return I * std::cosh(omega * s) / (2 * pi * s);
}

JumpSpectral jump_spectral(double rho, double a, double omega, const WeylOptions& opt) {
  if (rho == a) throw std::domain_error("jump_spectral: rho = a is the branch circle");
  if (!(a > 0) || omega == 0.0) throw std::invalid_argument("jump_spectral: need a > 0, omega != 0");
  const double w = std::abs(omega);
  JumpSpectral out;

  // Propagating band h < |omega|: sin(mu a)/mu = sinh(nu a)/nu, nu = sqrt(omega^2 - h^2).
  auto prop = [&](double al) {
    return std::sin(al) * bessel_j0(w * rho * std::sin(al)) * std::sinh(a * w * std::cos(al));
  };
  const QuadResult rp = adaptive_quad(prop, 0.0, pi / 2, opt.spec);
  const cplx jp = I * w / (2 * pi) * rp.value;
  out.converged = rp.converged;

  // Evanescent band: (i/2pi) Int ds J0(rho sqrt(s^2+w^2)) sin(a s) e^{-delta s}, analytic in
  // delta for |delta| < |a - rho|. All deltas share one composite Gauss-Kronrod pass.
  const double R = std::abs(a - rho);
  const int nd = 6;
  for (int j = 0; j < nd; ++j) out.delta.push_back(0.25 * R / std::pow(2.0, j));
  const double s_max = -std::log(opt.tail) / out.delta.back();
  double seg = 0.5 * pi / (a + rho + 1.0);
  std::vector<double> K, G;
  for (int pass = 0; pass < 4; ++pass) {
    const long n = static_cast<long>(std::ceil(s_max / seg));
    const double L = s_max / n, hl = 0.5 * L;
    K.assign(nd, 0.0);
    G.assign(nd, 0.0);
    std::vector<double> ek(nd);
    for (long i = 0; i < n; ++i) {
      const double c = (i + 0.5) * L;
      for (int m = 0; m < 15; ++m) {
        const int j = m < 8 ? m : 14 - m;
        const double x = m < 7 ? c - hl * detail::xgk[j] : (m == 7 ? c : c + hl * detail::xgk[j]);
        const double base = bessel_j0(rho * std::hypot(x, w)) * std::sin(a * x);
        const double wk = detail::wgk[j] * hl;
        const double wgg = (j % 2 == 1) ? detail::wg[j / 2] * hl : 0.0;
        for (int d = 0; d < nd; ++d) {
          const double v = base * std::exp(-out.delta[d] * x);
          K[d] += wk * v;
          G[d] += wgg * v;
        }
      }
    }
    double err = 0;
    for (int d = 0; d < nd; ++d) err = std::max(err, std::abs(K[d] - G[d]));
    if (err <= 1e-9 * std::max(1e-3, std::abs(K[0]))) break;
    seg *= 0.5;
    if (pass == 3) out.converged = false;
  }
  for (int d = 0; d < nd; ++d) out.samples.push_back(jp + I / (2 * pi) * K[d]);
  out.value = extrapolate_to_zero(out.delta, out.samples);
  return out;
}

}  // namespace cb
