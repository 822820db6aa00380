#include "causal_beams/figures.hpp"

#include <cmath>
#include <stdexcept>

namespace cb {

double time_peak_amplitude(const Vec3& x, const SourcePoint& y) {
  const ComplexDistance cd = complex_distance(x, y);
  const cplx rt = cd.rt();
  auto amp = [&](double t) { return std::abs(extended_propagator_branch(cplx(t, -y.u), rt, Causality::retarded)); };
  double lo = cd.r - cd.a - 1.0, hi = cd.r + cd.a + 1.0;
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = hi - g * (hi - lo), d = lo + g * (hi - lo);
  double fc = amp(c), fd = amp(d);
  for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, std::abs(hi)); ++it) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - g * (hi - lo);
      fc = amp(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + g * (hi - lo);
      fd = amp(d);
    }
  }
  return std::max(fc, fd);
}

double angular_fwhm(const SourcePoint& y, double r0, int n_theta) {
  require_causal_tube(y);
  if (n_theta < 3) throw std::invalid_argument("angular_fwhm: need at least 3 angles");
  const AxisFrame fr = axis_frame(y);
  const Vec3 axis = y.u > 0 ? fr.e3 : Vec3(-fr.e3);
  std::vector<double> th(n_theta), amp(n_theta);
  for (int i = 0; i < n_theta; ++i) {
    th[i] = pi * i / (n_theta - 1);
    const Vec3 x = r0 * (std::cos(th[i]) * axis + std::sin(th[i]) * fr.e1);
    amp[i] = time_peak_amplitude(x, y);
  }
  const double half = 0.5 * amp[0];
  for (int i = 1; i < n_theta; ++i) {
    if (amp[i] <= half) {
      const double s = (amp[i - 1] - half) / (amp[i - 1] - amp[i]);
      return 2.0 * (th[i - 1] + s * (th[i] - th[i - 1]));
    }
  }
  return 2.0 * pi;
}

double angular_fwhm_closed(const SourcePoint& y) {
  const double a = y.a(), u = std::abs(y.u);
  if (a == 0.0) return 2.0 * pi;
  // u - a cos(theta) = 2 (u - a)
  const double c = (2.0 * a - u) / a;
  if (c < -1.0) return 2.0 * pi;
  return 2.0 * std::acos(c);
}

RidgeReport ridge_check(const SliceGrid& g, const std::vector<cplx>& frame, const SourcePoint& y, double t) {
  if (frame.size() != static_cast<size_t>(g.n1) * g.n3) throw std::invalid_argument("ridge_check: frame size mismatch");
  const double step = std::max(g.dx1(), g.dx3());
  RidgeReport rep;
  rep.t = t;
  for (int i = 0; i < g.n1; ++i) {
    int best = -1;
    double bv = -1;
    for (int j = 0; j < g.n3; ++j) {
      if (g.node(i, j).z() <= 0) continue;
      const double v = std::norm(frame[j * g.n1 + i]);
      if (v > bv) {
        bv = v;
        best = j;
      }
    }
    if (best < 0) continue;
    const Vec3 x = g.node(i, best);
    const ComplexDistance cd = complex_distance(x, y);
    if (std::abs(y.u) - (y.u > 0 ? cd.q : -cd.q) > 5.0 * step) continue;
    const OsFrame os = os_frame(x, y);
    const double off = std::abs(cd.p - t) / os.grad_p.norm() / step;
    rep.max_offset = std::max(rep.max_offset, off);
    ++rep.columns;
  }
  rep.passed = rep.columns > 0 && rep.max_offset <= 1.0;
  return rep;
}

SliceGrid fig2_grid(int n) {
  // Extent 25 makes 1 / h an integer at n = 400, so rho = a sits midway between nodes.
  const double h = 25.0 / n;
  return {-12.5 + 0.5 * h, 12.5 - 0.5 * h, -4.5 + 0.5 * h, 20.5 - 0.5 * h, n, n};
}

SliceGrid fig3_grid(int n) {
  const double h = 8.0 / n;
  return {-4.0 + 0.5 * h, 4.0 - 0.5 * h, -4.0 + 0.5 * h, 4.0 - 0.5 * h, n, n};
}

std::vector<double> fig2_u_values() { return {1.5, 1.1, 1.01, 1.001}; }
std::vector<double> fig3_times() { return {0.1, 1.0, 2.0, 3.0}; }

}  // namespace cb
