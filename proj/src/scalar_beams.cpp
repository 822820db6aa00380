#include "causal_beams/scalar_beams.hpp"

#include <cmath>

#include "causal_beams/grid.hpp"

namespace cb {

void require_causal_tube(const SourcePoint& y) {
  if (!y.timelike())
    throw CausalityError("source point is not timelike (|u| <= a); only the causal tube is supported");
}

cplx extended_propagator_branch(cplx tau, cplx rt, Causality which) {
  const double s = which == Causality::retarded ? 1.0 : -1.0;
  return 1.0 / (8.0 * I * pi * pi * rt * (tau - s * rt));
}

cplx extended_propagator(const SpacetimePoint& z, Causality which) {
  require_causal_tube(z.y);
  return extended_propagator_branch(z.tau(), complex_distance(z.x, z.y).rt(), which);
}

cplx g4(const SpacetimePoint& z) {
  const CVec3 zv = z.x.cast<cplx>() - I * z.y.y.cast<cplx>();
  const cplx tau = z.tau();
  return 1.0 / (4.0 * pi * pi * ((zv.array() * zv.array()).sum() - tau * tau));
}

cplx driven_beam(const SpacetimePoint& z, const DrivingSignal& s, const QuadratureSpec& spec) {
  require_causal_tube(z.y);
  const cplx rt = complex_distance(z.x, z.y).rt();
  return ast(s, z.tau() - rt, spec).g / (4.0 * pi * rt);
}

cplx harmonic_beam(const Vec3& x, const SourcePoint& y, double omega) {
  const cplx rt = complex_distance(x, y).rt();
  return std::exp(I * omega * rt) / (4.0 * pi * rt);
}

NuWavelet nu_wavelet(const SpacetimePoint& z, int nu) {
  if (nu < 0) throw std::invalid_argument("nu_wavelet: nu must be a nonnegative integer");
  require_causal_tube(z.y);
  if (z.y.u < 0) {
    // Psi+-(z) = -Psi-+(-z) for z in the backward tube.
    const NuWavelet m = nu_wavelet(z.negated(), nu);
    return {-m.psi, -m.psi_minus, -m.psi_plus};
  }
  const cplx rt = complex_distance(z.x, z.y).rt();
  const double fact = std::tgamma(nu + 1.0);
  const cplx pref = I * fact / (8.0 * pi * pi * rt);
  const double u = z.y.u;
  const cplx wp = std::pow(u + I * (z.t - rt), -(nu + 1));
  const cplx wm = std::pow(u + I * (z.t + rt), -(nu + 1));
  NuWavelet w;
  w.psi_plus = pref * wp;
  w.psi_minus = -pref * wm;
  w.psi = w.psi_plus + w.psi_minus;
  return w;
}

double peak_pattern(double theta, const SourcePoint& y) {
  return 1.0 / (2.0 * pi * std::abs(y.u - y.a() * std::cos(theta)));
}

double SpacetimeBump::spatial(const Vec3& x) const {
  const double s2 = (x - center).squaredNorm() / (width_x * width_x);
  if (compact) return s2 < 1.0 ? std::pow(1.0 - s2, 4) : 0.0;
  return s2 > 49.0 ? 0.0 : std::exp(-0.5 * s2);
}

double SpacetimeBump::temporal(double t) const {
  const double s = (t - t0) / width_t;
  if (compact) return s * s < 1.0 ? std::pow(1.0 - s * s, 4) : 0.0;
  return std::exp(-0.5 * s * s);
}

double SpacetimeBump::temporal_dt(double t) const {
  const double s = (t - t0) / width_t;
  if (compact) return s * s < 1.0 ? -8.0 * s * std::pow(1.0 - s * s, 3) / width_t : 0.0;
  return -s / width_t * std::exp(-0.5 * s * s);
}

namespace {

// Int_A^B B(t) / (t - t1) dt with Im t1 != 0; the first-order Taylor part of B
// at Re t1 is integrated in closed form so the remainder is smooth.
QuadResult pole_integral(const SpacetimeBump& f, cplx t1, double A, double B, const QuadratureSpec& spec) {
  const double c = t1.real();
  const double bc = f.temporal(c), dbc = f.temporal_dt(c);
  const cplx L0 = std::log(cplx(B) - t1) - std::log(cplx(A) - t1);
  const cplx L1 = (B - A) + (t1 - c) * L0;
  auto rem = [&](double t) { return (f.temporal(t) - bc - dbc * (t - c)) / (t - t1); };
  std::vector<double> pts{A, B};
  if (c > A && c < B) pts = {A, c, B};
  QuadResult r = adaptive_quad(rem, pts, spec);
  r.value += bc * L0 + dbc * L1;
  return r;
}

}  // namespace

ProbeResult minkowski_limit_probe(const SpacetimeBump& f, const SourcePoint& y, const std::vector<double>& eps_list,
                                  Causality which, const ProbeOptions& opt) {
  require_causal_tube(y);
  if (y.u <= 0) throw CausalityError("minkowski_limit_probe: y must lie in the forward cone");
  if (f.center.norm() <= f.radius_x())
    throw std::invalid_argument("minkowski_limit_probe: spatial support must stay away from the origin");

  const double sgn = which == Causality::retarded ? 1.0 : -1.0;
  const double R = f.radius_x();
  const double A = f.t0 - f.radius_t(), B = f.t0 + f.radius_t();
  const GaussRule& rule = gauss_legendre(opt.spatial_nodes);
  const int n = opt.spatial_nodes;

  ProbeResult res;
  res.eps = eps_list;
  for (double eps : eps_list) {
    if (!(eps > 0)) throw std::invalid_argument("minkowski_limit_probe: eps must be > 0");
    const SourcePoint below{eps * y.y, eps * y.u};
    const SourcePoint above{-eps * y.y, -eps * y.u};
    std::vector<int> failed(n * n, 0);
    // One (i, j) column per task; columns are summed in a fixed order so the
    // result does not depend on the thread count.
    auto column = [&](int ij) {
      const int i = ij / n, j = ij % n;
      cplx col{};
      for (int k = 0; k < n; ++k) {
        const Vec3 x = f.center + R * Vec3(rule.x[i], rule.x[j], rule.x[k]);
        const double ax = f.spatial(x);
        if (ax == 0.0) continue;
        cplx acc{};
        for (const SourcePoint* sp : {&below, &above}) {
          const cplx rt = complex_distance(x, *sp).rt();
          // tau - s r~ = t - t1 with tau = t - i u.
          const cplx t1 = sgn * rt + I * sp->u;
          const QuadResult q = pole_integral(f, t1, A, B, opt.t_spec);
          if (!q.converged) ++failed[ij];
          const cplx term = q.value / (8.0 * I * pi * pi * rt);
          acc += sp == &below ? term : -term;
        }
        col += rule.w[i] * rule.w[j] * rule.w[k] * ax * acc;
      }
      return col * (R * R * R);
    };
    const std::vector<cplx> cols = opt.parallel ? evaluate_batch(n * n, column) : evaluate_batch_serial(n * n, column);
    cplx total{};
    for (const cplx& c : cols) total += c;
    for (int v : failed) res.failed_t_integrals += v;
    res.values.push_back(total);
  }
  res.converged = res.failed_t_integrals == 0;
  res.extrapolated = extrapolate_to_zero(res.eps, res.values);
  return res;
}

double shell_integral(const SpacetimeBump& f, int sign, int nodes) {
  const double c = f.center.norm();
  const double R = f.radius_x();
  if (c <= R) throw std::invalid_argument("shell_integral: support must exclude the origin");
  const Vec3 e3 = f.center / c;
  const SourcePoint axis{e3, 0.0};
  const AxisFrame fr = axis_frame(axis);
  const double cmin = std::sqrt(1.0 - (R / c) * (R / c));
  const GaussRule& gr = gauss_legendre(nodes);
  const double r0 = c - R, r1 = c + R;
  double total = 0;
  for (size_t i = 0; i < gr.x.size(); ++i) {
    const double r = 0.5 * (r0 + r1) + 0.5 * (r1 - r0) * gr.x[i];
    const double wr = 0.5 * (r1 - r0) * gr.w[i];
    const double bt = f.temporal(sign * r);
    if (bt == 0.0) continue;
    for (size_t j = 0; j < gr.x.size(); ++j) {
      const double ct = 0.5 * (cmin + 1.0) + 0.5 * (1.0 - cmin) * gr.x[j];
      const double wc = 0.5 * (1.0 - cmin) * gr.w[j];
      const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
      const int nphi = 2 * nodes;
      double sphi = 0;
      for (int k = 0; k < nphi; ++k) {
        const double ph = 2.0 * pi * k / nphi;
        const Vec3 x = r * (ct * fr.e3 + st * (std::cos(ph) * fr.e1 + std::sin(ph) * fr.e2));
        sphi += f.spatial(x);
      }
      // d^3x / (4 pi r) = r dr dcos dphi / (4 pi)
      total += wr * wc * (2.0 * pi * sphi / nphi) * r * bt / (4.0 * pi);
    }
  }
  return total;
}

}  // namespace cb
