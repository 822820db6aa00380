#include "causal_beams/em.hpp"

#include <Eigen/Geometry>

namespace cb {

namespace {

CMat3 cross_matrix(const Vec3& n) {
  CMat3 m;
  m << 0.0, -n.z(), n.y(), n.z(), 0.0, -n.x(), -n.y(), n.x(), 0.0;
  return m;
}

// Eigen's cross() conjugates complex results; this one is bilinear.
CVec3 cross(const CVec3& a, const CVec3& b) {
  return {a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2), a(0) * b(1) - a(1) * b(0)};
}

CVec3 zvec(const SpacetimePoint& z) { return z.x.cast<cplx>() - I * z.y.y.cast<cplx>(); }

}  // namespace

CMat3 spin_matrix(const Vec3& k3, double omega) {
  if (omega == 0.0) throw std::invalid_argument("spin_matrix: omega must be nonzero");
  return I * cross_matrix(k3 / omega);
}

CMat3 helicity_projector(const Vec3& k3, double omega) {
  const CMat3 S = spin_matrix(k3, omega);
  return 0.5 * (S * S + S);
}

ScalarJet propagator_jet(const SpacetimePoint& z, Causality which) {
  require_causal_tube(z.y);
  const ComplexDistance cd = complex_distance(z.x, z.y);
  if (cd.a > 0 && cd.p <= 1e-12 * std::max(cd.a, 1.0))
    throw SingularityError("propagator_jet: point lies on the source disk tube", cd.rho, cd.xi);
  const double s = which == Causality::retarded ? 1.0 : -1.0;
  const cplx c = 1.0 / (8.0 * I * pi * pi);
  const cplx r = cd.rt(), tau = z.tau();
  const cplx D = tau * r - s * r * r;
  const cplx Dr = tau - 2.0 * s * r, Drr = -2.0 * s;
  const cplx D2 = D * D, D3 = D2 * D;
  const cplx Fr = -c * Dr / D2;
  const cplx Frr = c * (2.0 * Dr * Dr / D3 - Drr / D2);
  const cplx Ft = -c * r / D2;
  const cplx Frt = c * (2.0 * Dr * r / D3 - 1.0 / D2);
  const cplx Ftt = 2.0 * c * r * r / D3;

  const CVec3 zv = zvec(z);
  const CVec3 n = zv / r;  // grad r~
  ScalarJet j;
  j.value = c / D;
  j.grad = Fr * n;
  j.hess = Frr * (n * n.transpose()) + (Fr / r) * (CMat3::Identity() - n * n.transpose());
  j.lap = Frr + 2.0 * Fr / r;
  j.dt = Ft;
  j.grad_dt = Frt * n;
  j.dtt = Ftt;
  return j;
}

ScalarJet g4_jet(const SpacetimePoint& z) {
  const CVec3 zv = zvec(z);
  const cplx tau = z.tau();
  const cplx Q = (zv.array() * zv.array()).sum() - tau * tau;
  if (std::abs(Q) == 0.0) throw std::domain_error("g4_jet: z^2 = 0");
  const double c = 1.0 / (4.0 * pi * pi);
  const cplx Q2 = Q * Q, Q3 = Q2 * Q;
  ScalarJet j;
  j.value = c / Q;
  j.grad = (-2.0 * c / Q2) * zv;
  j.hess = (-2.0 * c / Q2) * CMat3::Identity() + (8.0 * c / Q3) * (zv * zv.transpose());
  j.lap = j.hess.trace();
  j.dt = 2.0 * c * tau / Q2;
  j.grad_dt = (-8.0 * c * tau / Q3) * zv;
  j.dtt = 2.0 * c / Q2 + 8.0 * c * tau * tau / Q3;
  return j;
}

CVec3 apply_L(const ScalarJet& phi, const CVec3& p) {
  return phi.hess * p - phi.lap * p + I * cross(phi.grad_dt, p);
}

CVec3 dipole_potential(const SpacetimePoint& z, const CVec3& p, Causality which) {
  return extended_propagator(z, which) * p;
}

CVec3 dipole_field(const SpacetimePoint& z, const CVec3& p, Causality which) {
  return I * apply_L(propagator_jet(z, which), p);
}

CMat3 wavelet_dyadic(const SpacetimePoint& z) {
  const ScalarJet g = g4_jet(z);
  CMat3 W;
  for (int j = 0; j < 3; ++j) W.col(j) = -0.5 * apply_L(g, CVec3::Unit(j));
  return W;
}

CMat3 wavelet_dyadic_split(const SpacetimePoint& z, Causality which) {
  const ScalarJet d = propagator_jet(z, which);
  CMat3 W;
  for (int j = 0; j < 3; ++j) W.col(j) = 0.5 * I * apply_L(d, CVec3::Unit(j));
  return W;
}

CMat3 reproducing_kernel(const SpacetimePoint& z1, const SpacetimePoint& z2) {
  const double yy = z1.y.y.dot(z2.y.y) - z1.y.u * z2.y.u;
  if (-yy <= 0.0) return CMat3::Zero();
  const SpacetimePoint d{z1.x - z2.x, z1.t - z2.t, {z1.y.y + z2.y.y, z1.y.u + z2.y.u}};
  // The Gram integral equals -W: the closed form above carries the opposite sign
  // to the positive-measure light-cone integral.
  return -wavelet_dyadic(d);
}

cplx hertz_potential_ft(const WaveVector& k, const SourcePoint& y) {
  if (!(k.omega > 0)) throw std::domain_error("hertz_potential_ft: omega must be > 0");
  return std::get<cplx>(pulsed_beam_ft(k, y, Impulse{}));
}

CVec3 em_wavelet_ft(const WaveVector& k, const SourcePoint& y, const CVec3& p) {
  const cplx z = hertz_potential_ft(k, y);
  const CVec3 kc = k.k.cast<cplx>();
  return -z * (I * cross(kc, cross(kc, p)) + k.omega * cross(kc, p));
}

}  // namespace cb
