#include "causal_beams/geometry.hpp"

#include <Eigen/Geometry>

#include <cmath>

namespace cb {

namespace {

double singular_radius(double a) { return 1e-13 * std::max(a, 1.0); }

struct PQ {
  double p, q;
};

// sqrt(rho^2 + (xi - i a)^2) split into p - i q with p >= 0, computed from
// d = r^2 - a^2 and the modulus so neither branch loses digits.
PQ split_root(double rho, double xi, double a) {
  const double d = (rho - a) * (rho + a) + xi * xi;
  const double m = std::hypot(d, 2.0 * a * xi);
  double p, q;
  if (d >= 0.0) {
    p = std::sqrt(0.5 * (m + d));
    q = p > 0.0 ? a * xi / p : 0.0;
  } else {
    const double qa = std::sqrt(0.5 * (m - d));
    q = std::signbit(xi) && xi != 0.0 ? -qa : qa;
    p = xi == 0.0 ? 0.0 : std::abs(a * xi / q);
  }
  q = std::clamp(q, -a, a);
  return {p, q};
}

}  // namespace

Vec3 SourcePoint::y_hat() const {
  const double n = a();
  if (n == 0.0) return Vec3::UnitZ();
  return y / n;
}

AxisFrame axis_frame(const SourcePoint& y) {
  AxisFrame f;
  f.e3 = y.y_hat();
  const Vec3 ref = std::abs(f.e3.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  f.e1 = (ref - ref.dot(f.e3) * f.e3).normalized();
  f.e2 = f.e3.cross(f.e1);
  return f;
}

ComplexDistance complex_distance(const Vec3& x, const SourcePoint& y) {
  const AxisFrame fr = axis_frame(y);
  ComplexDistance cd;
  cd.a = y.a();
  cd.r = x.norm();
  cd.xi = x.dot(fr.e3);
  const Vec3 perp = x - cd.xi * fr.e3;
  cd.rho = perp.norm();
  cd.phi = std::atan2(perp.dot(fr.e2), perp.dot(fr.e1));
  if (cd.a == 0.0) {
    cd.p = cd.r;
    cd.q = 0.0;
  } else {
    const PQ pq = split_root(cd.rho, cd.xi, cd.a);
    cd.p = pq.p;
    cd.q = pq.q;
  }
  if (std::sqrt(cd.abs_sq()) < singular_radius(cd.a))
    throw SingularityError("complex_distance: point on the branch circle", cd.rho, cd.xi);
  return cd;
}

cplx complex_distance_cyl(double rho, double xi, double a) {
  if (a == 0.0) return std::hypot(rho, xi);
  const PQ pq = split_root(rho, xi, std::abs(a));
  // Negative a mirrors the source: sqrt(rho^2 + (xi + i|a|)^2) is the conjugate.
  return a > 0.0 ? cplx(pq.p, -pq.q) : cplx(pq.p, pq.q);
}

Vec3 from_os(double p, double q, double phi, const SourcePoint& y) {
  const double a = y.a();
  if (a == 0.0) throw std::invalid_argument("from_os: oblate spheroidal coordinates need a > 0");
  if (p < 0.0) throw std::invalid_argument("from_os: p must be >= 0");
  if (std::abs(q) > a) throw std::invalid_argument("from_os: |q| must not exceed a");
  const AxisFrame fr = axis_frame(y);
  const double xi = p * q / a;
  const double rho = std::sqrt((p * p + a * a) * (a - q) * (a + q)) / a;
  return xi * fr.e3 + rho * (std::cos(phi) * fr.e1 + std::sin(phi) * fr.e2);
}

OsFrame os_frame(const Vec3& x, const SourcePoint& y) {
  const ComplexDistance cd = complex_distance(x, y);
  const double n2 = cd.abs_sq();
  OsFrame f;
  f.grad_p = (cd.p * x + cd.q * y.y) / n2;
  f.grad_q = (cd.p * y.y - cd.q * x) / n2;
  f.lap_p = 2.0 * cd.p / n2;
  f.lap_q = -2.0 * cd.q / n2;
  return f;
}

FarZone far_zone(const Vec3& x, const SourcePoint& y) {
  const double r = x.norm();
  if (!(r > 0.0)) throw std::invalid_argument("far_zone: r must be > 0");
  const double cos_theta = x.dot(y.y_hat()) / r;
  return {r, y.a() * cos_theta};
}

}  // namespace cb
